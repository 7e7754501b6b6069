// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/pipeline.hpp"
#include "antimagic/polynomial.hpp"
#include "antimagic/sampling.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace antimagic;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Tally {
    std::size_t greedy_steps_checked = 0;
    std::size_t greedy_records = 0;
    std::size_t budget_violations = 0;
    std::vector<std::string> budget_failures;
};

Tally tally;

// Independent recomputation of the stage-1 budget from the trace record.
std::size_t expected_budget(const TraceRecord& r, bool oriented) {
    const std::size_t e2 = r.greedy_steps;
    const std::size_t s = r.odd_components;
    return (e2 == 0 ? 0 : e2 - 1) + (oriented ? 0 : 2) + (s == 0 ? 0 : s - 1);
}

void audit_trace(const SolveResult& r, bool oriented, const std::string& label) {
    for (const auto& t : r.trace) {
        if (t.stage != "base-greedy") continue;
        ++tally.greedy_records;
        tally.greedy_steps_checked += t.greedy_steps;
        if (t.forbidden_budget != expected_budget(t, oriented) || t.max_forbidden > t.forbidden_budget) {
            ++tally.budget_violations;
            if (tally.budget_failures.size() < 5) tally.budget_failures.push_back(label);
        }
    }
}

SolveResult solve_undirected(const Graph& g, const Weighting& w, const ListAssignment& lists) {
    SolveRequest req;
    req.graph = g;
    req.variant = Variant::weighted_list_quasi_antimagic;
    req.weights = w;
    req.lists = lists;
    return solve(req);
}

SolveResult solve_oriented(const Graph& g) {
    SolveRequest req;
    req.graph = g;
    req.variant = Variant::quasi_oriented_antimagic;
    return solve(req);
}

std::int64_t undirected_k(const Graph& g) { return theorem_k(g.vertex_count(), Variant::weighted_list_quasi_antimagic); }
std::int64_t oriented_k(const Graph& g) { return theorem_k(g.vertex_count(), Variant::quasi_oriented_antimagic); }

std::vector<Graph> catalog_up_to(std::size_t n_max, bool connected, std::size_t n_min = 1) {
    std::vector<Graph> out;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (auto& g : graph_catalog(n, connected)) out.push_back(std::move(g));
    return out;
}

// ------------------------------------------------------------ criteria

Outcome vandermonde() {
    std::size_t checked = 0;
    for (unsigned N = 2; N <= 4; ++N)
        for (unsigned s = 0; s <= 2; ++s) {
            const Integer c = coefficient_of(vandermonde_power(N, 2 * s + 1), vandermonde_target(N, s));
            if (abs(c) != vandermonde_coefficient_formula(N, s))
                return {false, "mismatch at N=" + std::to_string(N) + " s=" + std::to_string(s)};
            ++checked;
        }
    return {true, std::to_string(checked) + "/9 exact matches"};
}

Outcome reduction_certificates() {
    std::size_t nonzero = 0;
    for (ReductionMode mode : {ReductionMode::undirected, ReductionMode::oriented})
        for (unsigned n = 4; n <= 14; ++n) {
            const auto cert = certify_reduction_monomial(n, mode);
            const auto abc = reduction_exponents(n, mode);
            if (static_cast<long>(abc[0] + abc[1] + abc[2]) != 4L * n - (mode == ReductionMode::undirected ? 7 : 4))
                return {false, "exponents do not sum to the degree at n=" + std::to_string(n)};
            if (cert.coefficient != reduction_coefficient_multinomial(n, mode, abc))
                return {false, "expansion and multinomial routes disagree at n=" + std::to_string(n)};
            if (cert.nonzero != (cert.coefficient != 0)) return {false, "nonzero flag inconsistent"};
            if (cert.nonzero) ++nonzero;
        }
    return {nonzero == 22, std::to_string(nonzero) + "/22 nonzero"};
}

Outcome undirected_theorem() {
    const auto graphs = catalog_up_to(6, true, 3);
    std::size_t runs = 0, passed = 0;
    std::string first_failure;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        const std::size_t size = g.edge_count() + static_cast<std::size_t>(undirected_k(g));
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            std::mt19937_64 rng(1000 * gi + seed);
            const Weighting w = sample_adversarial_weighting(g, rng);
            const ListAssignment lists = sample_adversarial_lists(g, size, rng);
            ++runs;
            const std::string label = "graph " + std::to_string(gi) + " seed " + std::to_string(seed);
            try {
                const SolveResult r = solve_undirected(g, w, lists);
                audit_trace(r, false, label);
                if (r.success &&
                    verify_quasi_antimagic(g, r.labeling, w, SumMode::undirected, std::nullopt, &lists).ok)
                    ++passed;
                else if (first_failure.empty())
                    first_failure = label;
            } catch (const std::exception& e) {
                if (first_failure.empty()) first_failure = label + ": " + e.what();
            }
        }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(runs) + " runs over " +
                         std::to_string(graphs.size()) + " graphs";
    if (!first_failure.empty()) detail += "; first failure " + first_failure;
    return {passed == runs, detail};
}

Outcome oriented_theorem() {
    const auto graphs = catalog_up_to(6, false);
    std::size_t passed = 0;
    std::string first_failure;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        const std::string label = "graph " + std::to_string(gi);
        try {
            const SolveResult r = solve_oriented(g);
            audit_trace(r, true, label);
            const auto bound = static_cast<std::int64_t>(g.edge_count()) + oriented_k(g);
            if (r.success && verify_quasi_antimagic(g, r.labeling, {}, SumMode::oriented, bound).ok)
                ++passed;
            else if (first_failure.empty())
                first_failure = label;
        } catch (const std::exception& e) {
            if (first_failure.empty()) first_failure = label + ": " + e.what();
        }
    }
    std::string detail = std::to_string(passed) + "/" + std::to_string(graphs.size()) + " graphs";
    if (!first_failure.empty()) detail += "; first failure " + first_failure;
    return {passed == graphs.size(), detail};
}

Outcome oracle_cross_check() {
    constexpr std::uint64_t cap = 1'000'000'000'000'000ULL;
    const auto graphs = catalog_up_to(5, false);
    std::size_t confirmed = 0, runs = 0;
    std::string first_failure;
    auto confirm = [&](const SolveResult& r, OracleQuery q, const std::string& label) {
        ++runs;
        if (!r.success) {
            if (first_failure.empty()) first_failure = label + ": pipeline failed";
            return;
        }
        q.mode = OracleMode::exists;
        q.cap = cap;
        try {
            if (brute_force(q).exists)
                ++confirmed;
            else if (first_failure.empty())
                first_failure = label + ": oracle found nothing";
        } catch (const std::exception& e) {
            if (first_failure.empty()) first_failure = label + ": " + e.what();
        }
    };
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        const std::string label = "graph " + std::to_string(gi);
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            std::mt19937_64 rng(seed * 7919 + gi);
            // Seed 0 keeps the zero weighting and the default range lists.
            const Weighting w = seed == 0 ? Weighting{} : sample_adversarial_weighting(g, rng);
            const std::size_t size = g.edge_count() + static_cast<std::size_t>(undirected_k(g));
            const ListAssignment lists = seed == 0 ? range_lists(g, static_cast<std::int64_t>(size))
                                                   : sample_adversarial_lists(g, size, rng);
            OracleQuery q;
            q.graph = g;
            q.variant = OracleVariant::weighted_list_quasi_antimagic;
            q.k = undirected_k(g);
            q.weights = w;
            q.lists = lists;
            confirm(solve_undirected(g, w, lists), q, label + " undirected seed " + std::to_string(seed));
        }
        OracleQuery q;
        q.graph = g;
        q.variant = OracleVariant::quasi_oriented_antimagic;
        q.k = oriented_k(g);
        confirm(solve_oriented(g), q, label + " oriented");
    }

    // Classical families with k = 0 under the plain definition.
    std::size_t classical = 0, classical_ok = 0;
    auto classic = [&](const Graph& g, const std::string& name) {
        ++classical;
        OracleQuery q;
        q.graph = g;
        q.variant = OracleVariant::antimagic;
        q.k = 0;
        q.mode = OracleMode::find_one;
        q.cap = cap;
        if (brute_force(q).exists)
            ++classical_ok;
        else if (first_failure.empty())
            first_failure = name + " not antimagic";
    };
    for (std::size_t n = 3; n <= 7; ++n) {
        classic(path_graph(n), "P" + std::to_string(n));
        classic(cycle_graph(n), "C" + std::to_string(n));
    }
    for (std::size_t n = 3; n <= 5; ++n) classic(complete_graph(n), "K" + std::to_string(n));
    for (std::size_t n = 4; n <= 6; ++n) classic(wheel_graph(n), "W" + std::to_string(n));

    std::string detail = std::to_string(confirmed) + "/" + std::to_string(runs) + " pipeline runs confirmed; " +
                         std::to_string(classical_ok) + "/" + std::to_string(classical) + " classical checks";
    if (!first_failure.empty()) detail += "; first failure " + first_failure;
    return {confirmed == runs && classical_ok == classical, detail};
}

Outcome conservation() {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<long> num(-50, 50), den(1, 6);
    std::size_t ok = 0;
    constexpr std::size_t trials = 10'000;
    for (std::size_t t = 0; t < trials; ++t) {
        const Graph g = random_graph(1 + rng() % 12, 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0,
                                     SIZE_MAX, rng);
        const Weighting w = sample_adversarial_weighting(g, rng);
        Labeling f;
        f.orientation = Orientation::ascending(g);
        for (const auto& e : g.edges()) {
            f.labels[e] = make_rational(num(rng), den(rng));
            if (rng() & 1U) f.orientation->flip(e);
        }
        Rational weighted = 0, oriented = 0, weights = 0, labels = 0;
        for (const auto& [v, s] : vertex_sums(g, f, w)) weighted += s;
        for (const auto& [v, s] : oriented_vertex_sums(g, f)) oriented += s;
        for (VertexId v : g.vertices()) weights += w.at(v);
        for (const auto& [e, x] : f.labels) labels += x;
        if (oriented == 0 && weighted == weights + 2 * labels) ++ok;
    }
    return {ok == trials, std::to_string(ok) + "/" + std::to_string(trials) + " triples"};
}

Outcome greedy_budget() {
    std::string detail = std::to_string(tally.greedy_records) + " greedy stages, " +
                         std::to_string(tally.greedy_steps_checked) + " steps, " +
                         std::to_string(tally.budget_violations) + " over budget";
    for (const auto& f : tally.budget_failures) detail += "; " + f;
    return {tally.budget_violations == 0 && tally.greedy_records > 0, detail};
}

bool report(const std::string& name, double limit_seconds, const std::function<Outcome()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = fn();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || seconds <= limit_seconds;
    const bool pass = out.ok && in_time;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds << "s";
    if (limit_seconds > 0) time << " (limit " << static_cast<int>(limit_seconds) << "s)";
    std::printf("%s  %-34s %s, %s\n", pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(), time.str().c_str());
    std::fflush(stdout);
    return pass;
}

} // namespace

int main() {
    bool all = true;
    all &= report("vandermonde-coefficient-formula", 60, vandermonde);
    all &= report("reduction-certificates-n4-14", 120, reduction_certificates);
    all &= report("undirected-theorem-n<=6", 600, undirected_theorem);
    all &= report("oriented-theorem-n<=6", 600, oriented_theorem);
    all &= report("oracle-cross-check-n<=5", 0, oracle_cross_check);
    all &= report("conservation-and-handshake", 0, conservation);
    all &= report("greedy-forbidden-budget", 0, greedy_budget);
    return all ? 0 : 1;
}
