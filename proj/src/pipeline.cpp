#include "antimagic/pipeline.hpp"

#include "antimagic/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

namespace antimagic {

std::string to_string(Variant v) {
    return v == Variant::weighted_list_quasi_antimagic ? "weighted-list-quasi-antimagic" : "quasi-oriented-antimagic";
}

Variant parse_variant(const std::string& name) {
    if (name == "weighted-list" || name == "weighted-list-quasi-antimagic") return Variant::weighted_list_quasi_antimagic;
    if (name == "oriented" || name == "quasi-oriented-antimagic") return Variant::quasi_oriented_antimagic;
    throw ContractError("unknown variant '" + name + "'");
}

std::int64_t theorem_k(std::size_t n, Variant v) {
    const auto nn = static_cast<std::int64_t>(n);
    return v == Variant::weighted_list_quasi_antimagic ? (4 * nn) / 3 : (2 * nn) / 3;
}

namespace {

Rational to_rational(std::int64_t v) { return Rational(static_cast<long>(v)); }

[[noreturn]] void fail(const StageOptions& options, const std::string& what) {
    if (options.guaranteed) throw InternalCertificateError(what);
    throw SearchFailure(what);
}

void record(const StageOptions& options, TraceRecord r) {
    if (!options.trace) return;
    r.depth = options.depth;
    options.trace->push_back(std::move(r));
}

// Budget for one greedy step: (|E''| - 1) used labels, `extra` local
// collisions, and s - 1 uncovered-vertex collisions (none when s == 0).
std::size_t greedy_budget(std::size_t complement_size, std::size_t extra, std::size_t s) {
    return (complement_size == 0 ? 0 : complement_size - 1) + extra + (s == 0 ? 0 : s - 1);
}

// 1, -1, 2, -2, ..., bound, -bound with the absolute values in `skip` left out.
std::vector<Rational> signed_range(std::int64_t bound, const std::set<Rational>& skip) {
    std::vector<Rational> out;
    for (std::int64_t i = 1; i <= bound; ++i) {
        Rational r = to_rational(i);
        if (skip.contains(r)) continue;
        out.push_back(r);
        out.push_back(-r);
    }
    return out;
}

std::vector<Rational> take_prefix(const std::vector<Rational>& values, std::size_t size, const StageOptions& options,
                                  const std::string& what) {
    if (values.size() < size) {
        if (options.guaranteed) return pick_candidate_sets(values, size, what);  // throws
        return values;
    }
    return pick_candidate_sets(values, size, what);
}

SearchOutcome run_search(const ConstraintSystem& cs, const StageOptions& options, const std::string& what) {
    SearchOutcome outcome = solve_constraints(cs, options.search);
    if (!outcome.assignment) {
        if (outcome.budget_exceeded) {
            // Budget exhaustion is not evidence against the certificate.
            throw SearchFailure(what + ": node budget of " + std::to_string(options.search.budget) + " exceeded");
        }
        fail(options, what + ": candidate product exhausted without a solution");
    }
    return outcome;
}

} // namespace

Labeling base_case_undirected(const Graph& g, const Weighting& w, const ListAssignment& lists,
                              const StageOptions& options) {
    const Matching matching = max_matching_deg2(g);
    const auto& complement = matching.complement;
    const auto& uncovered = matching.uncovered;
    const std::size_t s = uncovered.size();
    const std::set<VertexId> uncovered_set(uncovered.begin(), uncovered.end());

    std::map<VertexId, Rational> sums;
    for (VertexId v : g.vertices()) sums[v] = w.at(v);

    Labeling f;
    std::set<Rational> used;

    TraceRecord greedy;
    greedy.stage = "base-greedy";
    greedy.edges = g.edge_count();
    greedy.odd_components = s;
    greedy.forbidden_budget = greedy_budget(complement.size(), 2, s);

    // Stage 1.
    for (const Edge& e : complement) {
        std::vector<Rational> forbidden(used.begin(), used.end());
        for (VertexId p : {e.u, e.v}) {
            for (VertexId u : g.neighbors(p))
                if (!e.contains(u)) forbidden.push_back(sums[u] - sums[p]);
            if (uncovered_set.contains(p))
                for (VertexId q : uncovered)
                    if (q != p) forbidden.push_back(sums[q] - sums[p]);
        }
        greedy.max_forbidden = std::max(greedy.max_forbidden, forbidden.size());
        if (forbidden.size() > greedy.forbidden_budget)
            throw InternalCertificateError("greedy step at " + edge_key(e) + " forbids " +
                                           std::to_string(forbidden.size()) + " values, budget " +
                                           std::to_string(greedy.forbidden_budget));
        std::sort(forbidden.begin(), forbidden.end());
        const auto& list = lists.at(e);
        auto pick = std::find_if(list.begin(), list.end(), [&](const Rational& x) {
            return !std::binary_search(forbidden.begin(), forbidden.end(), x);
        });
        if (pick == list.end()) fail(options, "no admissible greedy label for " + edge_key(e));
        f.labels[e] = *pick;
        used.insert(*pick);
        sums[e.u] += *pick;
        sums[e.v] += *pick;
        ++greedy.greedy_steps;
    }
    record(options, greedy);

    // Stage 2: one variable per matching edge.
    const auto& matched = matching.edges;
    const std::size_t k = matched.size();
    const auto extra = static_cast<unsigned>(2 * s + complement.size());
    const CoefficientCertificate cert = certify_base_case(static_cast<unsigned>(k), extra, ReductionMode::undirected);

    ConstraintSystem cs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t need = cert.exponents[i] + 1;
        cs.set_candidates(i, take_prefix(lists.at(matched[i]), need, options, "list of " + edge_key(matched[i])),
                          need);
    }
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            cs.add_distinct(i, j);
            for (VertexId u : {matched[i].u, matched[i].v})
                for (VertexId u2 : {matched[j].u, matched[j].v})
                    cs.add({{{i, 1}, {j, -1}}, sums[u] - sums[u2], ConstraintKind::sum_collision});
        }
        for (const Edge& e : complement)
            cs.add({{{i, 1}}, -f.labels.at(e), ConstraintKind::forbidden_value});
        for (VertexId vj : uncovered)
            for (VertexId u : {matched[i].u, matched[i].v})
                cs.add({{{i, 1}}, sums[u] - sums[vj], ConstraintKind::sum_collision});
    }
    const SearchOutcome outcome = run_search(cs, options, "base case matching stage");
    for (std::size_t i = 0; i < k; ++i) f.labels[matched[i]] = (*outcome.assignment)[i];

    TraceRecord cn;
    cn.stage = "base-cn";
    cn.edges = g.edge_count();
    cn.variables = k;
    cn.nodes = outcome.nodes_explored;
    cn.certificate = cert;
    record(options, cn);
    return f;
}

Labeling base_case_oriented(const Graph& g, std::int64_t label_bound, const StageOptions& options) {
    const Matching matching = max_matching_deg2(g);
    const auto& complement = matching.complement;
    const auto& uncovered = matching.uncovered;
    const std::size_t s = uncovered.size();
    const std::set<VertexId> uncovered_set(uncovered.begin(), uncovered.end());

    Labeling f;
    f.orientation = Orientation::ascending(g);
    std::map<VertexId, Rational> sums;
    for (VertexId v : g.vertices()) sums[v] = 0;
    std::set<Rational> used;

    TraceRecord greedy;
    greedy.stage = "base-greedy";
    greedy.edges = g.edge_count();
    greedy.odd_components = s;
    greedy.forbidden_budget = greedy_budget(complement.size(), 0, s);

    for (const Edge& e : complement) {
        const Arc arc = f.orientation->at(e);
        std::vector<Rational> forbidden(used.begin(), used.end());
        for (VertexId p : {arc.tail, arc.head}) {
            if (!uncovered_set.contains(p)) continue;
            const int sign = p == arc.head ? 1 : -1;
            for (VertexId q : uncovered)
                if (q != p) forbidden.push_back((sums[q] - sums[p]) * sign);
        }
        greedy.max_forbidden = std::max(greedy.max_forbidden, forbidden.size());
        if (forbidden.size() > greedy.forbidden_budget)
            throw InternalCertificateError("oriented greedy step at " + edge_key(e) + " forbids " +
                                           std::to_string(forbidden.size()) + " values, budget " +
                                           std::to_string(greedy.forbidden_budget));
        std::sort(forbidden.begin(), forbidden.end());
        std::optional<Rational> pick;
        for (std::int64_t x = 1; x <= label_bound && !pick; ++x)
            if (!std::binary_search(forbidden.begin(), forbidden.end(), to_rational(x))) pick = to_rational(x);
        if (!pick) fail(options, "no admissible greedy label for " + edge_key(e));
        f.labels[e] = *pick;
        used.insert(*pick);
        sums[arc.head] += *pick;
        sums[arc.tail] -= *pick;
        ++greedy.greedy_steps;
    }
    record(options, greedy);

    const auto& matched = matching.edges;
    const std::size_t k = matched.size();
    const auto extra = static_cast<unsigned>(1 + 2 * s + 2 * complement.size());
    const CoefficientCertificate cert = certify_base_case(static_cast<unsigned>(k), extra, ReductionMode::oriented);
    const std::vector<Rational> signed_values = signed_range(label_bound, {});

    std::vector<VertexId> heads(k), tails(k);
    for (std::size_t i = 0; i < k; ++i) {
        heads[i] = f.orientation->at(matched[i]).head;
        tails[i] = f.orientation->at(matched[i]).tail;
    }

    ConstraintSystem cs(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t need = cert.exponents[i] + 1;
        cs.set_candidates(i, take_prefix(signed_values, need, options, "signed range of " + edge_key(matched[i])),
                          need);
    }
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& hi = sums[heads[i]];
        const Rational& ti = sums[tails[i]];
        cs.add({{{i, 2}}, hi - ti, ConstraintKind::sum_collision});
        for (std::size_t j = i + 1; j < k; ++j) {
            const Rational& hj = sums[heads[j]];
            const Rational& tj = sums[tails[j]];
            cs.add_distinct(i, j);
            cs.add({{{i, 1}, {j, 1}}, 0, ConstraintKind::signed_collision});
            cs.add({{{i, 1}, {j, -1}}, hi - hj, ConstraintKind::sum_collision});
            cs.add({{{i, 1}, {j, 1}}, hi - tj, ConstraintKind::sum_collision});
            cs.add({{{i, -1}, {j, 1}}, ti - tj, ConstraintKind::sum_collision});
            cs.add({{{i, -1}, {j, -1}}, ti - hj, ConstraintKind::sum_collision});
        }
        for (VertexId vj : uncovered) {
            cs.add({{{i, 1}}, hi - sums[vj], ConstraintKind::sum_collision});
            cs.add({{{i, -1}}, ti - sums[vj], ConstraintKind::sum_collision});
        }
        for (const Edge& e : complement) {
            cs.add({{{i, 1}}, -f.labels.at(e), ConstraintKind::forbidden_value});
            cs.add({{{i, 1}}, f.labels.at(e), ConstraintKind::signed_collision});
        }
    }
    const SearchOutcome outcome = run_search(cs, options, "oriented base case matching stage");
    for (std::size_t i = 0; i < k; ++i) {
        const Rational& x = (*outcome.assignment)[i];
        if (x < 0) {
            f.orientation->flip(matched[i]);
            f.labels[matched[i]] = -x;
        } else {
            f.labels[matched[i]] = x;
        }
    }

    TraceRecord cn;
    cn.stage = "base-cn";
    cn.edges = g.edge_count();
    cn.variables = k;
    cn.nodes = outcome.nodes_explored;
    cn.certificate = cert;
    record(options, cn);
    return f;
}

CoefficientCertificate reduction_certificate(unsigned n, ReductionMode mode) {
    static std::mutex mutex;
    static std::map<std::pair<unsigned, ReductionMode>, CoefficientCertificate> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, mode}); it != cache.end()) return it->second;
    }
    CoefficientCertificate cert;
    const auto abc = reduction_exponents(n, mode);
    cert.exponents.assign(abc.begin(), abc.end());
    cert.coefficient = reduction_coefficient_multinomial(n, mode, abc);
    cert.provenance = "reduction/" + to_string(mode) + " n=" + std::to_string(n);
    if (cert.coefficient == 0) {
        // Designated monomial failed: take the top-degree monomial with
        // nonzero coefficient whose largest exponent is smallest.
        const Polynomial h = build_h_reduction(n, mode);
        std::optional<std::pair<std::uint32_t, Exponents>> best;
        for (const auto& [e, c] : h.terms()) {
            const auto top = *std::max_element(e.begin(), e.end());
            if (!best || top < best->first || (top == best->first && e < best->second)) best = {{top, e}};
        }
        if (best) {
            cert.exponents = best->second;
            cert.coefficient = h.coefficient(cert.exponents);
            cert.provenance += " fallback";
        }
    }
    cert.nonzero = cert.coefficient != 0;
    std::lock_guard lock(mutex);
    cache.emplace(std::pair{n, mode}, cert);
    return cert;
}

ConstraintSystem extension_system(const Graph& g, const ThreePlusVertex& at, const Labeling& inner,
                                  const ExtensionInput& input, const CoefficientCertificate& cert,
                                  const StageOptions& options) {
    const bool oriented = input.variant == Variant::quasi_oriented_antimagic;
    const Graph reduced = g.without_edges(at.edges);
    const VertexSums sums = oriented ? oriented_vertex_sums(reduced, inner)
                                     : vertex_sums(reduced, inner, input.weights ? *input.weights : Weighting{});
    const VertexId v = at.vertex;
    std::vector<VertexId> others;
    for (VertexId w : g.vertices())
        if (w != v && std::find(at.neighbors.begin(), at.neighbors.end(), w) == at.neighbors.end())
            others.push_back(w);

    std::set<Rational> used;
    for (const auto& [e, x] : inner.labels) used.insert(x);

    ConstraintSystem cs(3);
    for (std::size_t i = 0; i < 3; ++i) {
        const Edge& e = at.edges[i];
        std::vector<Rational> pool;
        if (oriented) {
            pool = signed_range(input.label_bound, used);
        } else {
            for (const Rational& x : input.lists->at(e))
                if (!used.contains(x)) pool.push_back(x);
        }
        const std::size_t need = cert.exponents[i] + 1;
        cs.set_candidates(i, take_prefix(pool, need, options, "available labels of " + edge_key(e)), need);
    }

    const Rational& sv = sums.at(v);
    const std::vector<std::pair<std::size_t, long>> all_three{{0, 1}, {1, 1}, {2, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            cs.add_distinct(i, j);
            if (oriented) cs.add({{{i, 1}, {j, 1}}, 0, ConstraintKind::signed_collision});
        }
    for (VertexId w : others) {
        const Rational& sw = sums.at(w);
        cs.add({all_three, sv - sw, ConstraintKind::sum_collision});
        for (std::size_t i = 0; i < 3; ++i)
            cs.add({{{i, oriented ? -1 : 1}}, sums.at(at.neighbors[i]) - sw, ConstraintKind::sum_collision});
    }
    for (std::size_t i = 0; i < 3; ++i) {
        // v against u_i: v gains all three labels, u_i gains its own (its
        // negation in the oriented case).
        auto terms = all_three;
        terms[i].second = oriented ? 2 : 0;
        std::erase_if(terms, [](const auto& t) { return t.second == 0; });
        cs.add({terms, sv - sums.at(at.neighbors[i]), ConstraintKind::sum_collision});
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const long sign = oriented ? -1 : 1;
            cs.add({{{i, sign}, {j, -sign}}, sums.at(at.neighbors[i]) - sums.at(at.neighbors[j]),
                    ConstraintKind::sum_collision});
        }

    return cs;
}

Labeling extend_reduction(const Graph& g, const ThreePlusVertex& at, const Labeling& inner,
                          const ExtensionInput& input, const StageOptions& options) {
    const bool oriented = input.variant == Variant::quasi_oriented_antimagic;
    const VertexId v = at.vertex;
    const auto n = static_cast<unsigned>(g.vertex_count());
    const CoefficientCertificate cert =
        reduction_certificate(n, oriented ? ReductionMode::oriented : ReductionMode::undirected);
    if (!cert.nonzero) fail(options, "no nonzero top-degree coefficient for n=" + std::to_string(n));
    const ConstraintSystem cs = extension_system(g, at, inner, input, cert, options);

    const SearchOutcome outcome = run_search(cs, options, "extension at vertex " + std::to_string(v));

    Labeling out = inner;
    for (std::size_t i = 0; i < 3; ++i) {
        const Rational& x = (*outcome.assignment)[i];
        const Edge& e = at.edges[i];
        if (oriented) {
            if (!out.orientation) out.orientation = Orientation{};
            // Positive: u_i -> v. Negative: v -> u_i.
            out.orientation->set(e, x > 0 ? Arc{at.neighbors[i], v} : Arc{v, at.neighbors[i]});
            out.labels[e] = x > 0 ? x : Rational(-x);
        } else {
            out.labels[e] = x;
        }
    }

    TraceRecord rec;
    rec.stage = "extend-cn";
    rec.edges = g.edge_count();
    rec.vertex = v;
    rec.removed.assign(at.edges.begin(), at.edges.end());
    rec.variables = 3;
    rec.nodes = outcome.nodes_explored;
    rec.certificate = cert;
    record(options, rec);
    return out;
}

SolveResult solve(const SolveRequest& request) {
    const Graph& g = request.graph;
    const std::size_t n = g.vertex_count();
    const auto m = static_cast<std::int64_t>(g.edge_count());
    const std::int64_t bound_k = theorem_k(n, request.variant);
    const bool oriented = request.variant == Variant::quasi_oriented_antimagic;

    SolveResult result;
    result.k = request.k_override.value_or(bound_k);
    if (result.k < 0) throw ContractError("k must be non-negative");

    ListAssignment lists;
    if (!oriented) {
        lists = request.lists ? *request.lists : range_lists(g, m + result.k);
        for (const auto& e : g.edges()) {
            auto it = lists.lists.find(e);
            const std::size_t have = it == lists.lists.end() ? 0 : it->second.size();
            if (static_cast<std::int64_t>(have) < m + result.k)
                throw InfeasibleInstance("list of edge " + edge_key(e) + " has " + std::to_string(have) +
                                         " values; m + k = " + std::to_string(m + result.k) + " required");
        }
    }

    StageOptions options;
    options.search = request.search;
    options.guaranteed = result.k >= bound_k;
    options.trace = &result.trace;

    // Peel 3+-vertices.
    struct Step {
        Graph graph;
        ThreePlusVertex at;
    };
    std::vector<Step> steps;
    Graph current = g;
    while (auto at = find_3plus_vertex(current)) {
        TraceRecord rec;
        rec.stage = "reduce";
        rec.depth = steps.size();
        rec.edges = current.edge_count();
        rec.vertex = at->vertex;
        rec.removed.assign(at->edges.begin(), at->edges.end());
        result.trace.push_back(rec);
        Graph next = current.without_edges(at->edges);
        steps.push_back({std::move(current), *at});
        current = std::move(next);
    }

    try {
        options.depth = steps.size();
        Labeling f = oriented ? base_case_oriented(current, static_cast<std::int64_t>(current.edge_count()) + result.k,
                                                   options)
                              : base_case_undirected(current, request.weights, lists, options);
        for (std::size_t i = steps.size(); i-- > 0;) {
            options.depth = i;
            ExtensionInput input;
            input.variant = request.variant;
            input.weights = &request.weights;
            input.lists = &lists;
            input.label_bound = static_cast<std::int64_t>(steps[i].graph.edge_count()) + result.k;
            f = extend_reduction(steps[i].graph, steps[i].at, f, input, options);
        }
        result.labeling = std::move(f);
    } catch (const SearchFailure& e) {
        result.success = false;
        result.failure = e.what();
        return result;
    }

    result.report = oriented
                        ? verify_quasi_antimagic(g, result.labeling, {}, SumMode::oriented, m + result.k)
                        : verify_quasi_antimagic(g, result.labeling, request.weights, SumMode::undirected,
                                                 std::nullopt, &lists);
    result.success = result.report.ok;
    if (!result.success) {
        if (options.guaranteed) throw InternalCertificateError("final labeling failed verification");
        result.failure = "final labeling failed verification";
    }
    return result;
}

} // namespace antimagic
