#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/pipeline.hpp"
#include "antimagic/sampling.hpp"

#include <doctest.h>

#include <random>

using namespace antimagic;

namespace {

Graph graph(const char* text) { return parse_graph(text); }

SolveResult run(const Graph& g, Variant v, const Weighting& w = {}, std::optional<ListAssignment> lists = {}) {
    SolveRequest req;
    req.graph = g;
    req.variant = v;
    req.weights = w;
    req.lists = std::move(lists);
    return solve(req);
}

void check_undirected(const Graph& g, const Weighting& w, const ListAssignment& lists) {
    const auto r = run(g, Variant::weighted_list_quasi_antimagic, w, lists);
    REQUIRE(r.success);
    CHECK(verify_quasi_antimagic(g, r.labeling, w, SumMode::undirected, std::nullopt, &lists).ok);
}

void check_oriented(const Graph& g) {
    const auto r = run(g, Variant::quasi_oriented_antimagic);
    REQUIRE(r.success);
    const auto bound = static_cast<std::int64_t>(g.edge_count()) +
                       theorem_k(g.vertex_count(), Variant::quasi_oriented_antimagic);
    CHECK(verify_quasi_antimagic(g, r.labeling, {}, SumMode::oriented, bound).ok);
    Rational total = 0;
    for (const auto& [v, s] : oriented_vertex_sums(g, r.labeling)) total += s;
    CHECK(total == 0);
}

} // namespace

TEST_CASE("theorem_k") {
    CHECK(theorem_k(3, Variant::weighted_list_quasi_antimagic) == 4);
    CHECK(theorem_k(5, Variant::weighted_list_quasi_antimagic) == 6);
    CHECK(theorem_k(5, Variant::quasi_oriented_antimagic) == 3);
    CHECK(theorem_k(2, Variant::quasi_oriented_antimagic) == 1);
    CHECK(parse_variant("weighted-list") == Variant::weighted_list_quasi_antimagic);
    CHECK(parse_variant("oriented") == Variant::quasi_oriented_antimagic);
    CHECK_THROWS_AS(parse_variant("magic"), ContractError);
}

TEST_CASE("solve examples, undirected") {
    const Graph p3 = path_graph(3);
    const auto r = run(p3, Variant::weighted_list_quasi_antimagic);
    REQUIRE(r.success);
    CHECK(r.k == 4);
    for (const auto& [e, x] : r.labeling.labels) CHECK((x >= 1 && x <= 6));

    const Graph k4 = complete_graph(4);
    const auto rk = run(k4, Variant::weighted_list_quasi_antimagic);
    REQUIRE(rk.success);
    CHECK(rk.trace.front().stage == "reduce");
    CHECK(rk.trace.front().vertex == 1);
    CHECK(rk.trace.back().stage == "extend-cn");

    check_undirected(cycle_graph(3), {}, range_lists(cycle_graph(3), 7));
    const Graph two_k2 = graph("1 2\n3 4\n");
    check_undirected(two_k2, {}, range_lists(two_k2, 2 + 5));
    check_undirected(star_graph(4), {}, range_lists(star_graph(4), 3 + 5));
}

TEST_CASE("two K2 components: no greedy stage") {
    const Graph g = graph("1 2\n3 4\n");
    const auto r = run(g, Variant::weighted_list_quasi_antimagic);
    REQUIRE(r.success);
    CHECK(r.trace[0].stage == "base-greedy");
    CHECK(r.trace[0].greedy_steps == 0);
    CHECK(r.trace[1].variables == 2);
}

TEST_CASE("P5 + C4 under adversarial weights") {
    const Graph g = graph("1 2\n2 3\n3 4\n4 5\n6 7\n7 8\n8 9\n9 6\n");
    std::mt19937_64 rng(5);
    const auto k = theorem_k(g.vertex_count(), Variant::weighted_list_quasi_antimagic);
    for (int trial = 0; trial < 20; ++trial) {
        const Weighting w = sample_adversarial_weighting(g, rng);
        const ListAssignment lists = sample_adversarial_lists(g, g.edge_count() + static_cast<std::size_t>(k), rng);
        check_undirected(g, w, lists);
    }
}

TEST_CASE("solve examples, oriented") {
    const Graph k2 = path_graph(2);
    const auto r = run(k2, Variant::quasi_oriented_antimagic);
    REQUIRE(r.success);
    CHECK(r.labeling.labels.at(Edge(1, 2)) == 1);
    const auto sums = oriented_vertex_sums(k2, r.labeling);
    CHECK(abs(sums.at(1)) == 1);
    CHECK(sums.at(1) == -sums.at(2));

    check_oriented(cycle_graph(5));
    check_oriented(graph("1 2\n2 3\n3 1\n4 5\n5 6\n6 7\n7 4\n"));
    check_oriented(star_graph(4));
    check_oriented(complete_graph(4));
    check_oriented(graph("vertex 9\n1 2\n"));
}

TEST_CASE("list-size precondition") {
    const Graph p3 = path_graph(3);
    CHECK_THROWS_AS(run(p3, Variant::weighted_list_quasi_antimagic, {}, range_lists(p3, 5)), InfeasibleInstance);
}

TEST_CASE("k below the bound reports failures instead of throwing") {
    SolveRequest req;
    req.graph = complete_graph(5);
    req.variant = Variant::weighted_list_quasi_antimagic;
    req.k_override = 0;
    const SolveResult r = solve(req);
    if (r.success) CHECK(r.report.ok);
    else CHECK_FALSE(r.failure.empty());
}

TEST_CASE("recursion: depth equals removed triples, three edges per step") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(8, 0.5, 8, rng);
        const auto r = run(g, Variant::quasi_oriented_antimagic);
        REQUIRE(r.success);
        std::size_t reduces = 0;
        std::size_t expected_edges = g.edge_count();
        std::size_t extends = 0;
        for (const auto& t : r.trace) {
            if (t.stage == "reduce") {
                CHECK(t.depth == reduces);
                CHECK(t.edges == expected_edges);
                CHECK(t.removed.size() == 3);
                expected_edges -= 3;
                ++reduces;
            }
            if (t.stage == "extend-cn") ++extends;
            if (t.stage == "base-greedy") CHECK(t.max_forbidden <= t.forbidden_budget);
        }
        CHECK(reduces == extends);
    }
}

TEST_CASE("fuzz: random graphs, rational weights, minimum-size lists") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 10;
        const Graph g = random_graph(n, 0.1 + 0.1 * static_cast<double>(rng() % 6), n, rng);
        const auto k = theorem_k(n, Variant::weighted_list_quasi_antimagic);
        const Weighting w = sample_adversarial_weighting(g, rng);
        const ListAssignment lists = sample_adversarial_lists(g, g.edge_count() + static_cast<std::size_t>(k), rng);
        check_undirected(g, w, lists);
        check_oriented(g);
    }
}

TEST_CASE("reduction certificate is memoised and nonzero") {
    const auto a = reduction_certificate(9, ReductionMode::undirected);
    const auto b = reduction_certificate(9, ReductionMode::undirected);
    CHECK(a.coefficient == b.coefficient);
    CHECK(a.coefficient == 9);
    CHECK(a.exponents == Exponents{12, 9, 8});
    CHECK(reduction_certificate(4, ReductionMode::oriented).coefficient == 30);
}
