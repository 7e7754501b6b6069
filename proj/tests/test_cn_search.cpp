#include "antimagic/cn_search.hpp"
#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/pipeline.hpp"

#include <doctest.h>

#include <random>

using namespace antimagic;

namespace {

std::vector<Rational> values(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

// Every point of the candidate product.
std::vector<std::vector<Rational>> product_points(const ConstraintSystem& cs) {
    std::vector<std::vector<Rational>> out{{}};
    for (std::size_t i = 0; i < cs.variable_count(); ++i) {
        std::vector<std::vector<Rational>> next;
        for (const auto& p : out)
            for (const auto& x : cs.candidates(i)) {
                next.push_back(p);
                next.back().push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

ConstraintSystem random_system(std::mt19937_64& rng, std::size_t k) {
    ConstraintSystem cs(k);
    std::uniform_int_distribution<long> coef(-2, 2), cst(-4, 4), val(-3, 6);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Rational> t;
        for (int j = 0; j < 4; ++j) t.emplace_back(val(rng));
        std::sort(t.begin(), t.end());
        t.erase(std::unique(t.begin(), t.end()), t.end());
        cs.set_candidates(i, t, 0);
    }
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int c = 0; c < count; ++c) {
        LinearConstraint lc;
        for (std::size_t i = 0; i < k; ++i)
            if (long a = coef(rng); a != 0) lc.terms.emplace_back(i, a);
        if (lc.terms.empty()) lc.terms.emplace_back(0, 1);
        lc.constant = cst(rng);
        cs.add(lc);
    }
    return cs;
}

} // namespace

TEST_CASE("solve_constraints examples") {
    ConstraintSystem cs(2);
    cs.set_candidates(0, values({0, 1}), 2);
    cs.set_candidates(1, values({0}), 1);
    cs.add_distinct(0, 1);
    const auto out = solve_constraints(cs);
    REQUIRE(out.assignment);
    CHECK(*out.assignment == values({1, 0}));

    ConstraintSystem tight(2);
    tight.set_candidates(0, values({0}), 2);
    tight.set_candidates(1, values({0}), 1);
    tight.add_distinct(0, 1);
    CHECK_FALSE(tight.sizes_meet_requirement());
    const auto none = solve_constraints(tight);
    CHECK_FALSE(none.assignment);
    CHECK(none.exhausted);
}

TEST_CASE("budget exhaustion is reported, and the fallback keeps going") {
    ConstraintSystem cs(3);
    for (std::size_t i = 0; i < 3; ++i) cs.set_candidates(i, values({1, 2, 3, 4}), 4);
    for (long v = 1; v <= 3; ++v) cs.add({{{0, 1}}, -v, ConstraintKind::forbidden_value});
    cs.add({{{0, 1}, {1, 1}, {2, 1}}, -6, ConstraintKind::sum_collision});
    SearchOptions small;
    small.budget = 3;
    const auto cut = solve_constraints(cs, small);
    CHECK_FALSE(cut.assignment);
    CHECK(cut.budget_exceeded);
    CHECK_FALSE(cut.exhausted);
    small.exhaustive_fallback = true;
    CHECK(solve_constraints(cs, small).assignment);
}

TEST_CASE("constraints must reference declared variables") {
    ConstraintSystem cs(1);
    CHECK_THROWS_AS(cs.add({{{1, 1}}, 0, ConstraintKind::forbidden_value}), ContractError);
    CHECK_THROWS_AS(cs.add({{}, 0, ConstraintKind::forbidden_value}), ContractError);
}

TEST_CASE("pick_candidate_sets") {
    const auto ten = values({1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(pick_candidate_sets(ten, 4) == values({1, 2, 3, 4}));
    CHECK(pick_candidate_sets(ten, 10) == ten);
    CHECK_THROWS_AS(pick_candidate_sets(ten, 11, "edge 1-2"), InfeasibleInstance);
}

TEST_CASE("search agrees with enumeration and is deterministic") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const ConstraintSystem cs = random_system(rng, 1 + rng() % 3);
        const auto out = solve_constraints(cs);
        bool any = false;
        for (const auto& p : product_points(cs)) any = any || cs.satisfied_by(p);
        CHECK(out.assignment.has_value() == any);
        if (out.assignment) {
            CHECK(cs.satisfied_by(*out.assignment));
            CHECK(solve_constraints(cs).assignment == out.assignment);
        }
    }
}

TEST_CASE("the polynomial vanishes exactly where a predicate fails") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const ConstraintSystem cs = random_system(rng, 1 + rng() % 3);
        const Polynomial g = constraint_polynomial(cs);
        for (const auto& p : product_points(cs)) CHECK((g.evaluate(p) != 0) == cs.satisfied_by(p));
    }
}

TEST_CASE("rational constants are rejected by constraint_polynomial only") {
    ConstraintSystem cs(1);
    cs.set_candidates(0, values({1}), 1);
    cs.add({{{0, 1}}, make_rational(1, 2), ConstraintKind::sum_collision});
    CHECK_THROWS_AS(constraint_polynomial(cs), ContractError);
    CHECK(top_degree_polynomial(cs) == Polynomial::variable(1, 0));
}

TEST_CASE("extension system: top-degree part is the reduction polynomial") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng() % 3;
        const Graph g = random_graph(n, 0.6, n, rng);
        const auto at = find_3plus_vertex(g);
        if (!at) continue;
        const Graph reduced = g.without_edges(at->edges);

        // Integer weights, so the constants are integers and g can be expanded.
        Weighting w;
        for (VertexId v : g.vertices()) w.weights[v] = static_cast<long>(rng() % 5);
        Labeling inner;
        long next = 1;
        for (const auto& e : reduced.edges()) inner.labels[e] = next++;
        const std::int64_t bound = static_cast<std::int64_t>(g.edge_count()) + 3 * static_cast<std::int64_t>(n);
        const ListAssignment lists = range_lists(g, bound);

        for (Variant variant : {Variant::weighted_list_quasi_antimagic, Variant::quasi_oriented_antimagic}) {
            const bool oriented = variant == Variant::quasi_oriented_antimagic;
            Labeling in = inner;
            if (oriented) in.orientation = Orientation::ascending(reduced);
            ExtensionInput input;
            input.variant = variant;
            input.weights = &w;
            input.lists = &lists;
            input.label_bound = bound;
            const ReductionMode mode = oriented ? ReductionMode::oriented : ReductionMode::undirected;
            const auto cert = reduction_certificate(static_cast<unsigned>(n), mode);
            const ConstraintSystem cs = extension_system(g, *at, in, input, cert);
            CHECK(cs.sizes_meet_requirement());

            const Polynomial h = build_h_reduction(static_cast<unsigned>(n), mode);
            const Polynomial g_poly = constraint_polynomial(cs);
            CHECK(g_poly.degree() == h.degree());
            CHECK(g_poly.homogeneous_part(h.degree()) == h);
            CHECK(top_degree_polynomial(cs) == h);

            // g(x) != 0 exactly when every predicate holds, on a sample of the product.
            std::size_t checked = 0;
            for (const auto& p : product_points(cs)) {
                if (++checked > 150) break;
                CHECK((g_poly.evaluate(p) != 0) == cs.satisfied_by(p));
            }
        }
    }
}
