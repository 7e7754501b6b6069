#include "antimagic/errors.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/io.hpp"
#include "antimagic/pipeline.hpp"

#include <doctest.h>

using namespace antimagic;

TEST_CASE("rationals parse and print") {
    CHECK(parse_rational("3/6", "x") == make_rational(1, 2));
    CHECK(parse_rational("-4", "x") == -4);
    CHECK(parse_rational("+2/3", "x") == make_rational(2, 3));
    CHECK(to_string(make_rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0", "x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5", "x"), ParseError);
    CHECK_THROWS_AS(parse_rational("", "x"), ParseError);
}

TEST_CASE("edge keys") {
    CHECK(edge_key(Edge(3, 1)) == "1-3");
    CHECK(parse_edge_key("-2--5", "x") == Edge(-5, -2));
    CHECK_THROWS_AS(parse_edge_key("1-", "x"), ParseError);
}

TEST_CASE("weighting round trip and validation") {
    const Graph g = path_graph(3);
    Weighting w;
    w.weights[1] = make_rational(1, 3);
    w.weights[3] = -2;
    CHECK(read_weighting(write_weighting(w), g) == w);

    try {
        read_weighting(parse_json(R"({"weights": {"7": "1"}})", "w"), g);
        FAIL("expected a validation error");
    } catch (const ParseError& e) {
        CHECK(e.where() == "/weights/7");
    }
    CHECK_THROWS_AS(read_weighting(parse_json(R"({"weights": {"1": "x"}})", "w"), g), ParseError);
    CHECK_THROWS_AS(read_weighting(parse_json(R"({"weight": {}})", "w"), g), ParseError);
}

TEST_CASE("lists round trip and validation") {
    const Graph g = path_graph(3);
    const ListAssignment lists = range_lists(g, 3);
    CHECK(read_lists(write_lists(lists), g) == lists);
    CHECK_THROWS_AS(read_lists(parse_json(R"({"lists": {"1-3": ["1"]}})", "l"), g), ParseError);
}

TEST_CASE("labeling round trip with orientation") {
    const Graph g = complete_graph(4);
    SolveRequest req;
    req.graph = g;
    req.variant = Variant::quasi_oriented_antimagic;
    const auto r = solve(req);
    REQUIRE(r.success);
    const Json doc = write_labeling(r.labeling, r.k, to_string(req.variant));
    const auto back = read_labeling(parse_json(dump(doc), "doc"), g);
    CHECK(back.labeling == r.labeling);
    CHECK(back.k == r.k);
    CHECK(back.variant == to_string(req.variant));
    CHECK(dump(write_labeling(back.labeling, back.k, back.variant)) == dump(doc));
}

TEST_CASE("labeling reader rejects foreign edges and bad orientations") {
    const Graph g = path_graph(3);
    CHECK_THROWS_AS(read_labeling(parse_json(R"({"labels": {"1-3": "1"}})", "f"), g), ParseError);
    CHECK_THROWS_AS(read_labeling(parse_json(R"({"labels": {"1-2": "1", "2-3": "2"},
        "orientation": {"1-2": "1>3", "2-3": "2>3"}})", "f"), g), ParseError);
    CHECK_THROWS_AS(parse_json("{", "broken"), ParseError);
}

TEST_CASE("report and certificate documents") {
    VerifyReport report;
    report.add({ViolationKind::duplicate_label, "1-2", "2-3"});
    const Json doc = to_json(report);
    CHECK(doc["ok"] == false);
    CHECK(doc["violations"][0]["kind"] == "duplicate-label");

    const auto cert = certify_reduction_monomial(4, ReductionMode::undirected);
    const Json c = certificate_to_json(cert, ReductionMode::undirected, 4);
    CHECK(c["abc"] == Json::array({4, 3, 2}));
    CHECK(c["coefficient"] == "-1");
    CHECK(c["nonzero"] == true);
    CHECK(c["mode"] == "undirected");
}
