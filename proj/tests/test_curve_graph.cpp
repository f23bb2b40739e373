#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "zres/curve_graph.hpp"

using namespace zres;
using namespace zres::testfix;

TEST_CASE("cusp graph is valid") {
    CHECK(validate(cusp()).empty());
}

TEST_CASE("node graph is valid") {
    CHECK(validate(node()).empty());
}

TEST_CASE("broken vertex relation is reported") {
    CurveGraph g;
    g.vertices = {{"A", -1, 3}};
    g.arrows = {{"St1", "A", 1}};
    const auto report = validate(g);
    REQUIRE(report.size() == 1);
    CHECK(report[0].rule == "relation");
    CHECK(report[0].ids == std::vector<std::string>{"A"});
}

TEST_CASE("structural errors throw") {
    CurveGraph empty;
    CHECK_THROWS_AS(validate(empty), StructuralError);

    CurveGraph bad_edge = node();
    bad_edge.edges.push_back({"A", "missing"});
    CHECK_THROWS_AS(validate(bad_edge), StructuralError);

    CurveGraph dup = node();
    dup.vertices.push_back({"A", -1, 2});
    CHECK_THROWS_AS(validate(dup), StructuralError);

    CurveGraph bad_arrow = node();
    bad_arrow.arrows.push_back({"St3", "missing", 1});
    CHECK_THROWS_AS(validate(bad_arrow), StructuralError);
}

TEST_CASE("non-reduced arrows, bad e, disconnectedness are violations") {
    CurveGraph g = cusp();
    g.arrows[0].m = 2;
    bool found = false;
    for (const auto& v : validate(g))
        if (v.rule == "arrow_multiplicity") found = true;
    CHECK(found);

    CurveGraph g2 = cusp();
    g2.vertices[0].e = 0;
    found = false;
    for (const auto& v : validate(g2))
        if (v.rule == "self_intersection") found = true;
    CHECK(found);

    CurveGraph g3;
    g3.vertices = {{"A", -2, 1}, {"B", -2, 1}};
    g3.arrows = {{"s1", "A", 1}, {"s2", "A", 1}, {"t1", "B", 1}, {"t2", "B", 1}};
    found = false;
    for (const auto& v : validate(g3))
        if (v.rule == "connected") found = true;
    CHECK(found);
}

TEST_CASE("indefinite intersection matrix is a violation") {
    // relation forces e <= -1 checks to pass but definiteness to fail:
    // two vertices joined by an edge with e = -1 each and matching m
    CurveGraph g;
    g.vertices = {{"A", -1, 1}, {"B", -1, 1}};
    g.edges = {{"A", "B"}};
    bool found = false;
    for (const auto& v : validate(g))
        if (v.rule == "negative_definite") found = true;
    CHECK(found);
}

TEST_CASE("normalize_parity leaves the cusp unchanged") {
    const auto out = normalize_parity(cusp());
    CHECK(out.vertices.size() == 3);
    CHECK(out.edges.size() == 2);
    CHECK(validate(out).empty());
}

TEST_CASE("normalize_parity splits odd arrows") {
    CurveGraph g;
    g.vertices = {{"A", -2, 1}};
    g.arrows = {{"s1", "A", 1}, {"s2", "A", 1}};
    const auto out = normalize_parity(g);
    REQUIRE(out.vertices.size() == 3);
    CHECK(out.vertex("A").e == -4);
    CHECK(out.vertex("A").m == 1);
    std::multiset<std::pair<long long, long long>> inserted;
    for (const auto& v : out.vertices)
        if (v.id != "A") inserted.insert({v.e, v.m});
    CHECK(inserted == std::multiset<std::pair<long long, long long>>{{-1, 2}, {-1, 2}});
    // arrows moved onto the new vertices, edges connect them to A
    for (const auto& a : out.arrows) CHECK(a.attach != "A");
    CHECK(out.edges.size() == 2);
    CHECK(validate(out).empty());
    CHECK(is_parity_normalized(out));
}

TEST_CASE("normalize_parity splits odd-odd edges and is idempotent") {
    // a valid graph with an odd-odd edge: x^3 + y^3 resolved once
    CurveGraph g;
    g.vertices = {{"A", -1, 3}};
    g.arrows = {{"s1", "A", 1}, {"s2", "A", 1}, {"s3", "A", 1}};
    const auto out = normalize_parity(g);
    CHECK(validate(out).empty());
    CHECK(is_parity_normalized(out));
    const auto again = normalize_parity(out);
    CHECK(again.vertices.size() == out.vertices.size());
    CHECK(again.edges.size() == out.edges.size());

    // after normalization every odd-m vertex has even e
    for (const auto& v : out.vertices)
        if (v.m % 2 != 0) CHECK(v.e % 2 == 0);
}

TEST_CASE("normalization preserves negative definiteness") {
    for (auto [p, q] : {std::pair<long long, long long>{3, 3}, {3, 5}, {5, 7}}) {
        const auto g = brieskorn_graph(p, q); // normalizes internally
        CHECK(negative_definite(g.intersection_matrix()));
    }
}

TEST_CASE("order_vertices: evens first, stable by id") {
    const auto og = order_vertices(cusp());
    CHECK(og.order == std::vector<std::string>{"A1", "A2", "A3"});

    CurveGraph g;
    g.vertices = {{"Z", -2, 3}, {"B", -1, 6}, {"A", -3, 2}};
    g.edges = {{"A", "B"}, {"B", "Z"}};
    g.arrows = {{"St1", "B", 1}};
    const auto og2 = order_vertices(g);
    CHECK(og2.order == std::vector<std::string>{"A", "B", "Z"});
}

TEST_CASE("order override validates the even-before-odd rule") {
    CHECK_THROWS_AS(order_with_override(cusp(), {"A3", "A1", "A2"}), std::invalid_argument);
    CHECK_THROWS_AS(order_with_override(cusp(), {"A1", "A2"}), std::invalid_argument);
    const auto og = order_with_override(cusp(), {"A2", "A1", "A3"});
    CHECK(og.order == std::vector<std::string>{"A2", "A1", "A3"});
}

TEST_CASE("brieskorn(2,3) is the cusp graph") {
    const auto g = brieskorn_graph(2, 3);
    REQUIRE(g.vertices.size() == 3);
    std::multiset<std::pair<long long, long long>> deco;
    for (const auto& v : g.vertices) deco.insert({v.e, v.m});
    CHECK(deco == std::multiset<std::pair<long long, long long>>{{-3, 2}, {-1, 6}, {-2, 3}});
    REQUIRE(g.arrows.size() == 1);
    CHECK(g.vertex(g.arrows[0].attach).m == 6);
    CHECK(g.edges.size() == 2);
    CHECK(validate(g).empty());
}

TEST_CASE("brieskorn(2,2) is the node graph") {
    const auto g = brieskorn_graph(2, 2);
    REQUIRE(g.vertices.size() == 1);
    CHECK(g.vertices[0].e == -1);
    CHECK(g.vertices[0].m == 2);
    CHECK(g.arrows.size() == 2);
    CHECK(validate(g).empty());
}

TEST_CASE("brieskorn(2,5) multiplicities along the chain") {
    const auto g = brieskorn_graph(2, 5);
    CHECK(validate(g).empty());
    std::multiset<long long> ms;
    for (const auto& v : g.vertices) ms.insert(v.m);
    CHECK(ms == std::multiset<long long>{2, 4, 10, 5});
}

TEST_CASE("brieskorn rejects p or q below 2") {
    CHECK_THROWS_AS(brieskorn_graph(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(brieskorn_graph(4, 0), std::invalid_argument);
}

TEST_CASE("brieskorn outputs are valid and parity-normalized on a grid") {
    for (long long p = 2; p <= 6; ++p)
        for (long long q = p; q <= 7; ++q) {
            const auto g = brieskorn_graph(p, q);
            CHECK(validate(g).empty());
            CHECK(is_parity_normalized(g));
        }
}

TEST_CASE("free blow-up on the node") {
    const auto out = blow_up_free(node(), "A", "B");
    CHECK(out.vertex("A").e == -2);
    CHECK(out.vertex("A").m == 2);
    CHECK(out.vertex("B").e == -1);
    CHECK(out.vertex("B").m == 2);
    CHECK(out.edges.size() == 1);
    CHECK(out.arrows.size() == 2);
    CHECK(validate(out).empty());
}

TEST_CASE("satellite blow-ups preserve the vertex relation") {
    const auto on_edge = blow_up_edge(cusp(), "A1", "A2", "N");
    CHECK(on_edge.vertex("N").m == 8);
    CHECK(validate(on_edge).empty());

    const auto on_arrow = blow_up_arrow(cusp(), "St1", "N");
    CHECK(on_arrow.vertex("N").m == 7);
    CHECK(validate(on_arrow).empty());
}

TEST_CASE("random_refinement with zero steps is the identity") {
    const auto out = random_refinement(cusp(), 42, 0);
    CHECK(out.vertices.size() == 3);
    CHECK(out.edges.size() == 2);
}

TEST_CASE("random_refinement output is valid for many seeds") {
    for (unsigned long long seed = 0; seed < 20; ++seed) {
        const auto out = random_refinement(cusp(), seed, 5);
        CHECK(validate(out).empty());
        CHECK(is_parity_normalized(out));
        CHECK(negative_definite(out.intersection_matrix()));
    }
}

TEST_CASE("random_refinement is deterministic per seed") {
    const auto a = random_refinement(cusp(), 7, 6);
    const auto b = random_refinement(cusp(), 7, 6);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        CHECK(a.vertices[i].id == b.vertices[i].id);
        CHECK(a.vertices[i].e == b.vertices[i].e);
        CHECK(a.vertices[i].m == b.vertices[i].m);
    }
}
