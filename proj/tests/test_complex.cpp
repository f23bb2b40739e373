#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "zres/divisor_complex.hpp"
#include "zres/verifier.hpp"

using namespace zres;
using namespace zres::testfix;

namespace {
DivisorComplex cusp_complex() { return build_complex(order_vertices(cusp())); }
} // namespace

TEST_CASE("cusp complex has the printed twelve surfaces") {
    const auto cx = cusp_complex();
    REQUIRE(cx.surfaces.size() == 12);
    std::multiset<std::tuple<std::string, long long, long long>> got;
    for (const auto& s : cx.surfaces) {
        long long param = 0;
        if (s.signed_param) param = std::abs(*s.signed_param);
        if (s.modified) param = s.modified->e;
        got.insert({s.display.substr(0, 3), param, s.g_mult});
    }
    const std::multiset<std::tuple<std::string, long long, long long>> expected = {
        {"E^m", 0, 0}, {"E^m", 0, 0}, {"E^m", 0, 0}, // one per vertex
        {"X^m", 3, 2},                               // over A1
        {"X_0", 0, 2}, {"X_1", 1, 4}, {"X^m", 2, 6}, // over A2
        {"X_1", 1, 2}, {"X_0", 0, 6}, {"X_1", 1, 3}, // over A3
        {"St(", 0, 1}, {"D~", 0, 0}};
    CHECK(got == expected);
}

TEST_CASE("cusp gluing curves carry the figure decorations") {
    const auto cx = cusp_complex();
    auto pair_of = [&cx](const std::string& id) {
        const auto& c = cx.curve(id);
        return std::pair<long long, long long>{*c.self_ints[0], *c.self_ints[1]};
    };
    // fiber chain of X^m_2 over the A2-A3 point, glued down A3's tower
    CHECK(pair_of("A2:B~A3:Em") == std::pair<long long, long long>{-1, -1});
    CHECK(pair_of("A2:B~A3:T1") == std::pair<long long, long long>{-3, 0});
    CHECK(pair_of("A2:B~A3:U") == std::pair<long long, long long>{-1, 0});
    CHECK(pair_of("A2:B~A3:V") == std::pair<long long, long long>{-2, 0});
    // E^m(A3) ladder over the same point
    CHECK(pair_of("A2:T1~A3:Em") == std::pair<long long, long long>{0, -2});
    CHECK(pair_of("A2:T2~A3:Em") == std::pair<long long, long long>{0, -2});
    // fiber chain of X^m_3 over the A1-A2 point
    CHECK(pair_of("A1:B~A2:Em") == std::pair<long long, long long>{-1, -1});
    CHECK(pair_of("A1:B~A2:T1") == std::pair<long long, long long>{-2, 0});
    CHECK(pair_of("A1:B~A2:T2") == std::pair<long long, long long>{-2, 0});
    CHECK(pair_of("A1:B~A2:B") == std::pair<long long, long long>{-1, 0});
    // vertical discs have no printed values
    const auto& disc = cx.curve("A1:Em~A2:Em");
    CHECK_FALSE(disc.compact);
    CHECK(disc.figure_ambiguous);
    CHECK_FALSE(disc.self_ints[0].has_value());
}

TEST_CASE("strict transform records on the cusp") {
    const auto cx = cusp_complex();
    const auto& s1 = cx.scurves.at("A1");
    CHECK(s1.components == 2);
    CHECK(s1.genus == 0);
    CHECK(s1.self_int_in_host == 0);
    CHECK(s1.self_int_in_stg == -3);
    const auto& s2 = cx.scurves.at("A2");
    CHECK(s2.components == 1);
    CHECK(s2.branch_count == 2);
    CHECK(s2.genus == 0);
    CHECK(s2.self_int_in_host == 2); // 4*0 + 2*1
    CHECK(s2.self_int_in_stg == -2);
    CHECK(s2.c1m_meets == 1);
    const auto& s3 = cx.scurves.at("A3");
    CHECK(s3.components == 1);
    CHECK(s3.self_int_in_host == 0);
    CHECK(s3.self_int_in_stg == -1);
    CHECK(s3.host == "A3:U");
}

TEST_CASE("node complex: one tower, sheet meets C1 twice") {
    const auto cx = build_complex(order_vertices(node()));
    REQUIRE(cx.surfaces.size() == 4); // E^m(A), X^m_1, St(g), disc family
    const auto& bottom = cx.surface("A:B");
    REQUIRE(bottom.modified.has_value());
    CHECK(bottom.modified->e == 1);
    CHECK(bottom.modified->c1m == 1);
    CHECK(bottom.g_mult == 2);
    for (const auto& p : bottom.modified->modified_points)
        CHECK(p.chain.blow_ups == 0);
    const auto& s = cx.scurves.at("A");
    CHECK(s.c1m_meets == 2);
    CHECK(s.branch_count == 2);
    CHECK(s.self_int_in_host == 4); // 4*(C1m)^2 = 4
    CHECK(s.self_int_in_stg == -2);
}

TEST_CASE("self-intersection classes on the cusp") {
    const auto cx = cusp_complex();

    // X_0 with multiplicity 6 over A3: numerator -6*section - 6*fiber
    const auto u = self_intersection_class(cx, "A3:U");
    REQUIRE(u.basis.size() == 2);
    CHECK(u.coeffs == std::vector<long long>{-1, -1});

    // the modified bottom over A2 has rank 5 and E^2 = -C_0^m - f
    const auto b2 = self_intersection_class(cx, "A2:B");
    REQUIRE(b2.basis.size() == 5);
    CHECK(b2.coeffs == std::vector<long long>{-1, -1, 0, 0, 0});

    // over A1: E^2 = -C_0^m - 3f
    const auto b1 = self_intersection_class(cx, "A1:B");
    CHECK(b1.coeffs == std::vector<long long>{-1, -3, 0, 0, 0});

    CHECK_THROWS_AS(self_intersection_class(cx, "A1:Em"), std::invalid_argument);
}

TEST_CASE("divisibility of the numerator class holds on refined graphs") {
    for (unsigned long long seed = 0; seed < 6; ++seed) {
        const auto g = random_refinement(cusp(), seed, 4);
        const auto cx = build_complex(order_vertices(g));
        for (const auto& s : cx.surfaces) {
            if (s.kind != SurfaceKind::CompactLevel) continue;
            CHECK_NOTHROW(self_intersection_class(cx, s.id));
        }
    }
}

TEST_CASE("triple point formula holds on the cusp and node") {
    for (const auto& g : {cusp(), node()}) {
        const auto cx = build_complex(order_vertices(g));
        const auto r = check_triple_point_formula(cx);
        CHECK(r.all_pass());
        CHECK(!r.items.empty());
    }
}

TEST_CASE("perturbing one self-intersection breaks exactly the incident curves") {
    auto cx = cusp_complex();
    const std::string victim = "A2:T1~A2:T2";
    for (auto& c : cx.curves)
        if (c.id == victim) *c.self_ints[0] += 1;
    const auto r = check_triple_point_formula(cx);
    std::set<std::string> failing;
    for (const auto& i : r.items)
        if (!i.pass) failing.insert(i.scope);
    CHECK(failing == std::set<std::string>{victim});
}

TEST_CASE("tower-internal curve of an even vertex: triple contributions are -2x") {
    // curve T1~T2 over A2: thirds sum to the older multiplicities = -2x_2
    const auto cx = cusp_complex();
    long long sum = 0;
    for (const auto& t : cx.triple_points)
        if (t.curve == "A2:T1~A2:T2") sum += cx.g_mult_of(t.third);
    CHECK(sum == -2 * cx.contexts.at("A2").x);
}

TEST_CASE("class pairing reproduces neighbour self-intersections") {
    for (const auto& g : {cusp(), node(), smooth_overblown()}) {
        const auto cx = build_complex(order_vertices(g));
        const auto r = check_class_pairing(cx);
        CHECK(r.all_pass());
    }
}

TEST_CASE("build_complex rejects non-normalized input") {
    CurveGraph g;
    g.vertices = {{"A", -1, 3}};
    g.arrows = {{"s1", "A", 1}, {"s2", "A", 1}, {"s3", "A", 1}};
    OrderedCurveGraph og{g, {"A"}};
    CHECK_THROWS_AS(build_complex(og), std::invalid_argument);
}
