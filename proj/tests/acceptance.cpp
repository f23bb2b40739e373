// Acceptance suite: runs every gate criterion at zero tolerance and prints
// one pass/fail line per criterion. Exit code 0 iff everything passes.

#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "zres/divisor_complex.hpp"
#include "zres/surface_graph.hpp"
#include "zres/verifier.hpp"

using namespace zres;
using namespace zres::testfix;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int n, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << ": " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
}

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

bool cusp_figure_surfaces(const DivisorComplex& cx, std::string& detail) {
    std::multiset<std::tuple<std::string, long long, long long, std::string>> got;
    for (const auto& s : cx.surfaces) {
        if (s.kind == SurfaceKind::CompactLevel) {
            long long param = s.modified ? s.modified->e : std::abs(*s.signed_param);
            const std::string kind = s.modified ? "X^m" : "X";
            got.insert({kind, param, s.g_mult, s.owner});
        } else if (s.kind == SurfaceKind::NoncompactE) {
            got.insert({"E^m", 0, s.g_mult, s.owner});
        }
    }
    const std::multiset<std::tuple<std::string, long long, long long, std::string>> expected = {
        {"X^m", 3, 2, "A1"},
        {"X", 0, 2, "A2"}, {"X", 1, 4, "A2"}, {"X^m", 2, 6, "A2"},
        {"X", 1, 2, "A3"}, {"X", 0, 6, "A3"}, {"X", 1, 3, "A3"},
        {"E^m", 0, 0, "A1"}, {"E^m", 0, 0, "A2"}, {"E^m", 0, 0, "A3"}};
    if (got != expected) {
        detail = "surface multiset mismatch";
        return false;
    }
    return true;
}

bool cusp_figure_sgraph(const SGraph& sg, std::string& detail) {
    if (sg.vertices.size() != 4) {
        detail = "expected 4 vertices";
        return false;
    }
    std::multiset<long long> selfs;
    for (const auto& v : sg.vertices) {
        if (v.genus != 0) {
            detail = "nonzero genus";
            return false;
        }
        selfs.insert(v.self_int);
    }
    if (selfs != std::multiset<long long>{-3, -3, -2, -1}) {
        detail = "self-intersections differ";
        return false;
    }
    std::map<std::string, long long> self_by_id;
    for (const auto& v : sg.vertices) self_by_id[v.id] = v.self_int;
    std::multiset<std::pair<long long, long long>> decos;
    for (const auto& [a, b] : sg.edges) {
        const auto x = self_by_id.at(a), y = self_by_id.at(b);
        decos.insert({std::min(x, y), std::max(x, y)});
    }
    if (decos != std::multiset<std::pair<long long, long long>>{{-3, -2}, {-3, -2}, {-2, -1}}) {
        detail = "edge pattern differs";
        return false;
    }
    return true;
}

} // namespace

int main() {
    // 1. worked example reproduction
    {
        const auto t0 = clock_type::now();
        const auto cx = build_complex(order_vertices(cusp()));
        const auto sg = surface_dual_graph(cx);
        std::string detail;
        bool ok = cusp_figure_surfaces(cx, detail) && cusp_figure_sgraph(sg, detail);
        const double ms = ms_since(t0);
        if (ok && ms >= 1000.0) {
            ok = false;
            detail = "too slow";
        }
        std::ostringstream os;
        os << ms << " ms";
        report(1, "worked example reproduction", ok, ok ? os.str() : detail);
    }

    // 2. minimal-model identification
    {
        const auto t0 = clock_type::now();
        bool ok = true;
        std::string detail;
        const auto cusp_min =
            blow_down_minimal(surface_dual_graph(build_complex(order_vertices(cusp()))));
        if (!sgraph_isomorphic(cusp_min.graph, a_chain(2))) {
            ok = false;
            detail = "cusp minimal model is not A2";
        }
        for (long long q = 3; q <= 9 && ok; ++q) {
            const auto tq = clock_type::now();
            const auto g = brieskorn_graph(2, q);
            const auto min =
                blow_down_minimal(surface_dual_graph(build_complex(order_vertices(g))));
            if (!sgraph_isomorphic(min.graph, a_chain(static_cast<int>(q) - 1))) {
                ok = false;
                detail = "brieskorn(2," + std::to_string(q) + ") is not A" + std::to_string(q - 1);
            }
            if (ok && ms_since(tq) >= 1000.0) {
                ok = false;
                detail = "q = " + std::to_string(q) + " too slow";
            }
        }
        const double ms = ms_since(t0);
        std::ostringstream os;
        os << ms << " ms total";
        report(2, "minimal models: cusp A2, brieskorn(2,q) A_{q-1}", ok, ok ? os.str() : detail);
    }

    // 3. node sanity
    {
        const auto sg = surface_dual_graph(build_complex(order_vertices(node())));
        bool ok = sg.vertices.size() == 1 && sg.vertices[0].self_int == -2 &&
                  sg.vertices[0].genus == 0 && sg.edges.empty();
        const auto min = blow_down_minimal(sg);
        ok = ok && sgraph_isomorphic(min.graph, sg); // already minimal
        report(3, "node gives the single -2 vertex (A1)", ok);
    }

    // 4. oracle equivalence and Picard consistency
    {
        bool ok = true;
        std::string detail;
        for (long long m = 1; m <= 50 && ok; ++m) {
            if (!(fiber_chain(m) == local_blowup_oracle(m))) {
                ok = false;
                detail = "chain mismatch at m' = " + std::to_string(m);
            }
        }
        std::vector<CurveGraph> graphs = {cusp(), node(), smooth_overblown()};
        for (long long q = 3; q <= 9; ++q) graphs.push_back(brieskorn_graph(2, q));
        for (const auto& g : graphs) {
            if (!ok) break;
            const auto cx = build_complex(order_vertices(normalize_parity(g)));
            for (const auto& s : cx.surfaces) {
                if (s.kind != SurfaceKind::CompactLevel) continue;
                long long expect = 2;
                if (s.modified) {
                    std::vector<long long> ms;
                    for (const auto& p : s.modified->modified_points) ms.push_back(p.m);
                    expect = picard_rank(ms);
                }
                if (s.picard != expect) {
                    ok = false;
                    detail = "picard rank off on " + s.id;
                }
            }
        }
        report(4, "fiber_chain = oracle for m' <= 50; picard rank = 2 + blow-ups", ok, detail);
    }

    // 5. property suite over pinned refinement seeds
    {
        const auto t0 = clock_type::now();
        bool ok = true;
        std::string detail;
        for (const auto& base : {cusp(), node()}) {
            const auto base_min = blow_down_minimal(
                surface_dual_graph(build_complex(order_vertices(normalize_parity(base)))));
            for (unsigned long long seed = 1; seed <= 20 && ok; ++seed) {
                const int steps = 1 + static_cast<int>(seed % 8);
                const auto refined = random_refinement(base, seed, steps);
                if (!validate(refined).empty()) {
                    ok = false;
                    detail = base.name + " seed " + std::to_string(seed) + ": invalid";
                    break;
                }
                const auto cx = build_complex(order_vertices(refined));
                if (!check_fiber_balance(cx).all_pass() ||
                    !check_triple_point_formula(cx).all_pass()) {
                    ok = false;
                    detail = base.name + " seed " + std::to_string(seed) + ": balance/triple";
                    break;
                }
                bool divisible = true;
                for (const auto& s : cx.surfaces) {
                    if (s.kind != SurfaceKind::CompactLevel) continue;
                    try {
                        self_intersection_class(cx, s.id);
                    } catch (const std::exception&) {
                        divisible = false;
                    }
                }
                const auto sg = surface_dual_graph(cx);
                if (!divisible || !check_negative_definite(sg).all_pass()) {
                    ok = false;
                    detail = base.name + " seed " + std::to_string(seed) + ": class/definite";
                    break;
                }
                if (!sgraph_isomorphic(blow_down_minimal(sg).graph, base_min.graph)) {
                    ok = false;
                    detail = base.name + " seed " + std::to_string(seed) + ": minimal changed";
                    break;
                }
            }
            if (!ok) break;
        }
        const double ms = ms_since(t0);
        if (ok && ms >= 30000.0) {
            ok = false;
            detail = "too slow";
        }
        std::ostringstream os;
        os << ms << " ms total";
        report(5, "property suite: 20 seeds x refinements of cusp and node", ok,
               ok ? os.str() : detail);
    }

    // 6. formula unit checks on the worked example
    {
        bool ok = c1m_self_int(2, {3, 1}) == 0 && picard_rank({3, 1}) == 5;
        std::string detail = ok ? "" : "formulas 2.9/2.10 numbers off";
        const auto cx = build_complex(order_vertices(cusp()));
        const auto& s1 = cx.scurves.at("A1");
        const auto& s2 = cx.scurves.at("A2");
        const auto& s3 = cx.scurves.at("A3");
        if (ok) {
            ok = s2.genus == 0 && s2.branch_count == 2 && s2.self_int_in_host == 2 &&
                 s2.self_int_in_stg == -2;
            if (!ok) detail = "A2 strict transform data off";
        }
        if (ok) {
            ok = s1.components == 2 && s1.self_int_in_stg == -3 && s3.self_int_in_stg == -1 &&
                 s3.genus == 0;
            if (!ok) detail = "A1/A3 strict transform data off";
        }
        report(6, "formula unit checks on the worked example", ok, detail);
    }

    if (failures == 0) {
        std::cout << "acceptance: all criteria pass\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
