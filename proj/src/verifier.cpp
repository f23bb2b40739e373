#include "zres/verifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace zres {

bool CheckReport::all_pass() const {
    for (const auto& i : items)
        if (!i.pass) return false;
    return true;
}

void CheckReport::sort() {
    std::stable_sort(items.begin(), items.end(), [](const CheckItem& a, const CheckItem& b) {
        return std::tie(a.check, a.scope) < std::tie(b.check, b.scope);
    });
}

void CheckReport::merge(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
}

bool chain_balanced(const ChainDescriptor& chain) {
    const auto& cs = chain.components;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        long long sum = cs[i].fiber_mult * cs[i].self_int;
        if (i > 0) sum += cs[i - 1].fiber_mult;
        if (i + 1 < cs.size()) sum += cs[i + 1].fiber_mult;
        if (sum != 0) return false;
    }
    return true;
}

CheckReport check_fiber_balance(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& s : cx.surfaces) {
        if (!s.modified) continue;
        for (const auto& p : s.modified->modified_points) {
            CheckItem item;
            item.check = "fiber_balance";
            item.scope = s.id + "@" + p.label;
            item.pass = chain_balanced(p.chain);
            if (!item.pass) item.details = "pi^* balance violated";
            r.items.push_back(std::move(item));
        }
    }
    r.sort();
    return r;
}

CheckReport check_triple_point_formula(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& c : cx.curves) {
        if (!c.compact || c.surfaces.size() != 2) continue;
        if (!c.self_ints[0] || !c.self_ints[1]) continue;
        const long long m0 = cx.g_mult_of(c.surfaces[0]);
        const long long m1 = cx.g_mult_of(c.surfaces[1]);
        const bool on_sheet = c.surfaces[0] == "St" || c.surfaces[1] == "St";
        if (on_sheet && (m0 == 0 || m1 == 0)) continue; // tangential contact
        long long sum = m0 * *c.self_ints[1] + m1 * *c.self_ints[0];
        for (const auto& t : cx.triple_points)
            if (t.curve == c.id) sum += cx.g_mult_of(t.third);
        CheckItem item;
        item.check = "triple_point_formula";
        item.scope = c.id;
        item.pass = (sum == 0);
        if (!item.pass) item.details = "formula sums to " + std::to_string(sum);
        r.items.push_back(std::move(item));
    }
    r.sort();
    return r;
}

CheckReport check_negative_definite(const SGraph& g) {
    CheckReport r;
    CheckItem item;
    item.check = "negative_definite";
    item.scope = "sgraph";
    item.pass = negative_definite(g.intersection_matrix());
    if (!item.pass) item.details = "intersection matrix is not negative definite";
    r.items.push_back(std::move(item));
    return r;
}

CheckReport check_class_pairing(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& s : cx.surfaces) {
        if (s.kind != SurfaceKind::CompactLevel) continue;
        const auto e2 = self_intersection_class(cx, s.id);
        for (const auto* c : cx.curves_on(s.id)) {
            if (c->surfaces.size() != 2) continue;
            const auto it = c->class_in.find(s.id);
            if (it == c->class_in.end()) continue;
            const std::string other =
                (c->surfaces[0] == s.id) ? c->surfaces[1] : c->surfaces[0];
            const auto other_self = c->self_int_in(other);
            if (!other_self) continue;
            CheckItem item;
            item.check = "class_pairing";
            item.scope = s.id + "/" + c->id;
            const long long got = pair_classes(cx, s.id, e2.coeffs, it->second);
            item.pass = (got == *other_self);
            if (!item.pass)
                item.details = "<E^2,[C]> = " + std::to_string(got) + ", expected " +
                               std::to_string(*other_self);
            r.items.push_back(std::move(item));
        }
    }
    r.sort();
    return r;
}

namespace {

CheckItem make_item(const std::string& check, const std::string& scope, bool pass,
                    const std::string& details = "") {
    return {check, scope, pass, pass ? "" : details};
}

CheckReport check_oracle_equivalence(long long up_to) {
    CheckReport r;
    bool ok = true;
    std::string detail;
    for (long long m = 1; m <= up_to; ++m) {
        if (!(fiber_chain(m) == local_blowup_oracle(m))) {
            ok = false;
            detail = "mismatch at m' = " + std::to_string(m);
            break;
        }
        if (c1m_chain_corrections(m) != oracle_c1m_chain_corrections(m)) {
            ok = false;
            detail = "class correction mismatch at m' = " + std::to_string(m);
            break;
        }
    }
    r.items.push_back(make_item("oracle_equivalence", "m'=1.." + std::to_string(up_to), ok, detail));
    return r;
}

CheckReport check_towers(const DivisorComplex& cx) {
    CheckReport r;
    long long compact_total = 0, expected_total = 0;
    for (const auto& vid : cx.order) {
        const auto& ctx = cx.contexts.at(vid);
        const auto& tw = cx.towers.at(vid);
        compact_total += static_cast<long long>(tw.levels.size());
        expected_total += blow_up_count(ctx.m);
        r.items.push_back(make_item(
            "tower_levels", vid,
            static_cast<long long>(tw.levels.size()) == blow_up_count(ctx.m),
            "level count != blow_up_count"));
        // g-multiplicities along the tower
        std::vector<long long> expect;
        for (long long k = 1; k <= ctx.l; ++k) expect.push_back(2 * k);
        if (!ctx.even() && ctx.m > 1) {
            expect.push_back(4 * ctx.l + 2);
            expect.push_back(2 * ctx.l + 1);
        }
        bool gm = tw.levels.size() == expect.size();
        for (std::size_t i = 0; gm && i < expect.size(); ++i)
            gm = (tw.levels[i].g_mult == expect[i]);
        r.items.push_back(make_item("tower_g_multiplicities", vid, gm, "sequence mismatch"));
        if (ctx.even()) {
            const auto& bottom = tw.levels.at(static_cast<std::size_t>(tw.strict_site));
            long long younger_sum = 0;
            for (const auto& [_, m] : ctx.younger) younger_sum += m;
            r.items.push_back(make_item("tower_bottom_weight", vid,
                                        2 * bottom.modified->e == younger_sum,
                                        "2e != sum of younger multiplicities"));
        }
    }
    long long em_count = 0, compact_count = 0;
    for (const auto& s : cx.surfaces) {
        if (s.kind == SurfaceKind::NoncompactE) ++em_count;
        if (s.kind == SurfaceKind::CompactLevel) ++compact_count;
    }
    r.items.push_back(make_item("surface_count", "compact",
                                compact_count == expected_total && compact_total == expected_total,
                                "compact level count mismatch"));
    r.items.push_back(make_item("surface_count", "noncompact",
                                em_count == static_cast<long long>(cx.order.size()),
                                "one E^m per vertex expected"));
    return r;
}

CheckReport check_picard(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& s : cx.surfaces) {
        if (s.kind != SurfaceKind::CompactLevel) continue;
        long long expect = 2;
        if (s.modified) {
            std::vector<long long> ms;
            for (const auto& p : s.modified->modified_points) ms.push_back(p.m);
            expect = picard_rank(ms);
        }
        r.items.push_back(make_item("picard_rank", s.id, s.picard == expect,
                                    "rank != 2 + total blow-ups"));
    }
    r.sort();
    return r;
}

CheckReport check_divisibility(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& s : cx.surfaces) {
        if (s.kind != SurfaceKind::CompactLevel) continue;
        CheckItem item;
        item.check = "self_intersection_divisibility";
        item.scope = s.id;
        item.pass = true;
        try {
            self_intersection_class(cx, s.id);
        } catch (const std::exception& e) {
            item.pass = false;
            item.details = e.what();
        }
        r.items.push_back(std::move(item));
    }
    r.sort();
    return r;
}

CheckReport check_scurve_cases(const DivisorComplex& cx) {
    CheckReport r;
    for (const auto& vid : cx.order) {
        const auto& s = cx.scurves.at(vid);
        const auto& ctx = cx.contexts.at(vid);
        bool ok = s.branch_count % 2 == 0;
        if (ctx.even()) {
            ok = ok && ((s.components == 2) == (s.branch_count == 0));
            if (s.branch_count > 0) ok = ok && s.genus == (s.branch_count - 2) / 2;
        } else {
            ok = ok && s.components == 1 && s.genus == 0;
        }
        r.items.push_back(make_item("scurve_cases", vid, ok, "double cover case split broken"));
    }
    return r;
}

} // namespace

CheckReport run_all(const CurveGraph& g) {
    CheckReport r;
    const auto violations = validate(g);
    r.items.push_back(make_item("validate", "graph", violations.empty(),
                                violations.empty() ? "" : violations.front().rule + ": " +
                                                              violations.front().detail));
    if (!violations.empty()) {
        r.sort();
        return r;
    }

    const auto normalized = normalize_parity(g);
    const auto twice = normalize_parity(normalized);
    const bool idem = twice.vertices.size() == normalized.vertices.size() &&
                      twice.edges.size() == normalized.edges.size() &&
                      is_parity_normalized(normalized);
    r.items.push_back(make_item("normalize_idempotent", "graph", idem,
                                "second pass changed the graph"));
    bool odd_even_e = true;
    for (const auto& v : normalized.vertices)
        if (v.m % 2 != 0 && v.e % 2 != 0) odd_even_e = false;
    r.items.push_back(make_item("parity_normal_form", "graph",
                                is_parity_normalized(normalized) && odd_even_e,
                                "odd-odd adjacency or odd e on odd vertex"));
    r.items.push_back(make_item("negative_definite", "curve_graph",
                                negative_definite(normalized.intersection_matrix()), ""));

    const auto ordered = order_vertices(normalized);
    const auto cx = build_complex(ordered);
    r.merge(check_fiber_balance(cx));
    r.merge(check_triple_point_formula(cx));
    r.merge(check_towers(cx));
    r.merge(check_picard(cx));
    r.merge(check_divisibility(cx));
    r.merge(check_class_pairing(cx));
    r.merge(check_scurve_cases(cx));
    r.merge(check_oracle_equivalence(50));

    const auto sg = surface_dual_graph(cx);
    r.merge(check_negative_definite(sg));
    const auto minimal = blow_down_minimal(sg);
    r.items.push_back(make_item("blow_down", "sgraph", !minimal.blocked,
                                "non-contractible (-1)-vertex"));
    r.items.push_back(make_item("negative_definite", "minimal_sgraph",
                                negative_definite(minimal.graph.intersection_matrix()), ""));

    // the minimal model does not depend on extra blow-ups of the input
    for (unsigned long long seed : {1ULL, 2ULL}) {
        const auto refined = random_refinement(normalized, seed, 3);
        const auto sg2 = surface_dual_graph(build_complex(order_vertices(refined)));
        const bool same = sgraph_isomorphic(blow_down_minimal(sg2).graph, minimal.graph);
        r.items.push_back(make_item("refinement_invariance", "seed=" + std::to_string(seed),
                                    same, "minimal model changed under refinement"));
    }

    r.sort();
    return r;
}

} // namespace zres
