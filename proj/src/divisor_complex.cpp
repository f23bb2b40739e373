#include "zres/divisor_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace zres {

namespace {

void fail(const std::string& msg) { throw std::logic_error("build_complex: " + msg); }

std::string level_id(const std::string& vid, const std::string& tag) {
    return vid + ":" + tag;
}

std::string pair_id(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return a + "~" + b;
}

} // namespace

std::optional<long long> CurveRec::self_int_in(const std::string& surface) const {
    for (std::size_t i = 0; i < surfaces.size(); ++i)
        if (surfaces[i] == surface) return self_ints[i];
    return std::nullopt;
}

const SurfaceRec& DivisorComplex::surface(const std::string& id) const {
    for (const auto& s : surfaces)
        if (s.id == id) return s;
    throw std::invalid_argument("unknown surface id: " + id);
}

const CurveRec& DivisorComplex::curve(const std::string& id) const {
    for (const auto& c : curves)
        if (c.id == id) return c;
    throw std::invalid_argument("unknown curve id: " + id);
}

long long DivisorComplex::g_mult_of(const std::string& surface_id) const {
    return surface(surface_id).g_mult;
}

std::vector<const CurveRec*> DivisorComplex::curves_on(const std::string& surface_id) const {
    std::vector<const CurveRec*> out;
    for (const auto& c : curves)
        for (const auto& s : c.surfaces)
            if (s == surface_id) out.push_back(&c);
    return out;
}

namespace {

struct Builder {
    const OrderedCurveGraph& og;
    DivisorComplex cx;

    explicit Builder(const OrderedCurveGraph& ordered) : og(ordered) {}

    SurfaceRec* surface_mut(const std::string& id) {
        for (auto& s : cx.surfaces)
            if (s.id == id) return &s;
        return nullptr;
    }
    CurveRec* curve_mut(const std::string& id) {
        for (auto& c : cx.curves)
            if (c.id == id) return &c;
        return nullptr;
    }

    // id of the surface glued to chain component k over an edge: the disc
    // bundle for k = 0, then down the younger tower
    std::string glued_surface(const std::string& yid, std::size_t k) const {
        if (k == 0) return level_id(yid, "Em");
        const auto& tw = cx.towers.at(yid);
        return level_id(yid, tw.levels.at(k - 1).tag);
    }

    void make_surfaces() {
        for (const auto& vid : og.order) {
            const auto& tw = cx.towers.at(vid);
            SurfaceRec em;
            em.id = level_id(vid, "Em");
            em.display = "E^m(" + vid + ")";
            em.kind = SurfaceKind::NoncompactE;
            em.owner = vid;
            em.g_mult = 0;
            em.role = "Em";
            em.disc = tw.top;
            em.section_self = tw.section_self;
            cx.surfaces.push_back(std::move(em));
        }
        for (const auto& vid : og.order) {
            const auto& tw = cx.towers.at(vid);
            for (const auto& lev : tw.levels) {
                SurfaceRec s;
                s.id = level_id(vid, lev.tag);
                s.kind = SurfaceKind::CompactLevel;
                s.owner = vid;
                s.g_mult = lev.g_mult;
                s.role = lev.tag;
                if (lev.modified) {
                    s.modified = lev.modified;
                    s.picard = lev.modified->picard;
                    s.display = "X^m_" + std::to_string(lev.modified->e);
                } else {
                    s.signed_param = lev.signed_param;
                    s.picard = 2;
                    s.display = "X_" + std::to_string(std::abs(lev.signed_param));
                }
                cx.surfaces.push_back(std::move(s));
            }
        }
        SurfaceRec st;
        st.id = "St";
        st.display = "St(g)";
        st.kind = SurfaceKind::StrictSheet;
        st.g_mult = 1;
        st.role = "St";
        cx.surfaces.push_back(std::move(st));

        SurfaceRec d;
        d.id = "D";
        d.display = "D~";
        d.kind = SurfaceKind::NoncompactD;
        d.g_mult = 0;
        d.role = "D";
        cx.surfaces.push_back(std::move(d));
    }

    // intersection curves within one tower, plus the free section of V
    void make_tower_curves() {
        for (const auto& vid : og.order) {
            const auto& tw = cx.towers.at(vid);
            for (std::size_t k = 0; k < tw.levels.size(); ++k) {
                const std::string upper =
                    (k == 0) ? level_id(vid, "Em") : level_id(vid, tw.levels[k - 1].tag);
                const std::string lower = level_id(vid, tw.levels[k].tag);
                CurveRec c;
                c.id = pair_id(upper, lower);
                c.surfaces = {upper, lower};
                c.self_ints = {tw.curves[k].upper_self, tw.curves[k].lower_self};
                c.compact = true;
                c.base = BaseLocus::Generic;
                c.base_ids = {vid};
                cx.curves.push_back(std::move(c));
            }
            if (tw.free_section_self) {
                CurveRec c;
                const std::string v = level_id(vid, "V");
                c.id = v + "~free";
                c.surfaces = {v};
                c.self_ints = {*tw.free_section_self};
                c.compact = true;
                c.base = BaseLocus::Generic;
                c.base_ids = {vid};
                cx.curves.push_back(std::move(c));
            }
        }
    }

    // edges in a canonical order: by position of the older endpoint, then
    // of the younger one
    std::vector<std::pair<std::string, std::string>> ordered_edges() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : og.graph.edges) {
            std::string o = e[0], y = e[1];
            if (og.position(o) > og.position(y)) std::swap(o, y);
            out.emplace_back(o, y);
        }
        std::sort(out.begin(), out.end(),
                  [this](const auto& a, const auto& b) {
                      return std::make_pair(og.position(a.first), og.position(a.second)) <
                             std::make_pair(og.position(b.first), og.position(b.second));
                  });
        return out;
    }

    const ModifiedPoint& modified_point(const std::string& oid, const std::string& label) const {
        const auto& tw = cx.towers.at(oid);
        const auto& bottom = tw.levels.at(static_cast<std::size_t>(tw.strict_site));
        for (const auto& p : bottom.modified->modified_points)
            if (p.label == label) return p;
        fail("no modified point " + label + " on bottom of " + oid);
        throw std::logic_error("unreachable");
    }

    void make_gluing_curves() {
        for (const auto& [o, y] : ordered_edges()) {
            const std::string bo = bottom_id(o);
            const auto& chain = modified_point(o, y).chain;
            const auto& ytower = cx.towers.at(y);
            if (chain.components.size() != ytower.levels.size() + 1)
                fail("chain length does not match tower of " + y);

            // fiber chain of the older bottom, glued down the younger tower
            for (std::size_t k = 0; k < chain.components.size(); ++k) {
                const std::string part = glued_surface(y, k);
                CurveRec c;
                c.id = pair_id(bo, part);
                c.surfaces = {bo, part};
                c.self_ints = {chain.components[k].self_int,
                               (k == 0) ? std::optional<long long>(-1)
                                        : std::optional<long long>(0)};
                c.compact = true;
                c.base = BaseLocus::EdgePoint;
                c.base_ids = {o, y};
                cx.curves.push_back(std::move(c));
            }

            // the remaining modification chain of E^m(A_y) over the same
            // point: curves shared with the ladder of the older tower
            const long long t = cx.contexts.at(o).m / 2;
            for (long long r = 1; r <= t - 1; ++r) {
                const std::string tr = level_id(o, "T" + std::to_string(r));
                const std::string em = level_id(y, "Em");
                CurveRec c;
                c.id = pair_id(tr, em);
                c.surfaces = {tr, em};
                c.self_ints = {0, -2};
                c.compact = true;
                c.base = BaseLocus::EdgePoint;
                c.base_ids = {o, y};
                cx.curves.push_back(std::move(c));
            }

            // non-compact vertical disc shared by the two disc bundles
            CurveRec disc;
            disc.id = pair_id(level_id(o, "Em"), level_id(y, "Em"));
            disc.surfaces = {level_id(o, "Em"), level_id(y, "Em")};
            disc.self_ints = {std::nullopt, std::nullopt};
            disc.compact = false;
            disc.base = BaseLocus::EdgePoint;
            disc.base_ids = {o, y};
            disc.figure_ambiguous = true;
            cx.curves.push_back(std::move(disc));
        }
    }

    std::string bottom_id(const std::string& vid) const {
        const auto& tw = cx.towers.at(vid);
        return level_id(vid, tw.levels.at(static_cast<std::size_t>(tw.strict_site)).tag);
    }
    std::string strict_site_id(const std::string& vid) const {
        const auto& tw = cx.towers.at(vid);
        if (tw.strict_site < 0) return level_id(vid, "Em");
        return level_id(vid, tw.levels.at(static_cast<std::size_t>(tw.strict_site)).tag);
    }

    std::vector<std::string> scurve_ids(const std::string& vid) const {
        const auto& s = cx.scurves.at(vid);
        const std::string base = "St~" + s.host;
        if (s.components == 2) return {base + "#a", base + "#b"};
        return {base};
    }

    void make_strict_curves() {
        for (const auto& vid : og.order) {
            const auto& s = cx.scurves.at(vid);
            for (const auto& id : scurve_ids(vid)) {
                CurveRec c;
                c.id = id;
                c.surfaces = {s.host, "St"};
                c.self_ints = {s.self_int_in_host, s.self_int_in_stg};
                c.compact = true;
                c.base = BaseLocus::Generic;
                c.base_ids = {vid};
                cx.curves.push_back(std::move(c));
            }
        }
    }

    void add_triple(const std::string& curve, const std::string& third) {
        cx.triple_points.push_back({curve, third});
    }

    // Corner of three pairwise-intersecting surfaces: three curves each
    // gain the remaining surface as a triple point.
    void add_corner(const std::string& a, const std::string& b, const std::string& c) {
        add_triple(pair_id(a, b), c);
        add_triple(pair_id(a, c), b);
        add_triple(pair_id(b, c), a);
    }

    void make_triples() {
        for (const auto& [o, y] : ordered_edges()) {
            const std::string bo = bottom_id(o);
            const std::string em_y = level_id(y, "Em");
            const std::string em_o = level_id(o, "Em");
            const auto& chain = modified_point(o, y).chain;
            const std::size_t n = chain.components.size();

            // corners along the fiber chain of the older bottom
            for (std::size_t k = 0; k + 1 < n; ++k)
                add_corner(bo, glued_surface(y, k), glued_surface(y, k + 1));

            // corners along the modification chain of E^m(A_y): from the
            // curve shared with the older bottom up to the vertical disc
            const long long t = cx.contexts.at(o).m / 2;
            std::vector<std::string> stack; // o-side surfaces, deepest first
            stack.push_back(bo);
            for (long long r = t - 1; r >= 1; --r)
                stack.push_back(level_id(o, "T" + std::to_string(r)));
            stack.push_back(em_o);
            for (std::size_t i = 0; i + 1 < stack.size(); ++i)
                add_corner(em_y, stack[i], stack[i + 1]);

            // crossings of the strict transform over this point
            const auto& ctx_y = cx.contexts.at(y);
            std::size_t cross_idx;
            long long count;
            std::string glued;
            if (ctx_y.m == 1) {
                cross_idx = 0;
                count = 2; // tangential contact of the sheet with the fiber
                glued = em_y;
            } else if (ctx_y.m % 2 == 0) {
                cross_idx = n - 1;
                count = 2;
                glued = glued_surface(y, n - 1);
            } else {
                cross_idx = static_cast<std::size_t>(chain.s_index);
                count = 1;
                glued = glued_surface(y, cross_idx);
            }
            const std::string cross_curve = pair_id(bo, glued_surface(y, cross_idx));
            for (long long i = 0; i < count; ++i) add_triple(cross_curve, "St");

            const auto o_comps = scurve_ids(o);
            if (o_comps.size() == 2) {
                add_triple(o_comps[0], glued);
                add_triple(o_comps[1], glued);
            } else {
                for (long long i = 0; i < count; ++i) add_triple(o_comps[0], glued);
            }
            const auto y_comps = scurve_ids(y);
            if (y_comps.size() == 2) {
                add_triple(y_comps[0], bo);
                add_triple(y_comps[1], bo);
            } else {
                const long long y_count = (ctx_y.m % 2 == 0) ? count : 1;
                for (long long i = 0; i < y_count; ++i) add_triple(y_comps[0], bo);
            }
        }
    }

    // ---- classes over Pic of the compact levels ------------------------

    static void add_to(std::vector<long long>& acc, const std::vector<long long>& v,
                       long long scale) {
        if (acc.size() < v.size()) acc.resize(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += scale * v[i];
    }

    std::vector<long long> unit(const SurfaceRec& s, const std::string& basis_entry) const {
        std::vector<long long> v(s.basis.size(), 0);
        for (std::size_t i = 0; i < s.basis.size(); ++i)
            if (s.basis[i] == basis_entry) {
                v[i] = 1;
                return v;
            }
        fail("basis entry " + basis_entry + " not found on " + s.id);
        return v;
    }

    void make_bases_and_classes() {
        // bases
        for (auto& s : cx.surfaces) {
            if (s.kind != SurfaceKind::CompactLevel) continue;
            const auto& tw = cx.towers.at(s.owner);
            std::size_t level_index = 0;
            for (std::size_t k = 0; k < tw.levels.size(); ++k)
                if (level_id(s.owner, tw.levels[k].tag) == s.id) level_index = k;
            const std::string upper = (level_index == 0)
                                          ? level_id(s.owner, "Em")
                                          : level_id(s.owner, tw.levels[level_index - 1].tag);
            s.basis.push_back(pair_id(upper, s.id));
            s.basis.push_back("f");
            if (s.modified) {
                for (const auto& p : s.modified->modified_points) {
                    if (p.m == 1) continue; // no exceptional components
                    const bool is_arrow = !og.graph.has_vertex(p.label);
                    if (is_arrow) fail("arrow modified point with m > 1");
                    for (std::size_t k = 1; k < p.chain.components.size(); ++k)
                        s.basis.push_back(pair_id(s.id, glued_surface(p.label, k)));
                }
                if (s.basis.size() != static_cast<std::size_t>(*s.picard))
                    fail("basis size does not match Picard rank on " + s.id);
            }
        }

        // classes of tower-internal curves and free sections
        for (const auto& vid : og.order) {
            const auto& tw = cx.towers.at(vid);
            for (std::size_t k = 0; k < tw.levels.size(); ++k) {
                const std::string lower = level_id(vid, tw.levels[k].tag);
                const std::string upper =
                    (k == 0) ? level_id(vid, "Em") : level_id(vid, tw.levels[k - 1].tag);
                auto* c = curve_mut(pair_id(upper, lower));
                const auto& slower = cx.surface(lower);
                c->class_in[lower] = unit(slower, c->id); // its own basis slot
                if (k > 0) {
                    const auto& supper = cx.surface(upper);
                    // lower curve of a plain level: upper - n * fiber
                    auto v = unit(supper, supper.basis[0]);
                    add_to(v, unit(supper, "f"), -tw.levels[k - 1].signed_param);
                    c->class_in[upper] = std::move(v);
                }
            }
            if (tw.free_section_self) {
                const std::string v_id = level_id(vid, "V");
                auto* c = curve_mut(v_id + "~free");
                const auto& sv = cx.surface(v_id);
                auto v = unit(sv, sv.basis[0]);
                add_to(v, unit(sv, "f"), -tw.levels.back().signed_param);
                c->class_in[v_id] = std::move(v);
            }
        }

        // classes of gluing curves
        for (const auto& [o, y] : ordered_edges()) {
            const std::string bo = bottom_id(o);
            const auto& sbo = cx.surface(bo);
            const auto& chain = modified_point(o, y).chain;
            // component 0 is the strict transform of the fiber
            {
                auto* c0 = curve_mut(pair_id(bo, glued_surface(y, 0)));
                auto v = unit(sbo, "f");
                for (std::size_t k = 1; k < chain.components.size(); ++k)
                    add_to(v, unit(sbo, pair_id(bo, glued_surface(y, k))),
                           -chain.components[k].fiber_mult);
                c0->class_in[bo] = std::move(v);
            }
            for (std::size_t k = 1; k < chain.components.size(); ++k) {
                auto* c = curve_mut(pair_id(bo, glued_surface(y, k)));
                c->class_in[bo] = unit(sbo, c->id);
                // full fiber on the younger compact level
                const std::string part = glued_surface(y, k);
                c->class_in[part] = unit(cx.surface(part), "f");
            }
            if (chain.components.size() == 1) {
                // plain fiber over an m'=1 vertex point
                auto* c0 = curve_mut(pair_id(bo, glued_surface(y, 0)));
                c0->class_in[bo] = unit(sbo, "f");
            }
            // E^m(A_y) ladder curves: full fibers on the older ladder
            const long long t = cx.contexts.at(o).m / 2;
            for (long long r = 1; r <= t - 1; ++r) {
                const std::string tr = level_id(o, "T" + std::to_string(r));
                auto* c = curve_mut(pair_id(tr, level_id(y, "Em")));
                c->class_in[tr] = unit(cx.surface(tr), "f");
            }
        }

        // strict transform classes on their hosts, and class_in_host
        for (const auto& vid : og.order) {
            auto& s = cx.scurves.at(vid);
            const auto& ctx = cx.contexts.at(vid);
            if (!ctx.even()) {
                if (ctx.m == 1) continue; // non-compact host
                const auto& host = cx.surface(s.host);
                auto v = unit(host, host.basis[0]); // a copy of the zero section of X_0
                s.class_in_host = v;
                for (const auto& id : scurve_ids(vid)) curve_mut(id)->class_in[s.host] = v;
                continue;
            }
            const auto& host = cx.surface(s.host);
            // C_1^m = C_0^m + e*f - corrections
            std::vector<long long> c1m = unit(host, host.basis[0]);
            add_to(c1m, unit(host, "f"), host.modified->e);
            for (const auto& p : host.modified->modified_points) {
                const auto corr = c1m_chain_corrections(p.m);
                for (std::size_t k = 1; k < p.chain.components.size(); ++k)
                    add_to(c1m, unit(host, pair_id(s.host, glued_surface(p.label, k))),
                           -corr[k - 1]);
            }
            std::vector<long long> cls;
            if (s.components == 2) {
                cls = c1m;
            } else {
                cls = std::vector<long long>(c1m.size(), 0);
                add_to(cls, c1m, 2);
                for (const auto& p : host.modified->modified_points) {
                    if (p.m % 2 == 0 || p.m < 3) continue;
                    // F_j: the chain component meeting C_1^m (the last one)
                    const std::size_t last = p.chain.components.size() - 1;
                    add_to(cls, unit(host, pair_id(s.host, glued_surface(p.label, last))), 1);
                }
            }
            s.class_in_host = cls;
            for (const auto& id : scurve_ids(vid)) curve_mut(id)->class_in[s.host] = cls;
        }
    }

    DivisorComplex build() {
        for (const auto& vid : og.order) {
            auto ctx = vertex_context(og, vid);
            auto tw = build_tower(ctx);
            cx.contexts.emplace(vid, ctx);
            cx.towers.emplace(vid, std::move(tw));
        }
        for (const auto& vid : og.order) {
            const auto& ctx = cx.contexts.at(vid);
            const auto& tw = cx.towers.at(vid);
            cx.scurves.emplace(vid, scurve_from_context(ctx, tw, strict_site_id(vid)));
        }
        cx.order = og.order;
        make_surfaces();
        make_tower_curves();
        make_gluing_curves();
        make_strict_curves();
        make_triples();
        make_bases_and_classes();
        return std::move(cx);
    }
};

} // namespace

DivisorComplex build_complex(const OrderedCurveGraph& og) {
    if (!is_valid(og.graph))
        throw std::invalid_argument("build_complex: graph is not valid");
    if (!is_parity_normalized(og.graph))
        throw std::invalid_argument("build_complex: graph is not parity-normalized");
    // the order must be a permutation with evens first; reuse the checks
    order_with_override(og.graph, og.order);
    Builder b(og);
    return b.build();
}

CurveClass self_intersection_class(const DivisorComplex& cx, const std::string& surface_id) {
    const auto& s = cx.surface(surface_id);
    if (s.kind != SurfaceKind::CompactLevel)
        throw std::invalid_argument("self_intersection_class: " + surface_id + " is not compact");
    std::vector<long long> num(s.basis.size(), 0);
    for (const auto* c : cx.curves_on(surface_id)) {
        if (c->surfaces.size() != 2) continue; // free sections carry no divisor
        const std::string other =
            (c->surfaces[0] == surface_id) ? c->surfaces[1] : c->surfaces[0];
        const long long mult = cx.g_mult_of(other);
        if (mult == 0) continue;
        const auto it = c->class_in.find(surface_id);
        if (it == c->class_in.end())
            throw std::logic_error("missing class of " + c->id + " on " + surface_id);
        for (std::size_t i = 0; i < it->second.size(); ++i) num[i] -= mult * it->second[i];
    }
    const long long mk = s.g_mult;
    CurveClass out;
    out.surface = surface_id;
    out.basis = s.basis;
    for (long long v : num) {
        if (v % mk != 0)
            throw std::logic_error("self_intersection_class: numerator not divisible by " +
                                   std::to_string(mk) + " on " + surface_id);
        out.coeffs.push_back(v / mk);
    }
    return out;
}

long long pair_classes(const DivisorComplex& cx, const std::string& surface_id,
                       const std::vector<long long>& a, const std::vector<long long>& b) {
    const auto& s = cx.surface(surface_id);
    if (s.kind != SurfaceKind::CompactLevel)
        throw std::invalid_argument("pair_classes: " + surface_id + " is not compact");
    const std::size_t n = s.basis.size();
    if (a.size() != n || b.size() != n)
        throw std::invalid_argument("pair_classes: wrong class length");

    // Gram matrix of the basis {C_0-like section, fiber, chain components}
    IntMatrix gram(n, std::vector<long long>(n, 0));
    const long long c0_self = s.modified ? -s.modified->e : *s.signed_param;
    gram[0][0] = c0_self;
    gram[0][1] = gram[1][0] = 1;
    gram[1][1] = 0;
    if (s.modified) {
        std::size_t base = 2;
        for (const auto& p : s.modified->modified_points) {
            const std::size_t m = p.chain.components.size() - 1; // basis members
            for (std::size_t i = 0; i < m; ++i) {
                gram[base + i][base + i] = p.chain.components[i + 1].self_int;
                if (i + 1 < m) {
                    gram[base + i][base + i + 1] = 1;
                    gram[base + i + 1][base + i] = 1;
                }
            }
            base += m;
        }
        if (base != n) throw std::logic_error("pair_classes: Gram size mismatch");
    }
    long long acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += a[i] * gram[i][j] * b[j];
    return acc;
}

} // namespace zres
