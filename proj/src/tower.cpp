#include "zres/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace zres {

VertexContext vertex_context(const OrderedCurveGraph& og, const std::string& id) {
    const auto& g = og.graph;
    const auto& v = g.vertex(id); // throws on unknown id
    VertexContext ctx;
    ctx.id = v.id;
    ctx.e = v.e;
    ctx.m = v.m;
    ctx.l = v.m / 2;

    const long long my_pos = og.position(id);
    long long older_sum = 0;
    for (const auto& n : g.neighbors(id)) {
        const auto& w = g.vertex(n);
        if (og.position(n) < my_pos) {
            ctx.older.emplace_back(n, w.m);
            older_sum += w.m;
        } else {
            ctx.younger.emplace_back(n, w.m);
        }
    }
    std::vector<std::string> arrow_ids;
    for (const auto* a : g.arrows_at(id)) arrow_ids.push_back(a->id);
    std::sort(arrow_ids.begin(), arrow_ids.end());
    for (const auto& aid : arrow_ids) ctx.younger.emplace_back(aid, 1);

    if (older_sum % 2 != 0)
        throw std::logic_error("vertex_context: odd older multiplicity sum at " + id);
    ctx.x = -older_sum / 2;

    if (!ctx.even()) {
        if (!ctx.younger.empty())
            throw std::logic_error("vertex_context: odd vertex " + id + " has younger neighbours");
        if ((2 * ctx.l + 1) * ctx.e - 2 * ctx.x != 0)
            throw std::logic_error("vertex_context: odd vertex relation broken at " + id);
    } else {
        long long younger_sum = 0;
        for (const auto& [_, m] : ctx.younger) younger_sum += m;
        if (ctx.x - ctx.l * ctx.e < 0 || 2 * (ctx.x - ctx.l * ctx.e) != younger_sum)
            throw std::logic_error("vertex_context: even vertex relation broken at " + id);
    }
    return ctx;
}

TowerDescriptor build_tower(const VertexContext& ctx) {
    TowerDescriptor t;
    t.top = make_disc_bundle(ctx.older);
    if (t.top.zero_section_self_int != ctx.x)
        throw std::logic_error("build_tower: disc bundle section self-int mismatch");
    t.section_self = ctx.x;
    t.normal_x = ctx.x;
    t.normal_e = ctx.e;

    const long long e = ctx.e, x = ctx.x, l = ctx.l;

    if (ctx.m == 1) {
        t.strict_site = -1; // S_i is the distinguished section of the top
        return t;
    }

    // ladder levels T_k, g-multiplicity 2k; for even m the last one is the
    // modified bottom surface
    for (long long k = 1; k <= l; ++k) {
        TowerLevel lev;
        lev.tag = "T" + std::to_string(k);
        lev.role = LevelRole::Ladder;
        lev.signed_param = k * e - x;
        lev.g_mult = 2 * k;
        const long long upper = (k == 1) ? x : x - (k - 1) * e;
        t.curves.push_back({upper, k * e - x});
        t.levels.push_back(std::move(lev));
    }

    if (ctx.even()) {
        TowerLevel& bottom = t.levels.back();
        bottom.tag = "B";
        bottom.role = LevelRole::Bottom;
        std::vector<std::string> marked;
        for (const auto& [id, _] : ctx.older) marked.push_back(id);
        bottom.modified = make_modified_surface(x - l * e, marked, ctx.younger);
        t.strict_site = static_cast<int>(t.levels.size()) - 1;
    } else {
        TowerLevel u;
        u.tag = "U";
        u.role = LevelRole::OddMid;
        u.signed_param = (2 * l + 1) * e - 2 * x;
        if (u.signed_param != 0)
            throw std::logic_error("build_tower: odd middle surface is not X_0");
        u.g_mult = 4 * l + 2;
        t.curves.push_back({x - l * e, 0});
        t.levels.push_back(std::move(u));
        t.strict_site = static_cast<int>(t.levels.size()) - 1;

        TowerLevel v;
        v.tag = "V";
        v.role = LevelRole::OddEnd;
        v.signed_param = (l + 1) * e - x;
        v.g_mult = 2 * l + 1;
        t.curves.push_back({0, (l + 1) * e - x});
        t.levels.push_back(std::move(v));
        t.free_section_self = x - (l + 1) * e;
    }

    // ladder rungs: the two self-ints of a shared curve add up to e
    for (std::size_t k = 1; k < t.curves.size(); ++k) {
        const auto role = t.levels[k].role;
        if (role != LevelRole::Ladder && role != LevelRole::Bottom) continue;
        if (t.curves[k].upper_self + t.curves[k].lower_self != e)
            throw std::logic_error("build_tower: ladder rung sum != e");
    }
    return t;
}

} // namespace zres
