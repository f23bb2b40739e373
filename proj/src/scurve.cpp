#include "zres/scurve.hpp"

#include <stdexcept>

namespace zres {

SCurveData scurve_from_context(const VertexContext& ctx, const TowerDescriptor& tower,
                               const std::string& host_id) {
    SCurveData s;
    s.vertex = ctx.id;
    s.host = host_id;
    for (const auto& [_, m] : ctx.younger) {
        if (m % 2 != 0) ++s.branch_count;
        if (m == 1) ++s.c1m_meets;
    }
    if (s.branch_count % 2 != 0)
        throw std::logic_error("scurve: odd number of branch points at " + ctx.id);

    if (!ctx.even()) {
        // section of the middle X_0 (or of E^m when m = 1)
        s.components = 1;
        s.genus = 0;
        if (ctx.e % 2 != 0)
            throw std::logic_error("scurve: odd vertex with odd e at " + ctx.id);
        s.self_int_in_stg = ctx.e / 2;
        s.self_int_in_host = (ctx.m == 1) ? ctx.x : 0;
        return s;
    }

    const bool all_even = (s.branch_count == 0);
    s.components = all_even ? 2 : 1;
    s.genus = (s.branch_count >= 2) ? (s.branch_count - 2) / 2 : 0;

    long long odd_big = 0; // modified points with odd m' >= 3
    for (const auto& [_, m] : ctx.younger)
        if (m % 2 != 0 && m >= 3) ++odd_big;

    const auto& bottom = tower.levels.at(static_cast<std::size_t>(tower.strict_site));
    const long long c1m = bottom.modified->c1m;
    if (all_even) {
        s.self_int_in_host = c1m; // each component is a copy of C_1^m
        s.self_int_in_stg = ctx.e;
    } else {
        s.self_int_in_host = 4 * c1m + 2 * odd_big;
        s.self_int_in_stg = 2 * ctx.e;
    }
    return s;
}

} // namespace zres
