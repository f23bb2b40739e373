#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zres/tower.hpp"

namespace zres {

// Trace of the strict transform of g on the tower over one vertex: a
// double cover of the base curve branched over the odd-multiplicity
// neighbour points.
struct SCurveData {
    std::string vertex;
    std::string host; // surface id carrying the curve
    int components = 1;
    long long genus = 0;
    long long self_int_in_host = 0; // per component
    long long self_int_in_stg = 0;  // per component, inside St(g)
    std::optional<std::vector<long long>> class_in_host; // even case, host basis
    long long c1m_meets = 0;    // adjacent multiplicities equal to 1
    long long branch_count = 0; // adjacent odd multiplicities
};

// Everything except class_in_host, which needs the assembled basis.
SCurveData scurve_from_context(const VertexContext& ctx, const TowerDescriptor& tower,
                               const std::string& host_id);

} // namespace zres
