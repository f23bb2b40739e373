#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zres/curve_graph.hpp"
#include "zres/local_models.hpp"

namespace zres {

// Per-vertex data read off the ordered graph. Neighbours that precede i
// in the order are "older"; younger neighbours and arrows feed the
// modified points of the bottom surface.
struct VertexContext {
    std::string id;
    long long e = -1;
    long long m = 1;
    long long l = 0; // m = 2l or 2l+1
    long long x = 0; // -(1/2) * sum of older neighbour multiplicities
    std::vector<std::pair<std::string, long long>> older;   // (vertex, m)
    std::vector<std::pair<std::string, long long>> younger; // (vertex/arrow, m')
    bool even() const { return m % 2 == 0; }
};

VertexContext vertex_context(const OrderedCurveGraph& og, const std::string& id);

enum class LevelRole { Ladder, Bottom, OddMid, OddEnd };

// One compact ruled surface of the tower. Plain levels keep the signed
// parameter n ("upper curve self-int n, lower curve -n"); the bottom of an
// even tower is the modified surface.
struct TowerLevel {
    std::string tag; // "T1".."Tl", "B", "U", "V"
    LevelRole role = LevelRole::Ladder;
    long long signed_param = 0;
    long long g_mult = 0;
    std::optional<ModifiedRuledSurface> modified;
};

// Intersection curve between level k-1 (or the disc bundle on top) and
// level k: self-intersections in the two surfaces.
struct TowerCurve {
    long long upper_self = 0;
    long long lower_self = 0;
};

struct TowerDescriptor {
    DiscBundleModel top;       // E^m(A_i), g-multiplicity 0
    long long section_self = 0; // distinguished section of the top: x_i
    std::vector<TowerLevel> levels; // ordered top -> bottom
    std::vector<TowerCurve> curves; // curves[k] sits above levels[k]
    int strict_site = -1;           // index into levels; -1 = on the top
    long long normal_x = 0, normal_e = 0; // pair (x_i, e_i)
    std::optional<long long> free_section_self; // lower section of V (odd)
};

TowerDescriptor build_tower(const VertexContext& ctx);

} // namespace zres
