#pragma once

#include <string>
#include <vector>

#include "zres/divisor_complex.hpp"

namespace zres {

// Dual resolution graph of the normal surface singularity {f + z^2 = 0}:
// one vertex per component of the strict transform curves, decorated with
// genus and self-intersection; edges are their intersection points.

SCurveData strict_transform_curve(const DivisorComplex& cx, const std::string& vertex_id);

struct SGraphVertex {
    std::string id;
    std::string from_vertex;
    std::string comp; // "", "+", "-"
    long long genus = 0;
    long long self_int = 0;
};

struct SGraph {
    std::vector<SGraphVertex> vertices;
    std::vector<std::pair<std::string, std::string>> edges; // multiset
    IntMatrix intersection_matrix() const;
};

SGraph surface_dual_graph(const DivisorComplex& cx);

struct BlowDownResult {
    SGraph graph;
    // a genus-0 (-1)-vertex survives but cannot be contracted (non-simple
    // incidences); the reducer stops there
    bool blocked = false;
};

// Repeatedly contract genus-0 self-intersection -1 vertices whose
// incident edges are simple and lead to distinct neighbours.
BlowDownResult blow_down_minimal(const SGraph& g);

// Exact isomorphism of decorated multigraphs (genus, self_int respected).
bool sgraph_isomorphic(const SGraph& a, const SGraph& b);

// Convenience for tests: the A_n chain of n rational (-2)-curves.
SGraph a_chain(int n);

} // namespace zres
