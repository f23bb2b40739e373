#pragma once

#include <string>

#include "zres/curve_graph.hpp"
#include "zres/divisor_complex.hpp"
#include "zres/surface_graph.hpp"

namespace zres {

std::string curve_graph_to_dot(const CurveGraph& g);
// surface adjacency multigraph, node label "kind/param (g_mult)"
std::string complex_to_dot(const DivisorComplex& cx);
// vertex label "[g] e"
std::string sgraph_to_dot(const SGraph& g);

} // namespace zres
