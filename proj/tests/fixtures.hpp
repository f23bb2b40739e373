#pragma once

#include "zres/curve_graph.hpp"

namespace zres::testfix {

// Minimal embedded resolution of the cusp x^2 + y^3.
inline CurveGraph cusp() {
    CurveGraph g;
    g.name = "cusp";
    g.vertices = {{"A1", -3, 2}, {"A2", -1, 6}, {"A3", -2, 3}};
    g.edges = {{"A1", "A2"}, {"A2", "A3"}};
    g.arrows = {{"St1", "A2", 1}};
    return g;
}

// One blow-up of the node x^2 + y^2.
inline CurveGraph node() {
    CurveGraph g;
    g.name = "node";
    g.vertices = {{"A", -1, 2}};
    g.arrows = {{"St1", "A", 1}, {"St2", "A", 1}};
    return g;
}

// Over-resolved smooth curve: carries a multiplicity-1 vertex.
inline CurveGraph smooth_overblown() {
    CurveGraph g;
    g.name = "smooth_overblown";
    g.vertices = {{"A", -2, 1}, {"B", -1, 2}};
    g.edges = {{"A", "B"}};
    g.arrows = {{"St1", "B", 1}};
    return g;
}

} // namespace zres::testfix
