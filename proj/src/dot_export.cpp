#include "zres/dot_export.hpp"

#include <sstream>

namespace zres {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string curve_graph_to_dot(const CurveGraph& g) {
    std::ostringstream os;
    os << "graph curve_graph {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices)
        os << "  " << quote(v.id) << " [label=" << quote(v.id + "\\ne=" + std::to_string(v.e) +
                                                        " m=" + std::to_string(v.m))
           << "];\n";
    for (const auto& a : g.arrows)
        os << "  " << quote(a.id) << " [shape=rarrow, label=" << quote("(" + std::to_string(a.m) + ")")
           << "];\n";
    for (const auto& e : g.edges)
        os << "  " << quote(e[0]) << " -- " << quote(e[1]) << ";\n";
    for (const auto& a : g.arrows)
        os << "  " << quote(a.attach) << " -- " << quote(a.id) << ";\n";
    os << "}\n";
    return os.str();
}

std::string complex_to_dot(const DivisorComplex& cx) {
    std::ostringstream os;
    os << "graph divisor_complex {\n";
    os << "  node [shape=box];\n";
    for (const auto& s : cx.surfaces) {
        const std::string label = s.display + " (" + std::to_string(s.g_mult) + ")";
        const bool compactish = s.kind == SurfaceKind::CompactLevel;
        os << "  " << quote(s.id) << " [label=" << quote(label)
           << (compactish ? "" : ", style=dashed") << "];\n";
    }
    for (const auto& c : cx.curves) {
        if (c.surfaces.size() != 2) continue;
        std::string attrs;
        if (!c.compact) attrs = " [style=dotted]";
        os << "  " << quote(c.surfaces[0]) << " -- " << quote(c.surfaces[1]) << attrs << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string sgraph_to_dot(const SGraph& g) {
    std::ostringstream os;
    os << "graph surface_dual_graph {\n";
    os << "  node [shape=circle];\n";
    for (const auto& v : g.vertices)
        os << "  " << quote(v.id) << " [label=" << quote("[" + std::to_string(v.genus) + "] " +
                                                        std::to_string(v.self_int))
           << "];\n";
    for (const auto& [a, b] : g.edges)
        os << "  " << quote(a) << " -- " << quote(b) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace zres
