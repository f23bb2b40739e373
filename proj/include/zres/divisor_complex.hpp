#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zres/curve_graph.hpp"
#include "zres/local_models.hpp"
#include "zres/scurve.hpp"
#include "zres/tower.hpp"

namespace zres {

// Global model of the exceptional divisor of the resolution of
// g = f(x,y) + z^2: the towers over all vertices glued along the modified
// fibers, plus the strict transform sheet and the vertical disc family.

enum class SurfaceKind { CompactLevel, NoncompactE, StrictSheet, NoncompactD };

struct SurfaceRec {
    std::string id;
    std::string display; // e.g. "X^m_2", "X_1", "E^m(A1)", "St(g)"
    SurfaceKind kind = SurfaceKind::CompactLevel;
    std::string owner; // vertex id; empty for St(g) and the disc family
    long long g_mult = 0;
    std::string role; // "Em", "T1".., "B", "U", "V", "St", "D"
    std::optional<long long> signed_param;        // plain levels
    std::optional<ModifiedRuledSurface> modified; // bottom levels
    std::optional<long long> picard;              // compact levels
    std::optional<DiscBundleModel> disc;          // E^m surfaces
    std::optional<long long> section_self;        // E^m: x_i
    // Basis of Pic for compact levels: curve ids and the token "f".
    std::vector<std::string> basis;
};

enum class BaseLocus { Generic, EdgePoint, ArrowPoint };

struct CurveRec {
    std::string id;
    std::vector<std::string> surfaces;               // one or two
    std::vector<std::optional<long long>> self_ints; // parallel to surfaces
    bool compact = true;
    BaseLocus base = BaseLocus::Generic;
    std::vector<std::string> base_ids;
    bool figure_ambiguous = false;
    // class over the basis of each incident compact level
    std::map<std::string, std::vector<long long>> class_in;

    std::optional<long long> self_int_in(const std::string& surface) const;
};

struct TripleRec {
    std::string curve;
    std::string third;
};

struct DivisorComplex {
    std::vector<SurfaceRec> surfaces;
    std::vector<CurveRec> curves;
    std::vector<TripleRec> triple_points;
    std::vector<std::string> order;

    // construction context, kept for the downstream modules
    std::map<std::string, VertexContext> contexts;
    std::map<std::string, TowerDescriptor> towers;
    std::map<std::string, SCurveData> scurves;

    const SurfaceRec& surface(const std::string& id) const;
    const CurveRec& curve(const std::string& id) const;
    long long g_mult_of(const std::string& surface_id) const;
    std::vector<const CurveRec*> curves_on(const std::string& surface_id) const;
};

DivisorComplex build_complex(const OrderedCurveGraph& og);

struct CurveClass {
    std::string surface;
    std::vector<std::string> basis;
    std::vector<long long> coeffs;
};

// E_k^2 in Pic(E_k) from (g).E_k = 0: minus the multiplicity-weighted sum
// of all intersection curves on E_k, divided by the multiplicity of E_k.
// Throws if the numerator is not divisible (a construction bug).
CurveClass self_intersection_class(const DivisorComplex& cx, const std::string& surface_id);

// Intersection pairing of two classes over a compact level's basis.
long long pair_classes(const DivisorComplex& cx, const std::string& surface_id,
                       const std::vector<long long>& a, const std::vector<long long>& b);

} // namespace zres
