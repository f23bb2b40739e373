#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "zres/intmath.hpp"

namespace zres {

// Decorated embedded resolution graph of an isolated plane curve
// singularity f(x,y): rational curves A_i with self-intersection e and
// multiplicity m of the pullback of f, simple edges for intersection
// points, and arrows for the strict transforms of the branches of f.

struct Vertex {
    std::string id;
    long long e = -1; // self-intersection, <= -1
    long long m = 1;  // multiplicity of f along the curve, >= 1
};

struct Arrow {
    std::string id;
    std::string attach; // vertex the branch crosses
    long long m = 1;    // reduced f: always 1
};

struct CurveGraph {
    std::string name;
    std::vector<Vertex> vertices;
    std::vector<std::array<std::string, 2>> edges;
    std::vector<Arrow> arrows;

    bool has_vertex(const std::string& id) const;
    const Vertex& vertex(const std::string& id) const; // throws StructuralError
    // Edge-neighbours of a vertex, sorted by id.
    std::vector<std::string> neighbors(const std::string& id) const;
    std::vector<const Arrow*> arrows_at(const std::string& id) const;
    // e on the diagonal, 1 for edges, indexed like `vertices`.
    IntMatrix intersection_matrix() const;
};

// Malformed references (unknown/duplicate ids, empty graph) are structural
// errors; everything else validate() can say is reported as data.
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Violation {
    std::string rule;             // e.g. "relation", "negative_definite"
    std::string detail;
    std::vector<std::string> ids; // offending vertex/edge/arrow ids
};
using ValidationReport = std::vector<Violation>;

ValidationReport validate(const CurveGraph& g);
bool is_valid(const CurveGraph& g);

// No edge joins two odd-m vertices and no arrow sits on an odd-m vertex.
bool is_parity_normalized(const CurveGraph& g);

// Blow up every odd-odd intersection point once: a vertex with e = -1 and
// the (even) sum of the two multiplicities is inserted between them, each
// endpoint vertex losing 1 from e. One pass suffices.
CurveGraph normalize_parity(const CurveGraph& g);

struct OrderedCurveGraph {
    CurveGraph graph;
    std::vector<std::string> order; // all even-m first, then odd-m
    long long position(const std::string& id) const;
};

// Canonical order: even-m vertices before odd-m, ids ascending per class.
OrderedCurveGraph order_vertices(const CurveGraph& g);
// Explicit order; rejected unless it is a permutation respecting the
// even-before-odd rule.
OrderedCurveGraph order_with_override(const CurveGraph& g,
                                      const std::vector<std::string>& order);

// Resolution graph of x^p + y^q (p,q >= 2), computed by simulating the
// point blow-ups of the Euclidean sequence, then parity-normalized.
CurveGraph brieskorn_graph(long long p, long long q);

// Single graph-level blow-up moves; used by random_refinement and handy in
// tests. All preserve validity.
CurveGraph blow_up_free(const CurveGraph& g, const std::string& vertex_id,
                        const std::string& new_id);
CurveGraph blow_up_edge(const CurveGraph& g, const std::string& a,
                        const std::string& b, const std::string& new_id);
CurveGraph blow_up_arrow(const CurveGraph& g, const std::string& arrow_id,
                         const std::string& new_id);

// `steps` random blow-ups (free or satellite, uniform over all current
// candidate sites), then normalize_parity. Deterministic per seed.
CurveGraph random_refinement(const CurveGraph& g, unsigned long long seed,
                             int steps);

} // namespace zres
