#pragma once

#include <string>

#include <json.hpp>

#include "zres/curve_graph.hpp"
#include "zres/divisor_complex.hpp"
#include "zres/surface_graph.hpp"
#include "zres/verifier.hpp"

namespace zres {

// Canonical serialization: fixed key order, two-space indent, trailing
// newline. Identical values produce identical bytes.
using ojson = nlohmann::ordered_json;

ojson curve_graph_to_json(const CurveGraph& g);
CurveGraph curve_graph_from_json(const ojson& j);

ojson complex_to_json(const DivisorComplex& cx);
// Restores the record level (surfaces, curves, triple points, order); the
// construction caches are not serialized and stay empty here.
DivisorComplex complex_from_json(const ojson& j);

ojson sgraph_to_json(const SGraph& g);
SGraph sgraph_from_json(const ojson& j);

ojson report_to_json(const CheckReport& r);

std::string dump_canonical(const ojson& j);
ojson parse_json(const std::string& text); // line/offset diagnostics on error

} // namespace zres
