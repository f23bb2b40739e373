#pragma once

#include <string>
#include <vector>

#include "zres/curve_graph.hpp"
#include "zres/divisor_complex.hpp"
#include "zres/surface_graph.hpp"

namespace zres {

struct CheckItem {
    std::string check;
    std::string scope;
    bool pass = true;
    std::string details;
};

struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const;
    void sort(); // deterministic: by (check, scope)
    void merge(const CheckReport& other);
};

// pi^* balance of one modified fiber: multiplicity-weighted row sums of the
// chain intersection matrix vanish.
bool chain_balanced(const ChainDescriptor& chain);

CheckReport check_fiber_balance(const DivisorComplex& cx);

// m_1 (C^2 in D_2) + m_2 (C^2 in D_1) + sum of triple-point multiplicities
// = 0 on every compact intersection curve with complete data. Curves where
// the strict transform sheet meets a multiplicity-0 divisor are skipped
// (the sheet is tangent there, the formula needs normal crossings).
CheckReport check_triple_point_formula(const DivisorComplex& cx);

CheckReport check_negative_definite(const SGraph& g);

// Pairing cross-check: <E_k^2, [C]> equals C^2 in the neighbouring divisor
// for every curve on a compact level, including the strict transform trace.
CheckReport check_class_pairing(const DivisorComplex& cx);

// Full pipeline plus every consistency check, starting from a raw curve
// graph (parity normalization and ordering applied internally).
CheckReport run_all(const CurveGraph& g);

} // namespace zres
