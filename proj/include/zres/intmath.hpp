#pragma once

#include <vector>
#include <cstdint>

namespace zres {

// Symmetric integer matrices, exact arithmetic throughout (no floating point).
using IntMatrix = std::vector<std::vector<long long>>;

// Sylvester test: M is negative definite iff the k-th leading principal
// minor has sign (-1)^k for every k. Minors are computed with arbitrary
// precision integers, so the answer is exact for any input size.
bool negative_definite(const IntMatrix& m);

// Leading principal minor signs (-1, 0, +1), mostly for diagnostics.
std::vector<int> leading_minor_signs(const IntMatrix& m);

} // namespace zres
