#include "zres/intmath.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace zres {

using big = boost::multiprecision::cpp_int;

// Fraction-free Gaussian elimination (Bareiss). After step k the pivot
// a[k][k] equals the k+1-st leading principal minor of the input.
std::vector<int> leading_minor_signs(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<big>> a(n, std::vector<big>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];

    std::vector<int> signs;
    signs.reserve(n);
    big prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // A zero pivot means a vanishing leading minor; from here on
            // Bareiss needs pivoting which would reorder minors. A zero
            // minor already rules out definiteness, report and stop.
            signs.push_back(0);
            for (std::size_t r = k + 1; r < n; ++r) signs.push_back(0);
            return signs;
        }
        signs.push_back(a[k][k] > 0 ? 1 : -1);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return signs;
}

bool negative_definite(const IntMatrix& m) {
    if (m.empty()) return true; // empty form, vacuously definite
    const auto signs = leading_minor_signs(m);
    for (std::size_t k = 0; k < signs.size(); ++k) {
        const int expect = (k % 2 == 0) ? -1 : 1;
        if (signs[k] != expect) return false;
    }
    return true;
}

} // namespace zres
