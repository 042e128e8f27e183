#pragma once

// Test-only reference implementations, deliberately naive and independent of
// the library's computation paths.

#include "delsarte/int_matrix.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace oracles {

// Laplace cofactor expansion along the first row. Exponential; fine for n <= 6.
inline delsarte::Int laplace_determinant(const delsarte::IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    delsarte::Int det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        delsarte::IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t mj = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, mj++) = m.at(r, c);
            }
        }
        delsarte::Int term = m.at(0, j) * laplace_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// All solutions of m.x == 0 (mod n) by scanning n^cols candidates.
inline std::set<std::vector<std::uint64_t>> bruteforce_kernel(const delsarte::IntMatrix& m,
                                                              std::uint64_t n)
{
    std::set<std::vector<std::uint64_t>> sols;
    const std::size_t c = m.cols(), r = m.rows();
    std::vector<std::uint64_t> x(c, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            delsarte::Int acc = 0;
            for (std::size_t j = 0; j < c; ++j) acc += m.at(i, j) * delsarte::Int(x[j]);
            ok = mpz_fdiv_ui(acc.get_mpz_t(), static_cast<unsigned long>(n)) == 0;
        }
        if (ok) sols.insert(x);
        std::size_t k = 0;
        while (k < c && ++x[k] == n) x[k++] = 0;
        if (k == c) break;
    }
    return sols;
}

}  // namespace oracles
