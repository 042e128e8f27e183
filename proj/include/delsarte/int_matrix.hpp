#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace delsarte {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers, row-major. Immutable in
/// practice: all the operations below are pure functions returning new values.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    IntMatrix transposed() const;

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant via Bareiss fraction-free elimination; every
/// intermediate value is an integer (a minor of the input), no rationals.
Int determinant(const IntMatrix& m);

/// Adjugate (transposed cofactor matrix): m * adjugate(m) == determinant(m) * I.
IntMatrix adjugate(const IntMatrix& m);

}  // namespace delsarte
