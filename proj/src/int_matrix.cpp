#include "delsarte/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace delsarte {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
    if (entries_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t r = rows.size();
    std::size_t c = rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Int determinant(const IntMatrix& m)
{
    if (!m.square()) throw std::invalid_argument("determinant: matrix must be square");
    const std::size_t n = m.rows();
    IntMatrix w = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && w.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                // division by the previous pivot is exact (Sylvester identity)
                mpz_divexact(w.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    Int det = w.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

IntMatrix adjugate(const IntMatrix& m)
{
    if (!m.square()) throw std::invalid_argument("adjugate: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 1) return IntMatrix::identity(1);
    IntMatrix adj(n, n);
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t mi = 0;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::size_t mj = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(mi, mj) = m.at(r, c);
                    ++mj;
                }
                ++mi;
            }
            Int cof = determinant(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(j, i) = cof;  // adjugate is the transposed cofactor matrix
        }
    }
    return adj;
}

}  // namespace delsarte
