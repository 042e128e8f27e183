#include "delsarte/smith.hpp"

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>

namespace delsarte {

namespace {

struct Snf {
    IntMatrix w, u, v;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(a, j), w.at(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < w.rows(); ++i) std::swap(w.at(i, a), w.at(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
    }
    // row a -= q * row b
    void row_sub(std::size_t a, std::size_t b, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(a, j) -= q * w.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) -= q * u.at(b, j);
    }
    // col a -= q * col b
    void col_sub(std::size_t a, std::size_t b, const Int& q)
    {
        if (q == 0) return;
        for (std::size_t i = 0; i < w.rows(); ++i) w.at(i, a) -= q * w.at(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i) v.at(i, a) -= q * v.at(i, b);
    }
    void row_add(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(a, j) += w.at(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) += u.at(b, j);
    }
    void negate_row(std::size_t a)
    {
        for (std::size_t j = 0; j < w.cols(); ++j) w.at(a, j) = -w.at(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j) u.at(a, j) = -u.at(a, j);
    }

    std::optional<std::pair<std::size_t, std::size_t>> min_abs_nonzero(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int best_abs;
        for (std::size_t i = t; i < w.rows(); ++i)
            for (std::size_t j = t; j < w.cols(); ++j) {
                const Int& e = w.at(i, j);
                if (e == 0) continue;
                Int a = abs(e);
                if (!best || a < best_abs) {
                    best = {i, j};
                    best_abs = a;
                }
            }
        return best;
    }
};

}  // namespace

SnfDecomposition smith_normal_form(const IntMatrix& m)
{
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t k = std::min(r, c);
    Snf s{m, IntMatrix::identity(r), IntMatrix::identity(c)};

    for (std::size_t t = 0; t < k; ++t) {
        for (;;) {
            auto piv = s.min_abs_nonzero(t);
            if (!piv) break;  // remaining submatrix is zero
            s.swap_rows(t, piv->first);
            s.swap_cols(t, piv->second);

            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (s.w.at(i, t) == 0) continue;
                Int q = s.w.at(i, t) / s.w.at(t, t);  // truncated, |rem| < |pivot|
                s.row_sub(i, t, q);
                if (s.w.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (s.w.at(t, j) == 0) continue;
                Int q = s.w.at(t, j) / s.w.at(t, t);
                s.col_sub(j, t, q);
                if (s.w.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;  // a smaller pivot exists now; reselect

            // pivot must divide every remaining entry for the chain to hold
            bool fixed = true;
            for (std::size_t i = t + 1; i < r && fixed; ++i)
                for (std::size_t j = t + 1; j < c && fixed; ++j)
                    if (s.w.at(i, j) % s.w.at(t, t) != 0) {
                        s.row_add(t, i);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (s.w.at(t, t) < 0) s.negate_row(t);
    }

    SnfDecomposition out{{}, std::move(s.u), std::move(s.v)};
    out.diag.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.diag.push_back(s.w.at(i, i));
    return out;
}

Int KernelModGenerators::group_order() const
{
    Int o = 1;
    for (const Int& g : orders) o *= g;
    return o;
}

KernelModGenerators kernel_mod(const IntMatrix& m, const Int& modulus)
{
    if (modulus < 2) throw std::domain_error("kernel_mod: modulus must be >= 2");
    // With U m V = D, the substitution x = V y turns m.x == 0 (mod n) into the
    // diagonal system D.y == 0: coordinate j ranges over multiples of
    // n / gcd(D_jj, n), giving gcd(D_jj, n) choices. Columns beyond the
    // diagonal (or with D_jj = 0) are free.
    SnfDecomposition snf = smith_normal_form(m);
    const std::size_t c = m.cols();

    KernelModGenerators out{modulus, c, {}, {}};
    for (std::size_t j = 0; j < c; ++j) {
        Int s = j < snf.diag.size() ? snf.diag[j] : Int(0);
        Int g = gcd(s, modulus);  // gcd(0, n) = n
        if (g == 1) continue;
        Int step = modulus / g;
        std::vector<Int> gen(c);
        for (std::size_t i = 0; i < c; ++i) {
            Int e = snf.right.at(i, j) * step;
            mpz_mod(e.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
            gen[i] = e;
        }
        out.generators.push_back(std::move(gen));
        out.orders.push_back(g);
    }
    return out;
}

}  // namespace delsarte
