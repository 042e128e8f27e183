#pragma once

#include "delsarte/int_matrix.hpp"

namespace delsarte {

/// left * original * right = diag(diag), with left and right unimodular
/// (|det| = 1) and diag[i] | diag[i+1], nonnegative, zeros trailing.
struct SnfDecomposition {
    std::vector<Int> diag;
    IntMatrix left;
    IntMatrix right;
};

/// Deterministic Smith normal form. Pivot rule: the nonzero entry of the
/// working submatrix with smallest absolute value, ties broken by row then
/// column. Keeps intermediate entries small and makes the output reproducible.
SnfDecomposition smith_normal_form(const IntMatrix& m);

/// Generating set for the solution group {x in (Z/modulus)^cols : m.x == 0}.
/// Generators come with their additive orders; the group is the direct sum of
/// the cyclic groups they span, so its order is the product of the orders.
/// Enumeration of the full group is left to callers (it can be huge).
struct KernelModGenerators {
    Int modulus;
    std::size_t dimension;                     // cols of the input system
    std::vector<std::vector<Int>> generators;  // entries canonical in [0, modulus)
    std::vector<Int> orders;                   // parallel to generators, each > 1
    Int group_order() const;
};

KernelModGenerators kernel_mod(const IntMatrix& m, const Int& modulus);

}  // namespace delsarte
