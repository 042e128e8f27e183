#pragma once

#include "delsarte/int_matrix.hpp"
#include "delsarte/weight_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delsarte {

enum class Family { Fermat, QuasiDiagonal, General };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct HodgePair {
    std::uint64_t h11 = 0;
    std::uint64_t h12 = 0;
    bool operator==(const HodgePair&) const = default;
};

/// A weighted Delsarte threefold: five monomials in five variables, one per
/// matrix row, of common weighted degree m. d = |det matrix| controls all of
/// the character arithmetic downstream.
///
/// reference_hodge carries externally supplied Hodge numbers of a crepant
/// resolution; they are metadata for reports and are never computed here.
struct DelsarteThreefold {
    WeightSystem weights;
    IntMatrix matrix;
    std::uint64_t d = 0;
    Family family = Family::General;
    std::optional<HodgePair> reference_hodge;

    /// Diagonal matrix with entries m / q_i. Throws std::invalid_argument
    /// ("not Fermat-realizable") when some weight does not divide the degree.
    static DelsarteThreefold from_fermat(const WeightSystem& q);

    /// Matrix with first row x_0^{m_0} x_1 and diagonal rows x_i^{m_i},
    /// i = 1..4. Requires q_0 m_0 + q_1 = m and q_i m_i = m.
    static DelsarteThreefold from_quasidiagonal(const WeightSystem& q,
                                                const std::array<std::uint64_t, 5>& exponents);

    /// Any 5x5 nonnegative nonsingular exponent matrix. Condition checks are
    /// deferred to validate().
    static DelsarteThreefold general(const WeightSystem& q, IntMatrix matrix,
                                     Family family = Family::General);
};

/// A prime to serve as the characteristic; constructor rejects composites.
struct CharacteristicP {
    explicit CharacteristicP(std::uint64_t prime);
    std::uint64_t p;
};

/// Violations are reported as data, one line per failed condition, so that a
/// single pass can name everything that is wrong with an input.
struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

/// Checks the matrix conditions (i)-(iv) for a Delsarte datum: nonnegative
/// entries, weighted row degrees equal to m, a zero in every column,
/// nonsingularity, plus weight well-formedness. With a characteristic given,
/// also checks the coprimality requirements on p.
ValidationReport validate(const DelsarteThreefold& x,
                          const std::optional<CharacteristicP>& p = std::nullopt);

}  // namespace delsarte
