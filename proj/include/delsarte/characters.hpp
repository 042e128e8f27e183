#pragma once

#include "delsarte/errors.hpp"
#include "delsarte/threefold.hpp"

#include <array>
#include <cstdint>
#include <functional>

namespace delsarte {

/// Default ceiling on the number of candidate lattice points an enumeration
/// may stream (the largest catalog instance needs ~3.3e6).
inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t(1) << 25;

/// An element of the character group (Z/d)^5 with nonzero entries summing to
/// zero mod d. Entries are kept as canonical representatives in [1, d-1], so
/// the norm is (sum of entries)/d - 1, an integer in {0,1,2,3}. All integer
/// arithmetic, no rounding.
class CharacterVector {
public:
    CharacterVector(std::array<std::uint64_t, 5> entries, std::uint64_t modulus);

    const std::array<std::uint64_t, 5>& entries() const { return entries_; }
    std::uint64_t modulus() const { return modulus_; }

    int norm() const;

    /// t * alpha with t a unit mod d (units permute the character set).
    CharacterVector scaled(std::uint64_t t) const;
    CharacterVector negated() const;

    bool operator==(const CharacterVector&) const = default;
    auto operator<=>(const CharacterVector&) const = default;

private:
    std::array<std::uint64_t, 5> entries_;
    std::uint64_t modulus_;
};

/// count doubles as the middle-cohomology dimension of the associated Fermat
/// quotient, treating each character eigenspace as one-dimensional (the
/// convention consistent with the h^{1,2} values of the reference examples).
struct CharSetSummary {
    std::uint64_t modulus = 0;
    std::uint64_t count = 0;
    std::array<std::uint64_t, 4> graded_counts{};  // indexed by norm
};

using CharacterVisitor = std::function<void(const CharacterVector&)>;

/// Streams the characters attached to x: solutions of the transposed matrix
/// congruences mod d that have no zero entry and zero entry-sum. Visits each
/// member once (if a visitor is given) and returns the graded tally. Throws
/// EnumerationCapExceeded when the ambient solution group is larger than cap.
CharSetSummary enumerate_aset(const DelsarteThreefold& x,
                              std::uint64_t cap = kDefaultEnumerationCap,
                              const CharacterVisitor& visit = nullptr);

/// The unique norm-zero character of a Calabi-Yau input, found by scanning
/// the full set. Throws IntegrityError when the input is not Calabi-Yau or
/// the scan does not find exactly one.
CharacterVector find_alpha0(const DelsarteThreefold& x,
                            std::uint64_t cap = kDefaultEnumerationCap);

/// Sum of the norms of t*alpha over the cyclic group generated by p_class in
/// (Z/d)^x. This is the quantity whose comparison with the group order
/// decides the Newton slopes; kept brute-force as an oracle.
std::uint64_t aH_bruteforce(const CharacterVector& alpha, std::uint64_t p_class);

/// Number of characters whose orbit norm sum stays below the order f of p
/// mod d: the length of the slope-less-than-one part of the Newton polygon.
/// Independent slow path used to validate the height computation.
std::uint64_t newton_low_slope_count(const DelsarteThreefold& x, const CharacteristicP& p,
                                     std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace delsarte
