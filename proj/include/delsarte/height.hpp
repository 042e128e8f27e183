#pragma once

#include "delsarte/characters.hpp"
#include "delsarte/threefold.hpp"

#include <map>
#include <optional>
#include <vector>

namespace delsarte {

/// The norm-zero character divided by the gcd e of its entries with d:
/// entries in [1, d_A-1] summing to d_A, jointly coprime to d_A = d/e. The
/// height of the threefold only depends on this reduced datum.
struct ReducedCharacter {
    std::uint64_t e;
    std::uint64_t d_A;
    std::array<std::uint64_t, 5> alpha_A;

    ReducedCharacter(std::uint64_t e, std::uint64_t d_A, std::array<std::uint64_t, 5> alpha_A);
};

/// Outcome of the orbit norm test for one residue class t mod d_A.
/// Finite: h equals the multiplicative order of t, and witness_norms are the
/// norms of t^i * alpha_A for 0 <= i < h (0 first, then 1s).
/// Infinite: fail_index is the smallest i whose norm reaches 2 or 3.
struct HeightResult {
    bool finite = false;
    std::uint64_t h = 0;
    std::vector<int> witness_norms;
    std::uint64_t fail_index = 0;
    int fail_norm = 0;

    static HeightResult finite_result(std::uint64_t h, std::vector<int> norms);
    static HeightResult infinite_result(std::uint64_t fail_index, int fail_norm);
    bool operator==(const HeightResult&) const = default;
};

struct SpectrumGroup {
    bool finite = false;
    std::uint64_t height = 0;                    // meaningful when finite
    std::uint64_t class_count = 0;
    std::vector<std::uint64_t> representatives;  // the three smallest residues
    bool operator==(const SpectrumGroup&) const = default;
};

/// Heights for every unit residue class mod d_A, plus the grouped view sorted
/// by height (infinite last) that matches how the classification tables are
/// usually presented.
struct ResidueSpectrum {
    std::uint64_t d_A = 0;
    std::uint64_t phi = 0;
    std::map<std::uint64_t, HeightResult> classes;
    std::vector<SpectrumGroup> groups;
};

/// e = gcd of the entries of alpha_0 with d, d_A = d/e, alpha_A = alpha_0/e.
/// Requires norm zero.
ReducedCharacter reduce_alpha0(const CharacterVector& alpha0);

/// Least k >= 1 with t^k == 1 mod n, via the factorization of phi(n).
std::uint64_t multiplicative_order(std::uint64_t t, std::uint64_t n);

/// The orbit norm test: finite iff every norm along the orbit of alpha_A
/// under t stays <= 1, in which case the height is the orbit length f_A.
HeightResult height_class(std::uint64_t t, const ReducedCharacter& rc);

/// Full pipeline for a validated threefold in characteristic p:
/// find_alpha0 -> reduce_alpha0 -> height_class(p mod d_A).
HeightResult height(const DelsarteThreefold& x, const CharacteristicP& p,
                    std::uint64_t cap = kDefaultEnumerationCap);

/// height_class over every unit mod d_A.
ResidueSpectrum spectrum(const ReducedCharacter& rc);

bool orbit_contains_minus_one(std::uint64_t t, std::uint64_t n);

enum class SupersingularHint { HeightOne, Infinite };

/// The two decidable-by-inspection cases: t == 1 mod d_A forces height 1, and
/// -1 in the orbit of t forces infinite height. Must agree with height_class
/// whenever it fires; the converse direction fails in general (a class can be
/// infinite without -1 in its orbit).
std::optional<SupersingularHint> supersingular_shortcut(std::uint64_t t, std::uint64_t d_A);

}  // namespace delsarte
