#pragma once

#include "delsarte/height.hpp"
#include "delsarte/threefold.hpp"

#include <filesystem>
#include <set>
#include <vector>

namespace delsarte {

/// One classified weight system: the weights (role order for quasi-diagonal
/// inputs: chain head, chain target, then the diagonal positions by ascending
/// weight), the realizing exponents, and the reduced character data computed
/// through the character-lattice pipeline.
struct WeightRecord {
    WeightSystem weight_system;
    Family family = Family::General;
    std::optional<std::array<std::uint64_t, 5>> exponents;
    std::uint64_t e = 1;
    std::uint64_t d_A = 0;
    std::array<std::uint64_t, 5> alpha_A{};
    std::optional<HodgePair> reference_hodge;

    DelsarteThreefold build() const;
    ReducedCharacter reduced() const { return ReducedCharacter(e, d_A, alpha_A); }
};

/// All Calabi-Yau weight systems realizable by a diagonal quintic in five
/// variables: tuples q_0 <= ... <= q_4 with every q_i dividing m = sum q_i
/// and every 4-subset coprime. There are 147, the largest of degree 1806.
std::vector<WeightSystem> enumerate_fermat_weights();

/// Records for the Fermat catalog, reduced data computed via find_alpha0.
std::vector<WeightRecord> fermat_records();

/// All Calabi-Yau weight systems realizable by a chain-and-Fermat equation
/// x_0^{m_0} x_1 + x_1^{m_1} + x_2^{m_2} + x_3^{m_3} + x_4^{m_4} whose role
/// order is the ascending weight order (chain on the two smallest weights,
/// m_0 >= 2). Under this normalization the exponent tuple of a weight system
/// is unique, and there are 137 of them.
std::vector<WeightRecord> enumerate_quasidiagonal_weights();

/// Union of the finite heights over the residue spectra of all records.
/// Exhausts every unit class mod d_A, so no characteristic search is needed.
std::set<std::uint64_t> classify_finite_heights(const std::vector<WeightRecord>& records);

/// True when a finite height exceeds min(h11, h12) + 1: such a threefold has
/// no symplectic quotient-based mirror partner. Infinite heights never flag.
bool mirror_obstruction_flag(const HeightResult& h, std::uint64_t h11, std::uint64_t h12);

/// Reference Hodge numbers for the handful of weight systems with externally
/// reported values; lookup data, never computed.
std::optional<HodgePair> reference_hodge_for(Family family, const WeightSystem& q);

struct HeightAtlas {
    std::string family;  // "fermat" or "quasi-diagonal"
    std::vector<WeightRecord> records;
    std::vector<ResidueSpectrum> spectra;  // parallel to records
    std::set<std::uint64_t> finite_heights;
};

/// Records plus spectra plus the finite-height set for one family.
HeightAtlas build_atlas(Family family);

/// Atlas persistence. The JSON document stores the grouped spectrum view;
/// per-residue class maps are cheap to recompute from the records, so a
/// loaded atlas has empty `classes` maps. Serialization is byte-stable for
/// identical inputs.
void save_atlas(const HeightAtlas& atlas, const std::filesystem::path& path);
HeightAtlas load_atlas(const std::filesystem::path& path);

/// CSV with one row per residue class: family,weights,m,d_A,residue,height.
std::string atlas_to_csv(const HeightAtlas& atlas);

}  // namespace delsarte
