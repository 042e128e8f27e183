#pragma once

#include <array>
#include <cstdint>

namespace delsarte {

/// Weights (q_0,...,q_4) of a weighted projective 4-space together with the
/// degree m of the hypersurface under consideration.
struct WeightSystem {
    std::array<std::uint64_t, 5> weights{};
    std::uint64_t degree = 0;

    std::uint64_t weight_sum() const;

    /// The hypersurface has trivial canonical sheaf iff the weights sum to the
    /// degree.
    bool is_calabi_yau() const { return weight_sum() == degree; }

    /// All weights positive and every 4-element subset coprime.
    bool well_formed() const;

    bool operator==(const WeightSystem&) const = default;
    auto operator<=>(const WeightSystem&) const = default;
};

}  // namespace delsarte
