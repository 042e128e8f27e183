#include "delsarte/weight_system.hpp"

#include <numeric>

namespace delsarte {

std::uint64_t WeightSystem::weight_sum() const
{
    std::uint64_t s = 0;
    for (std::uint64_t q : weights) s += q;
    return s;
}

bool WeightSystem::well_formed() const
{
    for (std::uint64_t q : weights)
        if (q == 0) return false;
    for (int omit = 0; omit < 5; ++omit) {
        std::uint64_t g = 0;
        for (int i = 0; i < 5; ++i)
            if (i != omit) g = std::gcd(g, weights[i]);
        if (g != 1) return false;
    }
    return true;
}

}  // namespace delsarte
