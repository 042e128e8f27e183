#include "delsarte/characters.hpp"

#include "delsarte/number_theory.hpp"
#include "delsarte/smith.hpp"

#include <numeric>
#include <stdexcept>

namespace delsarte {

CharacterVector::CharacterVector(std::array<std::uint64_t, 5> entries, std::uint64_t modulus)
    : entries_(entries), modulus_(modulus)
{
    if (modulus < 2) throw std::domain_error("CharacterVector: modulus must be >= 2");
    unsigned __int128 sum = 0;
    for (std::uint64_t e : entries_) {
        if (e == 0 || e >= modulus)
            throw std::invalid_argument("CharacterVector: entries must lie in [1, d-1]");
        sum += e;
    }
    if (sum % modulus != 0)
        throw std::invalid_argument("CharacterVector: entries must sum to 0 mod d");
}

int CharacterVector::norm() const
{
    unsigned __int128 sum = 0;
    for (std::uint64_t e : entries_) sum += e;
    return static_cast<int>(sum / modulus_) - 1;
}

CharacterVector CharacterVector::scaled(std::uint64_t t) const
{
    t %= modulus_;
    if (std::gcd(t, modulus_) != 1)
        throw std::domain_error("CharacterVector::scaled: scalar must be a unit mod d");
    std::array<std::uint64_t, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = nt::mulmod(entries_[i], t, modulus_);
    return CharacterVector(out, modulus_);
}

CharacterVector CharacterVector::negated() const
{
    std::array<std::uint64_t, 5> out;
    for (int i = 0; i < 5; ++i) out[i] = modulus_ - entries_[i];
    return CharacterVector(out, modulus_);
}

namespace {

std::uint64_t order_of_unit(std::uint64_t t, std::uint64_t n)
{
    t %= n;
    std::uint64_t f = 1;
    for (std::uint64_t x = t; x != 1; x = nt::mulmod(x, t, n)) ++f;
    return f;
}

int norm_of(const std::array<std::uint64_t, 5>& v, std::uint64_t d)
{
    unsigned __int128 sum = 0;
    for (std::uint64_t e : v) sum += e;
    return static_cast<int>(sum / d) - 1;
}

}  // namespace

CharSetSummary enumerate_aset(const DelsarteThreefold& x, std::uint64_t cap,
                              const CharacterVisitor& visit)
{
    const std::uint64_t d = x.d;
    KernelModGenerators k = kernel_mod(x.matrix.transposed(), Int(static_cast<unsigned long>(d)));

    Int predicted = k.group_order();
    if (predicted > Int(static_cast<unsigned long>(cap))) {
        std::uint64_t pred64 = predicted.fits_ulong_p() ? predicted.get_ui() : ~std::uint64_t(0);
        throw EnumerationCapExceeded("character enumeration needs " + predicted.get_str() +
                                         " lattice points, above the cap of " + std::to_string(cap),
                                     pred64);
    }

    const std::size_t g = k.generators.size();
    std::vector<std::array<std::uint64_t, 5>> gens(g);
    std::vector<std::uint64_t> orders(g);
    for (std::size_t j = 0; j < g; ++j) {
        for (int i = 0; i < 5; ++i) gens[j][i] = k.generators[j][i].get_ui();
        orders[j] = k.orders[j].get_ui();
    }

    CharSetSummary summary{d, 0, {}};

    // Odometer over the generator coefficients; suffix[j] holds the partial
    // sum of the digits at positions >= j, so a roll-over copies one array
    // instead of recomputing the whole combination.
    std::vector<std::uint64_t> digit(g, 0);
    std::vector<std::array<std::uint64_t, 5>> suffix(g + 1, std::array<std::uint64_t, 5>{});

    auto consider = [&](const std::array<std::uint64_t, 5>& v) {
        unsigned __int128 sum = 0;
        for (std::uint64_t e : v) {
            if (e == 0) return;
            sum += e;
        }
        if (sum % d != 0) return;
        int nm = static_cast<int>(sum / d) - 1;
        ++summary.count;
        ++summary.graded_counts[static_cast<std::size_t>(nm)];
        if (visit) visit(CharacterVector(v, d));
    };

    consider(suffix[0]);
    for (;;) {
        std::size_t j = 0;
        while (j < g && digit[j] + 1 == orders[j]) digit[j++] = 0;
        if (j == g) break;
        ++digit[j];
        auto& s = suffix[j];
        const auto& gen = gens[j];
        for (int i = 0; i < 5; ++i) {
            s[i] += gen[i];
            if (s[i] >= d) s[i] -= d;
        }
        for (std::size_t l = j; l-- > 0;) suffix[l] = suffix[j];
        consider(suffix[0]);
    }
    return summary;
}

CharacterVector find_alpha0(const DelsarteThreefold& x, std::uint64_t cap)
{
    if (!x.weights.is_calabi_yau())
        throw IntegrityError("input is not a Calabi-Yau Delsarte threefold (weights do not sum "
                             "to the degree)");
    std::optional<CharacterVector> found;
    std::uint64_t zero_norm_count = 0;
    enumerate_aset(x, cap, [&](const CharacterVector& a) {
        if (a.norm() == 0) {
            ++zero_norm_count;
            if (!found) found = a;
        }
    });
    if (zero_norm_count != 1)
        throw IntegrityError("input is not a Calabi-Yau Delsarte threefold (found " +
                             std::to_string(zero_norm_count) + " norm-zero characters)");
    return *found;
}

std::uint64_t aH_bruteforce(const CharacterVector& alpha, std::uint64_t p_class)
{
    const std::uint64_t d = alpha.modulus();
    p_class %= d;
    if (std::gcd(p_class, d) != 1)
        throw std::domain_error("aH_bruteforce: p_class must be a unit mod d");
    // The sum runs over the whole group generated by p_class; when the orbit
    // of alpha is shorter than f its norms are counted with multiplicity.
    const std::uint64_t f = order_of_unit(p_class, d);
    std::uint64_t sum = 0;
    std::array<std::uint64_t, 5> cur = alpha.entries();
    for (std::uint64_t i = 0; i < f; ++i) {
        sum += static_cast<std::uint64_t>(norm_of(cur, d));
        for (int e = 0; e < 5; ++e) cur[e] = nt::mulmod(cur[e], p_class, d);
    }
    return sum;
}

std::uint64_t newton_low_slope_count(const DelsarteThreefold& x, const CharacteristicP& p,
                                     std::uint64_t cap)
{
    ValidationReport rep = validate(x, p);
    if (!rep.ok()) throw std::invalid_argument("invalid input: " + rep.joined());

    const std::uint64_t d = x.d;
    const std::uint64_t pm = p.p % d;
    const std::uint64_t f = order_of_unit(pm, d);

    // A_H(alpha) = (f / orbit length) * (norm sum over the orbit), so the
    // test A_H < f reduces to orbit_sum < orbit_length. Bail out as soon as
    // the partial sum reaches f (>= any possible orbit length).
    std::uint64_t low = 0;
    enumerate_aset(x, cap, [&](const CharacterVector& a) {
        std::uint64_t sum = 0;
        std::uint64_t len = 0;
        std::array<std::uint64_t, 5> cur = a.entries();
        do {
            sum += static_cast<std::uint64_t>(norm_of(cur, d));
            ++len;
            if (sum >= f) return;
            for (int e = 0; e < 5; ++e) cur[e] = nt::mulmod(cur[e], pm, d);
        } while (cur != a.entries());
        if (sum < len) ++low;
    });
    return low;
}

}  // namespace delsarte
