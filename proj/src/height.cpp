#include "delsarte/height.hpp"

#include "delsarte/number_theory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace delsarte {

ReducedCharacter::ReducedCharacter(std::uint64_t e_, std::uint64_t d_A_,
                                   std::array<std::uint64_t, 5> alpha)
    : e(e_), d_A(d_A_), alpha_A(alpha)
{
    if (e == 0) throw std::invalid_argument("ReducedCharacter: e must be positive");
    if (d_A < 3) throw std::invalid_argument("ReducedCharacter: d_A must be >= 3");
    std::uint64_t g = d_A;
    std::uint64_t sum = 0;
    for (std::uint64_t a : alpha_A) {
        if (a == 0 || a >= d_A)
            throw std::invalid_argument("ReducedCharacter: entries must lie in [1, d_A-1]");
        g = std::gcd(g, a);
        sum += a;
    }
    if (g != 1) throw std::invalid_argument("ReducedCharacter: entries share a factor with d_A");
    if (sum != d_A)
        throw std::invalid_argument("ReducedCharacter: entries must sum to d_A (norm zero)");
}

HeightResult HeightResult::finite_result(std::uint64_t h, std::vector<int> norms)
{
    HeightResult r;
    r.finite = true;
    r.h = h;
    r.witness_norms = std::move(norms);
    return r;
}

HeightResult HeightResult::infinite_result(std::uint64_t fail_index, int fail_norm)
{
    HeightResult r;
    r.finite = false;
    r.fail_index = fail_index;
    r.fail_norm = fail_norm;
    return r;
}

ReducedCharacter reduce_alpha0(const CharacterVector& alpha0)
{
    if (alpha0.norm() != 0) throw std::domain_error("reduce_alpha0: character must have norm zero");
    const std::uint64_t d = alpha0.modulus();
    std::uint64_t e = d;
    for (std::uint64_t a : alpha0.entries()) e = std::gcd(e, a);
    std::array<std::uint64_t, 5> reduced;
    for (int i = 0; i < 5; ++i) reduced[i] = alpha0.entries()[i] / e;
    return ReducedCharacter(e, d / e, reduced);
}

std::uint64_t multiplicative_order(std::uint64_t t, std::uint64_t n)
{
    if (n < 2) throw std::domain_error("multiplicative_order: modulus must be >= 2");
    t %= n;
    if (std::gcd(t, n) != 1) throw std::domain_error("multiplicative_order: t must be a unit mod n");
    std::uint64_t order = nt::totient(n);
    for (const auto& [p, exp] : nt::factorize(order)) {
        for (int i = 0; i < exp; ++i) {
            if (nt::powmod(t, order / p, n) == 1)
                order /= p;
            else
                break;
        }
    }
    return order;
}

HeightResult height_class(std::uint64_t t, const ReducedCharacter& rc)
{
    const std::uint64_t dA = rc.d_A;
    t %= dA;
    if (std::gcd(t, dA) != 1) throw std::domain_error("height_class: t must be a unit mod d_A");

    // Walk t^i * alpha_A until it returns to alpha_A; the walk length is
    // exactly the order of t mod d_A because the reduced entries generate
    // Z/d_A. A norm >= 2 anywhere breaks finiteness at that index.
    std::vector<int> norms{0};
    std::array<std::uint64_t, 5> cur = rc.alpha_A;
    for (std::uint64_t i = 1;; ++i) {
        for (int e = 0; e < 5; ++e) cur[e] = nt::mulmod(cur[e], t, dA);
        if (cur == rc.alpha_A) return HeightResult::finite_result(i, std::move(norms));
        unsigned __int128 sum = 0;
        for (std::uint64_t e : cur) sum += e;
        int nm = static_cast<int>(sum / dA) - 1;
        if (nm >= 2) return HeightResult::infinite_result(i, nm);
        norms.push_back(nm);
    }
}

HeightResult height(const DelsarteThreefold& x, const CharacteristicP& p, std::uint64_t cap)
{
    ValidationReport rep = validate(x, p);
    if (!rep.ok()) throw std::invalid_argument("invalid input: " + rep.joined());
    ReducedCharacter rc = reduce_alpha0(find_alpha0(x, cap));
    return height_class(p.p % rc.d_A, rc);
}

ResidueSpectrum spectrum(const ReducedCharacter& rc)
{
    ResidueSpectrum out;
    out.d_A = rc.d_A;
    for (std::uint64_t t = 1; t < rc.d_A; ++t) {
        if (std::gcd(t, rc.d_A) != 1) continue;
        out.classes.emplace(t, height_class(t, rc));
    }
    out.phi = out.classes.size();

    std::map<std::pair<bool, std::uint64_t>, SpectrumGroup> grouped;
    for (const auto& [t, hr] : out.classes) {
        // key sorts finite heights ascending and infinity last
        auto key = hr.finite ? std::make_pair(false, hr.h)
                             : std::make_pair(true, std::uint64_t(0));
        SpectrumGroup& g = grouped[key];
        g.finite = hr.finite;
        g.height = hr.finite ? hr.h : 0;
        ++g.class_count;
        if (g.representatives.size() < 3) g.representatives.push_back(t);
    }
    for (auto& [key, g] : grouped) out.groups.push_back(std::move(g));
    return out;
}

bool orbit_contains_minus_one(std::uint64_t t, std::uint64_t n)
{
    t %= n;
    if (std::gcd(t, n) != 1) throw std::domain_error("orbit_contains_minus_one: t must be a unit");
    if (n == 2) return t == 1;  // -1 == 1
    std::uint64_t x = t;
    while (x != 1) {
        if (x == n - 1) return true;
        x = nt::mulmod(x, t, n);
    }
    return false;
}

std::optional<SupersingularHint> supersingular_shortcut(std::uint64_t t, std::uint64_t d_A)
{
    t %= d_A;
    if (std::gcd(t, d_A) != 1)
        throw std::domain_error("supersingular_shortcut: t must be a unit mod d_A");
    if (t == 1) return SupersingularHint::HeightOne;
    if (orbit_contains_minus_one(t, d_A)) return SupersingularHint::Infinite;
    return std::nullopt;
}

}  // namespace delsarte
