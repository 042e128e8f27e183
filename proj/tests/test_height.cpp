#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "delsarte/characters.hpp"
#include "delsarte/height.hpp"
#include "delsarte/number_theory.hpp"

#include <numeric>

using namespace delsarte;

namespace {

ReducedCharacter quintic_rc()
{
    return reduce_alpha0(find_alpha0(DelsarteThreefold::from_fermat(WeightSystem{{1, 1, 1, 1, 1}, 5})));
}

ReducedCharacter octic_rc()
{
    return reduce_alpha0(find_alpha0(DelsarteThreefold::from_fermat(WeightSystem{{1, 1, 1, 1, 4}, 8})));
}

const SpectrumGroup* group_for(const ResidueSpectrum& sp, std::optional<std::uint64_t> h)
{
    for (const SpectrumGroup& g : sp.groups) {
        if (h && g.finite && g.height == *h) return &g;
        if (!h && !g.finite) return &g;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("reduce_alpha0: named examples")
{
    ReducedCharacter q = quintic_rc();
    CHECK(q.e == 625);
    CHECK(q.d_A == 5);
    CHECK(q.alpha_A == std::array<std::uint64_t, 5>{1, 1, 1, 1, 1});

    ReducedCharacter o = octic_rc();
    CHECK(o.d_A == 8);
    CHECK(o.alpha_A == std::array<std::uint64_t, 5>{1, 1, 1, 1, 4});

    DelsarteThreefold qd = DelsarteThreefold::from_quasidiagonal(
        WeightSystem{{1, 1, 12, 28, 42}, 84}, {83, 84, 7, 3, 2});
    ReducedCharacter r = reduce_alpha0(find_alpha0(qd));
    CHECK(r.d_A == 3486);
    CHECK(r.alpha_A == std::array<std::uint64_t, 5>{42, 41, 498, 1162, 1743});
    std::uint64_t sum = 0;
    for (std::uint64_t a : r.alpha_A) sum += a;
    CHECK(sum == 3486);
}

TEST_CASE("reduce_alpha0 requires norm zero")
{
    CHECK_THROWS_AS(reduce_alpha0(CharacterVector({4, 4, 4, 4, 4}, 5)), std::domain_error);
}

TEST_CASE("multiplicative_order: named examples")
{
    CHECK(multiplicative_order(1, 7) == 1);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(43, 3486) == 82);
    CHECK_THROWS_AS(multiplicative_order(2, 8), std::domain_error);
}

TEST_CASE("height_class on the octic: the full residue table")
{
    ReducedCharacter rc = octic_rc();

    HeightResult h1 = height_class(1, rc);
    CHECK(h1.finite);
    CHECK(h1.h == 1);
    CHECK(h1.witness_norms == std::vector<int>{0});

    HeightResult h3 = height_class(3, rc);
    CHECK(h3.finite);
    CHECK(h3.h == 2);
    CHECK(h3.witness_norms == std::vector<int>{0, 1});

    HeightResult h5 = height_class(5, rc);
    CHECK_FALSE(h5.finite);
    CHECK(h5.fail_index == 1);
    CHECK(h5.fail_norm == 2);  // ||(5,5,5,5,4)||_8 = 2
    // the remark's point: no power of 5 is -1 mod 8, yet the height is infinite
    CHECK_FALSE(orbit_contains_minus_one(5, 8));

    HeightResult h7 = height_class(7, rc);
    CHECK_FALSE(h7.finite);
    CHECK(orbit_contains_minus_one(7, 8));
}

TEST_CASE("height_class on the quintic")
{
    ReducedCharacter rc = quintic_rc();
    CHECK(height_class(1, rc).finite);
    for (std::uint64_t t : {2ull, 3ull, 4ull}) CHECK_FALSE(height_class(t, rc).finite);
    CHECK_THROWS_AS(height_class(5, rc), std::domain_error);
}

TEST_CASE("height: full pipeline on the named examples")
{
    DelsarteThreefold quintic = DelsarteThreefold::from_fermat(WeightSystem{{1, 1, 1, 1, 1}, 5});
    HeightResult h = height(quintic, CharacteristicP(11));
    CHECK(h.finite);
    CHECK(h.h == 1);

    DelsarteThreefold w966 = DelsarteThreefold::from_fermat(WeightSystem{{2, 21, 138, 322, 483}, 966});
    HeightResult h966 = height(w966, CharacteristicP(43));
    CHECK(h966.finite);
    CHECK(h966.h == 22);

    DelsarteThreefold ex63 = DelsarteThreefold::from_quasidiagonal(
        WeightSystem{{1, 1, 12, 28, 42}, 84}, {83, 84, 7, 3, 2});
    HeightResult h63 = height(ex63, CharacteristicP(43));
    CHECK(h63.finite);
    CHECK(h63.h == 82);

    CHECK_THROWS_AS(height(quintic, CharacteristicP(5)), std::invalid_argument);
}

TEST_CASE("height depends only on the residue class of p")
{
    ReducedCharacter rc = octic_rc();
    DelsarteThreefold octic = DelsarteThreefold::from_fermat(WeightSystem{{1, 1, 1, 1, 4}, 8});
    for (std::uint64_t p : {3ull, 11ull, 19ull, 43ull, 59ull, 83ull}) {  // all 3 mod 8
        HeightResult via_p = height(octic, CharacteristicP(p));
        CHECK(via_p == height_class(3, rc));
    }
    CHECK(height(octic, CharacteristicP(17)).h == 1);  // 17 == 1 mod 8
}

TEST_CASE("spectrum: octic and quintic tables")
{
    ResidueSpectrum so = spectrum(octic_rc());
    CHECK(so.d_A == 8);
    CHECK(so.phi == 4);
    REQUIRE(so.groups.size() == 3);
    const SpectrumGroup* g1 = group_for(so, 1);
    const SpectrumGroup* g2 = group_for(so, 2);
    const SpectrumGroup* ginf = group_for(so, std::nullopt);
    REQUIRE(g1);
    REQUIRE(g2);
    REQUIRE(ginf);
    CHECK(g1->representatives == std::vector<std::uint64_t>{1});
    CHECK(g2->representatives == std::vector<std::uint64_t>{3});
    CHECK(ginf->representatives == std::vector<std::uint64_t>{5, 7});
    CHECK(ginf->class_count == 2);

    ResidueSpectrum sq = spectrum(quintic_rc());
    CHECK(sq.phi == 4);
    CHECK(group_for(sq, 1)->representatives == std::vector<std::uint64_t>{1});
    CHECK(group_for(sq, std::nullopt)->representatives == std::vector<std::uint64_t>{2, 3, 4});
}

TEST_CASE("spectrum: degree-1806 weighted Fermat class counts")
{
    // reduced data of the largest Fermat catalog entry
    ReducedCharacter rc(1806, 1806, {1, 42, 258, 602, 903});
    ResidueSpectrum sp = spectrum(rc);
    CHECK(sp.phi == 504);

    auto count_of = [&](std::optional<std::uint64_t> h) {
        const SpectrumGroup* g = group_for(sp, h);
        return g ? g->class_count : 0;
    };
    CHECK(count_of(1) == 1);
    CHECK(count_of(2) == 3);
    CHECK(count_of(3) == 6);
    CHECK(count_of(6) == 6);
    CHECK(count_of(7) == 6);
    CHECK(count_of(14) == 6);
    CHECK(count_of(21) == 12);
    CHECK(count_of(42) == 12);
    CHECK(count_of(std::nullopt) == 452);

    std::uint64_t total = 0;
    for (const SpectrumGroup& g : sp.groups) total += g.class_count;
    CHECK(total == sp.phi);
}

TEST_CASE("finite results carry the height as walk length and a 0-then-1 witness")
{
    for (const ReducedCharacter& rc : {quintic_rc(), octic_rc(), ReducedCharacter(1806, 1806, {1, 42, 258, 602, 903})}) {
        ResidueSpectrum sp = spectrum(rc);
        for (const auto& [t, hr] : sp.classes) {
            if (!hr.finite) {
                CHECK(hr.fail_norm >= 2);
                continue;
            }
            CHECK(hr.h == multiplicative_order(t, rc.d_A));
            REQUIRE(hr.witness_norms.size() == hr.h);
            CHECK(hr.witness_norms.front() == 0);
            for (std::size_t i = 1; i < hr.witness_norms.size(); ++i)
                CHECK(hr.witness_norms[i] == 1);
        }
    }
}

TEST_CASE("supersingular shortcuts agree with the orbit walk")
{
    for (const ReducedCharacter& rc : {quintic_rc(), octic_rc(), ReducedCharacter(1806, 1806, {1, 42, 258, 602, 903})}) {
        for (std::uint64_t t = 1; t < rc.d_A; ++t) {
            if (std::gcd(t, rc.d_A) != 1) continue;
            HeightResult hr = height_class(t, rc);
            auto hint = supersingular_shortcut(t, rc.d_A);
            if (hint == SupersingularHint::HeightOne) {
                CHECK(hr.finite);
                CHECK(hr.h == 1);
            } else if (hint == SupersingularHint::Infinite) {
                CHECK_FALSE(hr.finite);
            }
        }
    }
}
