// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.
// Every expected value is pinned here; nothing is deferred to calibration.

#include "delsarte/catalog.hpp"
#include "delsarte/characters.hpp"
#include "delsarte/height.hpp"
#include "delsarte/number_theory.hpp"

#include <cinttypes>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

using namespace delsarte;

namespace {

int g_failures = 0;

void criterion(int n, const char* name, bool ok, const std::string& detail = "")
{
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", n, name,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++g_failures;
}

DelsarteThreefold fermat(std::array<std::uint64_t, 5> w)
{
    std::uint64_t m = 0;
    for (std::uint64_t x : w) m += x;
    return DelsarteThreefold::from_fermat(WeightSystem{w, m});
}

std::map<std::uint64_t, std::uint64_t> finite_counts(const ResidueSpectrum& sp,
                                                     std::uint64_t& inf_count)
{
    std::map<std::uint64_t, std::uint64_t> counts;
    inf_count = 0;
    for (const SpectrumGroup& g : sp.groups) {
        if (g.finite)
            counts[g.height] = g.class_count;
        else
            inf_count = g.class_count;
    }
    return counts;
}

// -- criterion 1: quintic spectrum ------------------------------------------
void c1()
{
    ResidueSpectrum sp = spectrum(reduce_alpha0(find_alpha0(fermat({1, 1, 1, 1, 1}))));
    bool ok = sp.d_A == 5 && sp.phi == 4;
    ok = ok && sp.classes.at(1).finite && sp.classes.at(1).h == 1;
    for (std::uint64_t t : {2, 3, 4}) ok = ok && !sp.classes.at(t).finite;
    criterion(1, "quintic: height 1 at residue 1 mod 5, infinite at 2,3,4", ok);
}

// -- criterion 2: octic table with the residue-5 witness --------------------
void c2()
{
    ResidueSpectrum sp = spectrum(reduce_alpha0(find_alpha0(fermat({1, 1, 1, 1, 4}))));
    bool ok = sp.d_A == 8;
    ok = ok && sp.classes.at(1).finite && sp.classes.at(1).h == 1;
    ok = ok && sp.classes.at(3).finite && sp.classes.at(3).h == 2;
    ok = ok && !sp.classes.at(5).finite && !sp.classes.at(7).finite;
    const HeightResult& h5 = sp.classes.at(5);
    ok = ok && h5.fail_index == 1 && h5.fail_norm == 2;
    ok = ok && !orbit_contains_minus_one(5, 8);  // infinite without -1 in the orbit
    criterion(2, "octic: {1->1, 3->2, 5->inf, 7->inf} mod 8 with ||5a||=2 witness at index 1", ok);
}

// -- criterion 3: degree 966, residue 43 ------------------------------------
void c3()
{
    HeightResult h = height(fermat({2, 21, 138, 322, 483}), CharacteristicP(43));
    criterion(3, "degree 966: residue 43 has height 22", h.finite && h.h == 22);
}

// -- criterion 4: degree 1806 grouped class counts --------------------------
void c4()
{
    ResidueSpectrum sp = spectrum(reduce_alpha0(find_alpha0(fermat({1, 42, 258, 602, 903}))));
    std::uint64_t inf = 0;
    auto counts = finite_counts(sp, inf);
    std::map<std::uint64_t, std::uint64_t> expect{{1, 1}, {2, 3}, {3, 6}, {6, 6},
                                                  {7, 6}, {14, 6}, {21, 12}, {42, 12}};
    bool ok = sp.d_A == 1806 && sp.phi == 504 && counts == expect && inf == 452;
    criterion(4, "degree 1806: class counts (1:1,2:3,3:6,6:6,7:6,14:6,21:12,42:12,inf:452)", ok);
}

// -- criterion 5: the chain example of degree 84 ----------------------------
void c5()
{
    DelsarteThreefold x = DelsarteThreefold::from_quasidiagonal(
        WeightSystem{{1, 1, 12, 28, 42}, 84}, {83, 84, 7, 3, 2});
    ResidueSpectrum sp = spectrum(reduce_alpha0(find_alpha0(x)));
    bool ok = sp.d_A == 3486;
    ok = ok && sp.classes.at(1).finite && sp.classes.at(1).h == 1;
    for (std::uint64_t t : {1163, 3319})
        ok = ok && sp.classes.at(t).finite && sp.classes.at(t).h == 2;
    for (std::uint64_t t : {43, 85, 211})
        ok = ok && sp.classes.at(t).finite && sp.classes.at(t).h == 82;
    for (std::uint64_t t : {127, 169, 253})
        ok = ok && sp.classes.at(t).finite && sp.classes.at(t).h == 41;
    criterion(5, "degree 84 chain: d_A=3486, 1->1, {1163,3319}->2, {43,85,211}->82, {127,169,253}->41",
              ok);
}

// -- criteria 6..8: catalogs and their classifications ----------------------
void c6_c7_c8()
{
    std::vector<WeightRecord> ferm = fermat_records();
    std::vector<WeightRecord> quasi = enumerate_quasidiagonal_weights();

    std::set<std::uint64_t> expect_f{1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                                     11, 12, 14, 16, 18, 20, 21, 22, 42};
    std::set<std::uint64_t> got_f = classify_finite_heights(ferm);
    criterion(6, "Fermat catalog finite heights = {1..12,14,16,18,20,21,22,42}", got_f == expect_f);

    std::set<std::uint64_t> expect_q{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15,
                                     16, 18, 20, 21, 22, 23, 24, 27, 28, 30, 41, 42, 46, 82};
    std::set<std::uint64_t> got_q = classify_finite_heights(quasi);
    criterion(7, "quasi-diagonal catalog finite heights = {1..12,14,15,16,18,...,46,82}",
              got_q == expect_q);

    criterion(8, "catalog counts: 147 Fermat, 137 quasi-diagonal",
              ferm.size() == 147 && quasi.size() == 137,
              "got " + std::to_string(ferm.size()) + " and " + std::to_string(quasi.size()));
}

// -- criterion 9: Newton-slope oracle equals the height ---------------------
void c9()
{
    bool ok = true;
    for (const DelsarteThreefold& x : {fermat({1, 1, 1, 1, 1}), fermat({1, 1, 1, 1, 4})}) {
        for (std::uint64_t p = 2; p < 200; ++p) {
            if (!nt::is_prime(p)) continue;
            CharacteristicP cp(p);
            if (!validate(x, cp).ok()) continue;
            std::uint64_t low = newton_low_slope_count(x, cp);
            HeightResult h = height(x, cp);
            ok = ok && (h.finite ? low == h.h : low == 0);
        }
    }
    criterion(9, "quintic+octic, all valid p<200: slope-<1 length equals the height (0 if inf)", ok);
}

// -- criterion 10: property suites -------------------------------------------
void c10()
{
    bool ok = true;
    std::string detail;

    // norm symmetry and palindromic grading over enumerated sets
    DelsarteThreefold ex63 = DelsarteThreefold::from_quasidiagonal(
        WeightSystem{{1, 1, 12, 28, 42}, 84}, {83, 84, 7, 3, 2});
    for (const DelsarteThreefold& x : {fermat({1, 1, 1, 1, 1}), fermat({1, 1, 1, 1, 4}), ex63}) {
        std::set<CharacterVector> members;
        CharSetSummary s = enumerate_aset(x, kDefaultEnumerationCap,
                                          [&](const CharacterVector& a) { members.insert(a); });
        for (const CharacterVector& a : members) {
            if (a.negated().norm() != 3 - a.norm() || members.count(a.negated()) != 1) {
                ok = false;
                detail = "norm symmetry failed";
            }
        }
        if (s.graded_counts[0] != s.graded_counts[3] || s.graded_counts[1] != s.graded_counts[2]) {
            ok = false;
            detail = "graded counts not palindromic";
        }
    }

    // quintic graded counts match h^{1,2} = 101
    CharSetSummary quintic_set = enumerate_aset(fermat({1, 1, 1, 1, 1}));
    if (quintic_set.graded_counts != std::array<std::uint64_t, 4>{1, 101, 101, 1}) {
        ok = false;
        detail = "quintic graded counts";
    }

    // slope identity for all valid p < 100 on quintic and octic
    for (const DelsarteThreefold& x : {fermat({1, 1, 1, 1, 1}), fermat({1, 1, 1, 1, 4})}) {
        CharacterVector a0 = find_alpha0(x);
        ReducedCharacter rc = reduce_alpha0(a0);
        for (std::uint64_t p = 2; p < 100; ++p) {
            if (!nt::is_prime(p) || !validate(x, CharacteristicP(p)).ok()) continue;
            std::uint64_t f = multiplicative_order(p % x.d, x.d);
            std::uint64_t fA = multiplicative_order(p % rc.d_A, rc.d_A);
            std::uint64_t partial = 0;
            CharacterVector cur = a0;
            for (std::uint64_t i = 0; i < fA; ++i) {
                partial += static_cast<std::uint64_t>(cur.norm());
                cur = cur.scaled(p % x.d);
            }
            if (aH_bruteforce(a0, p % x.d) != f / fA * partial) {
                ok = false;
                detail = "slope identity";
            }
        }
    }

    // supersingular fast paths agree with the orbit walk on 10^4 random inputs
    std::mt19937 rng(1806);
    int done = 0;
    while (done < 10000) {
        std::uniform_int_distribution<std::uint64_t> dist_d(5, 3000);
        std::uint64_t dA = dist_d(rng);
        std::uniform_int_distribution<std::uint64_t> cut(1, dA - 1);
        std::set<std::uint64_t> cuts;
        while (cuts.size() < 4) cuts.insert(cut(rng));
        std::array<std::uint64_t, 5> alpha{};
        std::uint64_t prev = 0;
        int i = 0;
        for (std::uint64_t c : cuts) {
            alpha[i++] = c - prev;
            prev = c;
        }
        alpha[4] = dA - prev;
        std::uint64_t g = dA;
        for (std::uint64_t a : alpha) g = std::gcd(g, a);
        if (g != 1) continue;
        std::uint64_t t = cut(rng);
        if (std::gcd(t, dA) != 1) continue;
        ++done;

        ReducedCharacter rc(1, dA, alpha);
        HeightResult hr = height_class(t, rc);
        auto hint = supersingular_shortcut(t, dA);
        if (hint == SupersingularHint::HeightOne && !(hr.finite && hr.h == 1)) ok = false;
        if (hint == SupersingularHint::Infinite && hr.finite) ok = false;
        if (hr.finite && hr.h != multiplicative_order(t, dA)) ok = false;
    }

    criterion(10, "property suites: norm symmetry, palindromic grading, quintic (1,101,101,1), "
                  "slope identity, 10^4 shortcut agreements",
              ok, detail);
}

// -- criterion 11: mirror obstruction flag -----------------------------------
void c11()
{
    bool ok = mirror_obstruction_flag(HeightResult::finite_result(82, {}), 11, 491) &&
              !mirror_obstruction_flag(HeightResult::finite_result(1, {}), 11, 491) &&
              !mirror_obstruction_flag(HeightResult::infinite_result(1, 2), 11, 491);
    criterion(11, "mirror obstruction: (82,11,491) flags, height 1 and infinite do not", ok);
}

}  // namespace

int main()
{
    c1();
    c2();
    c3();
    c4();
    c5();
    c6_c7_c8();
    c9();
    c10();
    c11();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
