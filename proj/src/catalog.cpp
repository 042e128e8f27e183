#include "delsarte/catalog.hpp"

#include "delsarte/serialize.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace delsarte {

DelsarteThreefold WeightRecord::build() const
{
    switch (family) {
        case Family::Fermat: {
            DelsarteThreefold x = DelsarteThreefold::from_fermat(weight_system);
            x.reference_hodge = reference_hodge;
            return x;
        }
        case Family::QuasiDiagonal: {
            DelsarteThreefold x = DelsarteThreefold::from_quasidiagonal(weight_system, *exponents);
            x.reference_hodge = reference_hodge;
            return x;
        }
        default:
            throw std::logic_error("WeightRecord::build: unsupported family");
    }
}

namespace {

// Exponent tuples n_1 <= ... <= n_5, each >= 2, with sum of reciprocals 1.
// Standard bounded unit-fraction recursion over exact rationals.
void egyptian_rec(int terms, const mpq_class& target, unsigned long min_n,
                  std::vector<unsigned long>& prefix,
                  std::vector<std::array<std::uint64_t, 5>>& out)
{
    if (terms == 0) {
        if (target == 0) {
            std::array<std::uint64_t, 5> t{};
            for (int i = 0; i < 5; ++i) t[i] = prefix[i];
            out.push_back(t);
        }
        return;
    }
    if (target <= 0) return;
    mpz_class lo_z = target.get_den() / target.get_num() + 1;  // ceil for non-divisible
    if (target.get_den() % target.get_num() == 0) lo_z -= 1;
    mpz_class hi_z = mpz_class(terms) * target.get_den() / target.get_num();
    unsigned long lo = std::max(min_n, lo_z.get_ui());
    unsigned long hi = hi_z.get_ui();
    for (unsigned long n = lo; n <= hi; ++n) {
        prefix.push_back(n);
        egyptian_rec(terms - 1, target - mpq_class(1, n), n, prefix, out);
        prefix.pop_back();
    }
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
    return a / std::gcd(a, b) * b;
}

WeightRecord make_record(const WeightSystem& q, Family family,
                         std::optional<std::array<std::uint64_t, 5>> exponents,
                         const DelsarteThreefold& x)
{
    ReducedCharacter rc = reduce_alpha0(find_alpha0(x));
    WeightRecord rec;
    rec.weight_system = q;
    rec.family = family;
    rec.exponents = exponents;
    rec.e = rc.e;
    rec.d_A = rc.d_A;
    rec.alpha_A = rc.alpha_A;
    rec.reference_hodge = reference_hodge_for(family, q);
    return rec;
}

}  // namespace

std::vector<WeightSystem> enumerate_fermat_weights()
{
    std::vector<std::array<std::uint64_t, 5>> tuples;
    std::vector<unsigned long> prefix;
    egyptian_rec(5, mpq_class(1), 2, prefix, tuples);

    std::vector<WeightSystem> out;
    out.reserve(tuples.size());
    for (const auto& n : tuples) {
        std::uint64_t m = 1;
        for (std::uint64_t ni : n) m = lcm_u64(m, ni);
        WeightSystem q;
        q.degree = m;
        for (int i = 0; i < 5; ++i) q.weights[i] = m / n[i];
        std::sort(q.weights.begin(), q.weights.end());
        if (!q.well_formed()) continue;
        out.push_back(q);
    }
    std::sort(out.begin(), out.end(), [](const WeightSystem& a, const WeightSystem& b) {
        return std::tie(a.degree, a.weights) < std::tie(b.degree, b.weights);
    });
    return out;
}

std::vector<WeightRecord> fermat_records()
{
    std::vector<WeightRecord> out;
    for (const WeightSystem& q : enumerate_fermat_weights()) {
        std::array<std::uint64_t, 5> exps;
        for (int i = 0; i < 5; ++i) exps[i] = q.degree / q.weights[i];
        out.push_back(make_record(q, Family::Fermat, exps, DelsarteThreefold::from_fermat(q)));
    }
    return out;
}

namespace {

// Chain-and-Fermat exponent data (m_0, m_1, {m_2, m_3, m_4}) satisfies
//   1/m_0 + 1/m_1 + 1/m_2 + 1/m_3 + 1/m_4 - 1/(m_0 m_1) = 1.
// Enumerate the five values in sorted order, assigning the two chain roles
// along the way. Termination: while the partial sum is below 1 the next value
// is bounded by remaining_terms/(1 - partial); once the partial sum reaches 1
// only branches with both roles already placed can close the equation (the
// correction term is smaller than any remaining reciprocal), and for those
// the remaining target is exact.
struct QdSearch {
    std::set<std::array<std::uint64_t, 5>> found;  // (m0, m1, diag sorted asc)

    void run() { rec(0, 2, mpq_class(0), 0, 0, {}); }

    void rec(int pos, unsigned long min_v, const mpq_class& partial, std::uint64_t m0,
             std::uint64_t m1, std::array<std::uint64_t, 3> diag)
    {
        int terms_left = 5 - pos;
        if (pos == 5) {
            if (m0 && m1 && partial - mpq_class(1, m0 * m1) == 1) {
                std::array<std::uint64_t, 5> sol{m0, m1, diag[0], diag[1], diag[2]};
                std::sort(sol.begin() + 2, sol.end());
                found.insert(sol);
            }
            return;
        }
        bool both = m0 && m1;
        mpq_class rem;
        if (both) {
            rem = 1 + mpq_class(1, m0 * m1) - partial;
            if (rem <= 0) return;
        } else {
            rem = 1 - partial;
            if (rem <= 0) return;  // correction beats any remaining reciprocal
        }
        mpq_class hi_q = mpq_class(terms_left) / rem;
        mpz_class hi_z(hi_q.get_num() / hi_q.get_den());
        unsigned long hi = hi_z.get_ui();
        int ndiag = 0;
        for (std::uint64_t d : diag) ndiag += d != 0;
        for (unsigned long v = min_v; v <= hi; ++v) {
            mpq_class next = partial + mpq_class(1, v);
            if (ndiag < 3) {
                auto d2 = diag;
                d2[ndiag] = v;
                rec(pos + 1, v, next, m0, m1, d2);
            }
            if (!m0) rec(pos + 1, v, next, v, m1, diag);
            if (!m1) rec(pos + 1, v, next, m0, v, diag);
        }
    }
};

}  // namespace

std::vector<WeightRecord> enumerate_quasidiagonal_weights()
{
    QdSearch search;
    search.run();

    std::map<std::array<std::uint64_t, 5>, WeightRecord> by_sorted_q;
    for (const auto& sol : search.found) {
        // Realize the candidate, then renormalize to the ascending role
        // order: chain on the two smallest weights, diagonal ascending.
        std::uint64_t m = sol[1];
        for (int i = 2; i < 5; ++i) m = lcm_u64(m, sol[i]);
        std::uint64_t q1 = m / sol[1];
        std::uint64_t qsum = q1;
        std::array<std::uint64_t, 3> qd;
        for (int i = 0; i < 3; ++i) {
            qd[i] = m / sol[2 + i];
            qsum += qd[i];
        }
        if (qsum >= m) continue;
        std::uint64_t q0 = m - qsum;

        std::array<std::uint64_t, 5> sorted_q{q0, q1, qd[0], qd[1], qd[2]};
        std::sort(sorted_q.begin(), sorted_q.end());
        if (by_sorted_q.contains(sorted_q)) continue;

        // Unique ascending-role realization attempt from the sorted weights.
        WeightSystem q;
        q.degree = m;
        q.weights = sorted_q;
        if (!q.well_formed() || !q.is_calabi_yau()) continue;
        bool ok = (m - q.weights[1]) % q.weights[0] == 0;
        std::array<std::uint64_t, 5> exps{};
        if (ok) {
            exps[0] = (m - q.weights[1]) / q.weights[0];
            ok = exps[0] >= 2;
        }
        for (int i = 1; i < 5 && ok; ++i) {
            ok = m % q.weights[i] == 0;
            if (ok) exps[i] = m / q.weights[i];
        }
        if (!ok) continue;

        by_sorted_q.emplace(sorted_q, make_record(q, Family::QuasiDiagonal, exps,
                                                  DelsarteThreefold::from_quasidiagonal(q, exps)));
    }

    std::vector<WeightRecord> out;
    out.reserve(by_sorted_q.size());
    for (auto& [key, rec] : by_sorted_q) out.push_back(std::move(rec));
    std::sort(out.begin(), out.end(), [](const WeightRecord& a, const WeightRecord& b) {
        return std::tie(a.weight_system.degree, a.weight_system.weights) <
               std::tie(b.weight_system.degree, b.weight_system.weights);
    });
    return out;
}

std::set<std::uint64_t> classify_finite_heights(const std::vector<WeightRecord>& records)
{
    std::set<std::uint64_t> out;
    for (const WeightRecord& rec : records) {
        ResidueSpectrum sp = spectrum(rec.reduced());
        for (const SpectrumGroup& g : sp.groups)
            if (g.finite) out.insert(g.height);
    }
    return out;
}

bool mirror_obstruction_flag(const HeightResult& h, std::uint64_t h11, std::uint64_t h12)
{
    if (!h.finite) return false;
    return h.h > std::min(h11, h12) + 1;
}

std::optional<HodgePair> reference_hodge_for(Family family, const WeightSystem& q)
{
    struct Entry {
        Family family;
        std::array<std::uint64_t, 5> weights;
        std::uint64_t degree;
        HodgePair hodge;
    };
    static const Entry table[] = {
        {Family::Fermat, {1, 1, 1, 1, 1}, 5, {1, 101}},
        {Family::Fermat, {1, 1, 1, 1, 4}, 8, {1, 149}},
        {Family::Fermat, {2, 21, 138, 322, 483}, 966, {143, 143}},
        {Family::Fermat, {1, 42, 258, 602, 903}, 1806, {251, 251}},
        {Family::QuasiDiagonal, {1, 1, 12, 28, 42}, 84, {11, 491}},
    };
    for (const Entry& e : table)
        if (e.family == family && e.weights == q.weights && e.degree == q.degree) return e.hodge;
    return std::nullopt;
}

HeightAtlas build_atlas(Family family)
{
    HeightAtlas atlas;
    atlas.family = family_name(family);
    switch (family) {
        case Family::Fermat: atlas.records = fermat_records(); break;
        case Family::QuasiDiagonal: atlas.records = enumerate_quasidiagonal_weights(); break;
        default: throw std::invalid_argument("build_atlas: family must be fermat or quasi-diagonal");
    }
    atlas.spectra.reserve(atlas.records.size());
    for (const WeightRecord& rec : atlas.records) {
        atlas.spectra.push_back(spectrum(rec.reduced()));
        for (const SpectrumGroup& g : atlas.spectra.back().groups)
            if (g.finite) atlas.finite_heights.insert(g.height);
    }
    return atlas;
}

void save_atlas(const HeightAtlas& atlas, const std::filesystem::path& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << atlas_to_json(atlas).dump(2) << '\n';
}

HeightAtlas load_atlas(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1 + static_cast<std::size_t>(
                                   std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n'));
        throw ParseError(path.string() + ":" + std::to_string(line) + ": " + e.what());
    }
    try {
        return atlas_from_json(doc);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string() + ": malformed atlas document: " + e.what());
    }
}

std::string atlas_to_csv(const HeightAtlas& atlas)
{
    std::ostringstream os;
    os << "family,weights,m,d_A,residue,height\n";
    for (std::size_t i = 0; i < atlas.records.size(); ++i) {
        const WeightRecord& rec = atlas.records[i];
        // Loaded atlases drop the per-residue maps; rebuild deterministically.
        ResidueSpectrum sp = (i < atlas.spectra.size() && !atlas.spectra[i].classes.empty())
                                 ? atlas.spectra[i]
                                 : spectrum(rec.reduced());
        std::ostringstream w;
        for (int j = 0; j < 5; ++j) w << (j ? " " : "") << rec.weight_system.weights[j];
        for (const auto& [t, hr] : sp.classes) {
            os << atlas.family << ',' << w.str() << ',' << rec.weight_system.degree << ','
               << rec.d_A << ',' << t << ',';
            if (hr.finite)
                os << hr.h;
            else
                os << "inf";
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace delsarte
