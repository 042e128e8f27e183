#include "delsarte/threefold.hpp"

#include "delsarte/number_theory.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace delsarte {

std::string family_name(Family f)
{
    switch (f) {
        case Family::Fermat: return "fermat";
        case Family::QuasiDiagonal: return "quasi-diagonal";
        case Family::General: return "general";
    }
    throw std::logic_error("family_name: unreachable");
}

Family family_from_name(const std::string& name)
{
    if (name == "fermat") return Family::Fermat;
    if (name == "quasi-diagonal") return Family::QuasiDiagonal;
    if (name == "general") return Family::General;
    throw std::invalid_argument("unknown family tag: " + name);
}

namespace {

std::uint64_t abs_det_u64(const IntMatrix& m)
{
    Int det = determinant(m);
    if (det == 0) throw std::invalid_argument("exponent matrix is singular");
    Int a = abs(det);
    if (!a.fits_ulong_p())
        throw std::domain_error("|det| exceeds the supported 64-bit range for threefolds");
    return a.get_ui();
}

void require_positive_weights(const WeightSystem& q)
{
    if (q.degree == 0) throw std::invalid_argument("degree must be positive");
    for (std::uint64_t w : q.weights)
        if (w == 0) throw std::invalid_argument("weights must be positive");
}

}  // namespace

DelsarteThreefold DelsarteThreefold::from_fermat(const WeightSystem& q)
{
    require_positive_weights(q);
    IntMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
        if (q.degree % q.weights[i] != 0)
            throw std::invalid_argument("not Fermat-realizable: weight does not divide the degree");
        m.at(i, i) = static_cast<unsigned long>(q.degree / q.weights[i]);
    }
    return DelsarteThreefold{q, m, abs_det_u64(m), Family::Fermat, std::nullopt};
}

DelsarteThreefold DelsarteThreefold::from_quasidiagonal(const WeightSystem& q,
                                                        const std::array<std::uint64_t, 5>& e)
{
    require_positive_weights(q);
    for (std::uint64_t x : e)
        if (x == 0) throw std::invalid_argument("exponents must be positive");
    if (q.weights[0] * e[0] + q.weights[1] != q.degree)
        throw std::invalid_argument("degree identity fails: q_0 m_0 + q_1 != m");
    for (std::size_t i = 1; i < 5; ++i)
        if (q.weights[i] * e[i] != q.degree)
            throw std::invalid_argument("degree identity fails: q_i m_i != m");
    IntMatrix m(5, 5);
    m.at(0, 0) = static_cast<unsigned long>(e[0]);
    m.at(0, 1) = 1;
    for (std::size_t i = 1; i < 5; ++i) m.at(i, i) = static_cast<unsigned long>(e[i]);
    return DelsarteThreefold{q, m, abs_det_u64(m), Family::QuasiDiagonal, std::nullopt};
}

DelsarteThreefold DelsarteThreefold::general(const WeightSystem& q, IntMatrix matrix, Family family)
{
    require_positive_weights(q);
    if (matrix.rows() != 5 || matrix.cols() != 5)
        throw std::invalid_argument("exponent matrix must be 5x5");
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            if (matrix.at(i, j) < 0)
                throw std::invalid_argument("exponent matrix entries must be nonnegative");
    std::uint64_t d = abs_det_u64(matrix);
    return DelsarteThreefold{q, std::move(matrix), d, family, std::nullopt};
}

CharacteristicP::CharacteristicP(std::uint64_t prime) : p(prime)
{
    if (!nt::is_prime(prime)) throw std::domain_error("characteristic must be prime");
}

std::string ValidationReport::joined() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

ValidationReport validate(const DelsarteThreefold& x, const std::optional<CharacteristicP>& p)
{
    ValidationReport rep;
    auto add = [&rep](const std::string& s) { rep.violations.push_back(s); };
    std::ostringstream os;

    for (int i = 0; i < 5; ++i)
        if (x.weights.weights[i] == 0) add("weight q[" + std::to_string(i) + "] is zero");
    if (x.weights.degree == 0) add("degree m is zero");
    for (int omit = 0; omit < 5; ++omit) {
        std::uint64_t g = 0;
        for (int i = 0; i < 5; ++i)
            if (i != omit) g = std::gcd(g, x.weights.weights[i]);
        if (g != 1)
            add("weights are not well-formed: gcd omitting q[" + std::to_string(omit) + "] is " +
                std::to_string(g));
    }

    // (iii) every row has weighted degree m
    for (std::size_t i = 0; i < 5; ++i) {
        Int deg = 0;
        for (std::size_t j = 0; j < 5; ++j)
            deg += Int(static_cast<unsigned long>(x.weights.weights[j])) * x.matrix.at(i, j);
        if (deg != Int(static_cast<unsigned long>(x.weights.degree)))
            add("condition (iii): row " + std::to_string(i) + " has weighted degree " +
                deg.get_str() + ", expected " + std::to_string(x.weights.degree));
    }
    // (iv) every column has a zero entry
    for (std::size_t j = 0; j < 5; ++j) {
        bool has_zero = false;
        for (std::size_t i = 0; i < 5 && !has_zero; ++i) has_zero = x.matrix.at(i, j) == 0;
        if (!has_zero) add("condition (iv): column " + std::to_string(j) + " has no zero entry");
    }
    if (x.d == 0) add("matrix is singular");

    if (p) {
        const std::uint64_t pr = p->p;
        if (x.d % pr == 0) add("condition (ii): p divides det A");
        if (x.weights.degree % pr == 0) add("p divides the degree m");
        for (int i = 0; i < 5; ++i)
            if (x.weights.weights[i] != 0 && x.weights.weights[i] % pr == 0)
                add("p divides weight q[" + std::to_string(i) + "]");
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const Int& a = x.matrix.at(i, j);
                if (a != 0 && mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(pr)))
                    add("condition (i): p divides matrix entry a[" + std::to_string(i) + "][" +
                        std::to_string(j) + "]");
            }
    }
    return rep;
}

}  // namespace delsarte
