#include "toromotive/motivic.hpp"

#include "toromotive/error.hpp"

namespace toromotive {

namespace {

// Dense polynomials only; degrees beyond this are refused.
constexpr Int kMaxDegree = 1 << 24;

void require_prime(Int p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

bool is_prime(Int p) noexcept {
    if (p < 2) return false;
    for (Int d = 2; d <= p / d; ++d)
        if (p % d == 0) return false;
    return true;
}

Int rost_shift(Int p, int n) {
    require_prime(p);
    if (n < 2) throw Error(ErrorKind::BadDegree, "Rost degree n must be at least 2");
    Int power = 1;
    try {
        for (int i = 0; i < n - 1; ++i) power = checked_mul(power, p);
    } catch (const Error&) {
        throw Error(ErrorKind::BadDegree, "p^(n-1) does not fit in 64 bits");
    }
    return (power - 1) / (p - 1);
}

PoincarePolynomial rost_polynomial(Int p, int n) {
    const Int b = rost_shift(p, n);
    if (b > kMaxDegree / p) throw Error(ErrorKind::BadDegree, "Rost polynomial degree too large");
    std::vector<Int> coeffs(static_cast<std::size_t>((p - 1) * b + 1), 0);
    for (Int i = 0; i < p; ++i) coeffs[static_cast<std::size_t>(i * b)] = 1;
    return PoincarePolynomial(std::move(coeffs));
}

PoincarePolynomial severi_brauer_polynomial(Int p) {
    require_prime(p);
    if (p > kMaxDegree) throw Error(ErrorKind::BadDegree, "Severi-Brauer polynomial degree too large");
    return PoincarePolynomial(std::vector<Int>(static_cast<std::size_t>(p), 1));
}

Int MotivicDecomposition::total_sb_copies() const {
    Int total = 0;
    for (const auto& [shift, m] : sb_multiplicities) total = checked_add(total, m);
    return total;
}

PoincarePolynomial MotivicDecomposition::reconstruct() const {
    std::vector<Int> m;
    for (const auto& [shift, mult] : sb_multiplicities) {
        if (static_cast<std::size_t>(shift) >= m.size()) m.resize(static_cast<std::size_t>(shift) + 1, 0);
        m[static_cast<std::size_t>(shift)] = mult;
    }
    return rost_polynomial(p, n) + PoincarePolynomial(std::move(m)) * severi_brauer_polynomial(p);
}

MotivicDecomposition decompose(const PoincarePolynomial& poly, Int p, int n) {
    const PoincarePolynomial rost = rost_polynomial(p, n);
    const PoincarePolynomial sb = severi_brauer_polynomial(p);

    std::vector<Int> rest(std::max(poly.coeffs().size(), rost.coeffs().size()), 0);
    for (std::size_t d = 0; d < rest.size(); ++d) rest[d] = checked_add(poly.coefficient(d), -rost.coefficient(d));

    const auto division = long_divide(rest, sb.coeffs());
    if (!division || !division->remainder.empty())
        throw Error(ErrorKind::NotDecomposable, "P - P_R is not divisible by the Severi-Brauer polynomial");

    MotivicDecomposition out;
    out.p = p;
    out.n = n;
    const Int b = rost_shift(p, n);
    for (Int i = 0; i < p; ++i) out.rost_shifts.push_back(i * b);
    for (std::size_t j = 0; j < division->quotient.size(); ++j) {
        const Int m = division->quotient[j];
        if (m < 0)
            throw Error(ErrorKind::NotDecomposable,
                        "negative multiplicity " + std::to_string(m) + " at shift " + std::to_string(j));
        if (m > 0) out.sb_multiplicities.emplace(static_cast<int>(j), m);
    }
    return out;
}

Int sb_copy_count(Int s, Int p) {
    require_prime(p);
    if (s < 1) throw Error(ErrorKind::InvalidRank, "the number of maximal cones must be positive");
    Int factorial = 1;
    for (Int i = 2; i < p; ++i) factorial = checked_mul(factorial, i);
    return checked_mul(s, factorial) - 1;
}

std::string GroupDescriptor::to_string() const {
    if (kind == Kind::Free) return value == 1 ? "Z" : "Z^" + std::to_string(value);
    return "Z/" + std::to_string(value);
}

ChowRingPresentation chow_ring_sl1(Int p) {
    require_prime(p);
    if (p > 1 << 15) throw Error(ErrorKind::BadDegree, "p too large for a degree table");
    ChowRingPresentation ring;
    ring.p = p;
    ring.generator_degree = static_cast<int>(p + 1);
    ring.components.emplace(0, GroupDescriptor{GroupDescriptor::Kind::Free, 1});
    for (Int j = 1; j <= p - 1; ++j)
        ring.components.emplace(static_cast<int>((p + 1) * j), GroupDescriptor{GroupDescriptor::Kind::Torsion, p});
    ring.relations = {"p*h=0", "h^p=0"};
    return ring;
}

ChowRingPresentation chow_torsor(Int p) {
    require_prime(p);
    ChowRingPresentation ring;
    ring.p = p;
    ring.generator_degree = 0;
    ring.components.emplace(0, GroupDescriptor{GroupDescriptor::Kind::Free, 1});
    ring.note = "char 0";
    return ring;
}

std::vector<std::pair<int, int>> diagonal_pairs(Int p) {
    require_prime(p);
    if (p > 1 << 20) throw Error(ErrorKind::BadDegree, "p too large");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < p; ++i) pairs.emplace_back(i, static_cast<int>(p) - 1 - i);
    return pairs;
}

}  // namespace toromotive
