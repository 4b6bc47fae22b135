#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "toromotive/fan.hpp"
#include "toromotive/polyhedral.hpp"
#include "toromotive/root_datum.hpp"

namespace toromotive {

/// Polynomial with nonnegative integer coefficients, ascending degree,
/// without trailing zeros.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    /// Throws InvalidPolynomial on a negative coefficient.
    explicit PoincarePolynomial(std::vector<Int> coeffs);

    /// Polynomial sum_e t^e over the given exponents.
    static PoincarePolynomial from_exponents(std::span<const int> exponents);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Int coefficient(std::size_t d) const noexcept { return d < coeffs_.size() ? coeffs_[d] : 0; }
    Int at_one() const;
    bool is_palindromic() const noexcept;

    /// Descending t-notation, e.g. "t^3 + 2t^2 + 2t + 1".
    std::string pretty() const;

    PoincarePolynomial operator*(const PoincarePolynomial& rhs) const;
    PoincarePolynomial operator+(const PoincarePolynomial& rhs) const;

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    std::vector<Int> coeffs_;
};

struct Division {
    std::vector<Int> quotient;
    std::vector<Int> remainder;  ///< trimmed; empty when exact
};

/// Integer long division of signed coefficient vectors (ascending degree).
/// Returns nullopt when some step needs a non-integral quotient.
std::optional<Division> long_divide(std::span<const Int> numerator, std::span<const Int> divisor);

struct FactoredPoincare {
    PoincarePolynomial first_factor;
    PoincarePolynomial flag_factor;
    PoincarePolynomial product;
};

/// sum_{w in W} t^{l(w)}.
PoincarePolynomial flag_poincare(const RootDatum& rd);

/// sum over max cones of t^{a_σ}, a_σ the number of lexicographically
/// positive dual-basis characters. This overload compares in the standard
/// basis of the character lattice.
PoincarePolynomial toric_poincare(const Fan& f, const BasisOrder& order = {});
/// Same, comparing characters in the simple-root basis of rd.
PoincarePolynomial toric_poincare(const RootDatum& rd, const Fan& f, const BasisOrder& order = {});

/// Number of dual-basis characters of sigma that w sends lex-positive.
int b_count(const RootDatum& rd, const Cone& sigma, const WeylElement& w, const BasisOrder& order = {});

/// (sum_{w, σ ⊂ Ω} t^{l(w) + b(σ, w)}) · P_{G/B}(t) for an admissible fan.
/// Throws FanNotAdmissible naming the first failed check. threads = 0 picks
/// a worker count automatically (serial for small inputs); any other value
/// forces exactly that many workers.
FactoredPoincare compactification_poincare(const RootDatum& rd, const Fan& f, const BasisOrder& order = {},
                                           std::size_t threads = 0);

/// k |W|^2 torus-fixed points, k = number of max cones inside Ω.
std::uint64_t fixed_point_count(const RootDatum& rd, const Fan& f);

/// Worker count for internal parallel loops; TOROMOTIVE_THREADS caps it.
std::size_t worker_count();

}  // namespace toromotive
