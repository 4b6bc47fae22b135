#include "toromotive/poincare.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <thread>

#include "toromotive/error.hpp"

namespace toromotive {

namespace {

std::vector<Int> trimmed(std::vector<Int> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

PoincarePolynomial::PoincarePolynomial(std::vector<Int> coeffs) : coeffs_(trimmed(std::move(coeffs))) {
    for (Int c : coeffs_)
        if (c < 0) throw Error(ErrorKind::InvalidPolynomial, "Poincare polynomial with a negative coefficient");
}

PoincarePolynomial PoincarePolynomial::from_exponents(std::span<const int> exponents) {
    std::vector<Int> coeffs;
    for (int e : exponents) {
        if (e < 0) throw Error(ErrorKind::InvalidPolynomial, "negative exponent");
        if (static_cast<std::size_t>(e) >= coeffs.size()) coeffs.resize(static_cast<std::size_t>(e) + 1, 0);
        ++coeffs[static_cast<std::size_t>(e)];
    }
    return PoincarePolynomial(std::move(coeffs));
}

Int PoincarePolynomial::at_one() const {
    Int total = 0;
    for (Int c : coeffs_) total = checked_add(total, c);
    return total;
}

bool PoincarePolynomial::is_palindromic() const noexcept {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

std::string PoincarePolynomial::pretty() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        const Int c = coeffs_[d];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (c != 1 || d == 0) out += std::to_string(c);
        if (d >= 1) out += "t";
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
    return PoincarePolynomial(std::move(out));
}

PoincarePolynomial PoincarePolynomial::operator+(const PoincarePolynomial& rhs) const {
    std::vector<Int> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(coefficient(i), rhs.coefficient(i));
    return PoincarePolynomial(std::move(out));
}

std::optional<Division> long_divide(std::span<const Int> numerator, std::span<const Int> divisor) {
    const std::vector<Int> den = trimmed(std::vector<Int>(divisor.begin(), divisor.end()));
    if (den.empty()) throw Error(ErrorKind::InvalidPolynomial, "division by the zero polynomial");
    std::vector<Int> rem = trimmed(std::vector<Int>(numerator.begin(), numerator.end()));
    Division result;
    if (rem.size() < den.size()) {
        result.remainder = std::move(rem);
        return result;
    }
    result.quotient.assign(rem.size() - den.size() + 1, 0);
    const Int lead = den.back();
    for (std::size_t shift = result.quotient.size(); shift-- > 0;) {
        const Int top = rem[shift + den.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        const Int q = top / lead;
        result.quotient[shift] = q;
        for (std::size_t k = 0; k < den.size(); ++k)
            rem[shift + k] = checked_add(rem[shift + k], checked_mul(-q, den[k]));
    }
    result.remainder = trimmed(std::move(rem));
    return result;
}

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TOROMOTIVE_THREADS")) {
        std::size_t cap = 0;
        const char* end = env + std::char_traits<char>::length(env);
        if (std::from_chars(env, end, cap).ec == std::errc{} && cap >= 1) n = std::min(n, cap);
    }
    return n;
}

PoincarePolynomial flag_poincare(const RootDatum& rd) {
    std::vector<int> lengths;
    for (const auto& w : rd.weyl_group()) lengths.push_back(w.length);
    return PoincarePolynomial::from_exponents(lengths);
}

namespace {

void require_smooth_complete(const Fan& f) {
    if (!is_smooth(f)) throw Error(ErrorKind::NotSmooth, "toric variety needs a smooth fan");
    if (!faces_ok(f) || !is_complete(f)) throw Error(ErrorKind::NotComplete, "toric variety needs a complete fan");
}

template <typename SignOf>
PoincarePolynomial toric_sum(const Fan& f, SignOf sign_of) {
    std::vector<int> exponents;
    for (std::size_t c = 0; c < f.size(); ++c) {
        int positive = 0;
        for (const auto& chi : dual_basis(f.cone(c)))
            if (sign_of(chi) == Sign::Positive) ++positive;
        exponents.push_back(positive);
    }
    return PoincarePolynomial::from_exponents(exponents);
}

}  // namespace

PoincarePolynomial toric_poincare(const Fan& f, const BasisOrder& order) {
    require_smooth_complete(f);
    return toric_sum(f, [&](const IntVector& chi) { return lex_sign_standard(chi, order); });
}

PoincarePolynomial toric_poincare(const RootDatum& rd, const Fan& f, const BasisOrder& order) {
    if (f.rank() != rd.rank()) throw Error(ErrorKind::MalformedFan, "fan rank does not match root datum rank");
    require_smooth_complete(f);
    return toric_sum(f, [&](const IntVector& chi) { return lex_sign(rd, chi, order); });
}

int b_count(const RootDatum& rd, const Cone& sigma, const WeylElement& w, const BasisOrder& order) {
    int count = 0;
    for (const auto& chi : dual_basis(rd, sigma))
        if (lex_sign(rd, w.char_matrix * chi, order) == Sign::Positive) ++count;
    return count;
}

FactoredPoincare compactification_poincare(const RootDatum& rd, const Fan& f, const BasisOrder& order,
                                           std::size_t threads) {
    const FanReport report = validate_fan(rd, f);
    auto reject = [](const char* field) {
        throw Error(ErrorKind::FanNotAdmissible, std::string("fan is not admissible: ") + field + " check failed");
    };
    if (!report.smooth) reject("smooth");
    if (!report.faces_ok) reject("faces_ok");
    if (!report.complete) reject("complete");
    if (!report.w_invariant) reject("w_invariant");
    if (!report.refines_chambers) reject("refines_chambers");

    const auto& group = rd.weyl_group();
    const auto sigmas = cones_in_negative_chamber(rd, f);

    std::vector<DualBasis> duals;
    for (const auto& sigma : sigmas) duals.push_back(dual_basis(rd, sigma));

    // Reduction over (w, σ): each worker fills its own exponent histogram.
    const std::size_t work = group.size() * duals.size();
    const std::size_t workers =
        threads != 0 ? threads : (work >= 4096 ? std::min(worker_count(), group.size()) : 1);
    std::vector<std::vector<Int>> partial(workers, std::vector<Int>(2 * rd.positive_roots().size() + rd.rank() + 1, 0));
    auto run = [&](std::size_t worker) {
        for (std::size_t k = worker; k < group.size(); k += workers)
            for (const auto& chars : duals) {
                int e = group[k].length;
                for (const auto& chi : chars)
                    if (lex_sign(rd, group[k].char_matrix * chi, order) == Sign::Positive) ++e;
                ++partial[worker][static_cast<std::size_t>(e)];
            }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::exception_ptr> failures(workers);
        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    try {
                        run(t);
                    } catch (...) {
                        failures[t] = std::current_exception();
                    }
                });
        }
        for (const auto& e : failures)
            if (e) std::rethrow_exception(e);
    }
    std::vector<Int> first(partial.front().size(), 0);
    for (const auto& h : partial)
        for (std::size_t d = 0; d < h.size(); ++d) first[d] = checked_add(first[d], h[d]);

    FactoredPoincare out;
    out.first_factor = PoincarePolynomial(std::move(first));
    out.flag_factor = flag_poincare(rd);
    out.product = out.first_factor * out.flag_factor;

    const auto tate = static_cast<Int>(report.max_cone_count * group.size());
    if (out.product.at_one() != tate)
        throw Error(ErrorKind::FanNotAdmissible, "Tate count " + std::to_string(out.product.at_one()) +
                                                     " differs from s|W| = " + std::to_string(tate));
    return out;
}

std::uint64_t fixed_point_count(const RootDatum& rd, const Fan& f) {
    const FanReport report = validate_fan(rd, f);
    if (!report.admissible()) throw Error(ErrorKind::FanNotAdmissible, "fan is not admissible");
    const std::uint64_t order = rd.weyl_group().size();
    return static_cast<std::uint64_t>(report.cones_in_negative_chamber) * order * order;
}

}  // namespace toromotive
