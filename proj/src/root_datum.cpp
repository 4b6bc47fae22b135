#include "toromotive/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "toromotive/error.hpp"

namespace toromotive {

char family_letter(Family f) noexcept {
    return static_cast<char>('A' + static_cast<int>(f));
}

Family parse_family(char letter) {
    if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
    if (letter < 'A' || letter > 'G') throw Error(ErrorKind::InvalidRank, std::string("unknown Cartan family '") + letter + "'");
    return static_cast<Family>(letter - 'A');
}

std::string to_string(const CartanType& ct) {
    return std::string(1, family_letter(ct.family)) + std::to_string(ct.rank);
}

namespace {

void check_rank(const CartanType& ct) {
    const int n = ct.rank;
    bool ok = false;
    switch (ct.family) {
        case Family::A: ok = n >= 1; break;
        case Family::B:
        case Family::C: ok = n >= 2; break;
        case Family::D: ok = n >= 3; break;
        case Family::E: ok = n >= 6 && n <= 8; break;
        case Family::F: ok = n == 4; break;
        case Family::G: ok = n == 2; break;
    }
    if (!ok) throw Error(ErrorKind::InvalidRank, "no irreducible root system of type " + to_string(ct));
}

// Gram matrix of the simple roots, scaled so that every entry is an integer.
IntMatrix gram_matrix(const CartanType& ct) {
    const std::size_t n = static_cast<std::size_t>(ct.rank);
    IntMatrix g(n, n);
    auto link = [&](std::size_t i, std::size_t j, Int v) { g(i, j) = v; g(j, i) = v; };
    for (std::size_t i = 0; i < n; ++i) g(i, i) = 2;

    switch (ct.family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::B:
            for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
            g(n - 1, n - 1) = 1;
            break;
        case Family::C:
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 2, n - 1, -2);
            g(n - 1, n - 1) = 4;
            break;
        case Family::D:
            for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
            link(n - 3, n - 1, -1);
            break;
        case Family::E:
            link(0, 2, -1);
            link(1, 3, -1);
            for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
            break;
        case Family::F:
            g(0, 0) = 4; g(1, 1) = 4;
            link(0, 1, -2);
            link(1, 2, -2);
            link(2, 3, -1);
            break;
        case Family::G:
            g(1, 1) = 6;
            link(0, 1, -3);
            break;
    }
    return g;
}

struct VectorHash {
    std::size_t operator()(const std::vector<Int>& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::uint64_t classical_weyl_order(const CartanType& ct) {
    check_rank(ct);
    auto factorial = [](int n) {
        std::uint64_t f = 1;
        for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
        return f;
    };
    const int n = ct.rank;
    switch (ct.family) {
        case Family::A: return n + 1 <= 20 ? factorial(n + 1) : UINT64_MAX;
        case Family::B:
        case Family::C: return n <= 19 ? (std::uint64_t{1} << n) * factorial(n) : UINT64_MAX;
        case Family::D: return n <= 19 ? (std::uint64_t{1} << (n - 1)) * factorial(n) : UINT64_MAX;
        case Family::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

struct RootDatum::Cache {
    std::mutex mutex;
    std::vector<WeylElement> elements;
    bool ready = false;
};

RootDatum::RootDatum(CartanType ct, LatticeKind lattice)
    : type_(ct), lattice_(lattice), cache_(std::make_shared<Cache>()) {
    check_rank(ct);
    const std::size_t n = rank();
    const IntMatrix g = gram_matrix(ct);
    cartan_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cartan_(i, j) = 2 * g(i, j) / g(j, j);
    inverse_cartan_ = *inverse(cartan_);

    for (std::size_t i = 0; i < n; ++i) {
        if (lattice_ == LatticeKind::SimplyConnected) {
            simple_roots_.push_back(cartan_.row(i));
            IntVector e(n, 0);
            e[i] = 1;
            simple_coroots_.push_back(std::move(e));
        } else {
            IntVector e(n, 0);
            e[i] = 1;
            simple_roots_.push_back(std::move(e));
            simple_coroots_.push_back(cartan_.column(i));
        }
    }

    // s_i(chi) = chi - <chi, coroot_i> root_i, and the contragredient action on T_*.
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::identity(n);
        IntMatrix t = IntMatrix::identity(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                s(r, c) -= simple_roots_[i][r] * simple_coroots_[i][c];
                t(r, c) -= simple_coroots_[i][r] * simple_roots_[i][c];
            }
        char_reflections_.push_back(std::move(s));
        cochar_reflections_.push_back(std::move(t));
    }

    // Close the simple roots under simple reflections, in root coordinates.
    std::set<IntVector> seen;
    std::deque<IntVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        const IntVector beta = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Int pairing = 0;
            for (std::size_t j = 0; j < n; ++j) pairing = checked_add(pairing, checked_mul(beta[j], cartan_(j, i)));
            if (pairing == 0) continue;
            IntVector image = beta;
            image[i] -= pairing;
            if (seen.insert(image).second) queue.push_back(std::move(image));
        }
    }
    std::vector<IntVector> positive;
    for (const auto& beta : seen)
        if (std::all_of(beta.begin(), beta.end(), [](Int x) { return x >= 0; })) positive.push_back(beta);
    auto height = [](const IntVector& v) {
        Int h = 0;
        for (Int x : v) h += x;
        return h;
    };
    std::stable_sort(positive.begin(), positive.end(), [&](const IntVector& a, const IntVector& b) {
        const Int ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a > b;
    });
    for (const auto& beta : positive) {
        if (lattice_ == LatticeKind::Adjoint) {
            positive_roots_.push_back(beta);
            continue;
        }
        IntVector chi(n, 0);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) chi[k] = checked_add(chi[k], checked_mul(beta[j], cartan_(j, k)));
        positive_roots_.push_back(std::move(chi));
    }
}

RationalVector RootDatum::root_coordinates(std::span<const Int> chi) const {
    const std::size_t n = rank();
    if (chi.size() != n) throw Error(ErrorKind::DimensionMismatch, "character has the wrong length");
    RationalVector out(n);
    if (lattice_ == LatticeKind::Adjoint) {
        for (std::size_t j = 0; j < n; ++j) out[j] = chi[j];
        return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational acc = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (chi[i] != 0) acc += inverse_cartan_[i][j] * chi[i];
        out[j] = acc;
    }
    return out;
}

const std::vector<WeylElement>& RootDatum::weyl_group(std::size_t guard) const {
    std::lock_guard lock(cache_->mutex);
    if (cache_->ready) {
        if (cache_->elements.size() > guard)
            throw Error(ErrorKind::GroupTooLarge, "Weyl group of " + to_string(type_) + " exceeds the size guard");
        return cache_->elements;
    }
    if (classical_weyl_order(type_) > guard)
        throw Error(ErrorKind::GroupTooLarge, "Weyl group of " + to_string(type_) + " has order " +
                                                  std::to_string(classical_weyl_order(type_)) + " > " +
                                                  std::to_string(guard));

    const std::size_t n = rank();
    std::vector<WeylElement> elements;
    std::unordered_map<std::vector<Int>, std::size_t, VectorHash> index;
    elements.push_back({IntMatrix::identity(n), IntMatrix::identity(n), 0, {}});
    index.emplace(elements.front().char_matrix.data(), 0);

    // Breadth-first over right multiplication: BFS depth is the length.
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            IntMatrix m = elements[head].char_matrix * char_reflections_[i];
            if (index.contains(m.data())) continue;
            if (elements.size() >= guard) throw Error(ErrorKind::GroupTooLarge, "Weyl group enumeration exceeded the guard");
            WeylElement next;
            next.cochar_matrix = elements[head].cochar_matrix * cochar_reflections_[i];
            next.length = elements[head].length + 1;
            next.word = elements[head].word;
            next.word.push_back(static_cast<int>(i));
            index.emplace(m.data(), elements.size());
            next.char_matrix = std::move(m);
            elements.push_back(std::move(next));
        }
    }
    cache_->elements = std::move(elements);
    cache_->ready = true;
    return cache_->elements;
}

RootDatum build_root_datum(const CartanType& ct, LatticeKind lattice) {
    return RootDatum(ct, lattice);
}

IntVector act_on_character(const RootDatum& rd, const WeylElement& w, std::span<const Int> chi) {
    if (chi.size() != rd.rank()) throw Error(ErrorKind::DimensionMismatch, "character has the wrong length");
    return w.char_matrix * chi;
}

IntVector act_on_cocharacter(const RootDatum& rd, const WeylElement& w, std::span<const Int> v) {
    if (v.size() != rd.rank()) throw Error(ErrorKind::DimensionMismatch, "cocharacter has the wrong length");
    return w.cochar_matrix * v;
}

int inversion_count(const RootDatum& rd, const WeylElement& w) {
    int count = 0;
    for (const auto& beta : rd.positive_roots()) {
        const auto coords = rd.root_coordinates(w.char_matrix * beta);
        const bool negative = std::any_of(coords.begin(), coords.end(), [](const Rational& q) { return q < 0; });
        if (negative) ++count;
    }
    return count;
}

std::size_t longest_element_index(const RootDatum& rd) {
    const auto& group = rd.weyl_group();
    const auto it = std::max_element(group.begin(), group.end(),
                                     [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
    return static_cast<std::size_t>(it - group.begin());
}

}  // namespace toromotive
