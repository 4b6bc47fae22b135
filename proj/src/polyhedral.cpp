#include "toromotive/polyhedral.hpp"

#include <algorithm>
#include <numeric>

#include "toromotive/error.hpp"

namespace toromotive {

LatticeVector primitive(std::span<const Int> v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    if (g == 0) throw Error(ErrorKind::ZeroVector, "the zero vector has no primitive direction");
    LatticeVector out(v.begin(), v.end());
    for (auto& x : out) x /= g;
    return out;
}

bool is_primitive(std::span<const Int> v) {
    Int g = 0;
    for (Int x : v) g = std::gcd(g, x);
    return g == 1;
}

Cone::Cone(std::vector<LatticeVector> rays) {
    rays_.reserve(rays.size());
    for (const auto& r : rays) {
        if (!rays_.empty() && r.size() != rays_.front().size())
            throw Error(ErrorKind::DimensionMismatch, "cone rays of different length");
        rays_.push_back(primitive(r));
    }
    if (!rays_.empty()) {
        RationalMatrix m;
        for (const auto& r : rays_) m.emplace_back(r.begin(), r.end());
        if (rank(m) != rays_.size()) throw Error(ErrorKind::NotSimplicial, "cone rays are linearly dependent");
    }
}

std::optional<RationalVector> Cone::coefficients(std::span<const Int> v) const {
    if (v.size() != ambient_rank()) throw Error(ErrorKind::DimensionMismatch, "vector has the wrong length");
    return solve(ray_matrix(), v);
}

bool Cone::contains(std::span<const Int> v) const {
    const auto lambda = coefficients(v);
    return lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& q) { return q >= 0; });
}

bool is_unimodular(const Cone& c) {
    if (!c.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "unimodularity needs a full-dimensional cone");
    const BigInt det = determinant(c.ray_matrix());
    return det == 1 || det == -1;
}

bool is_unimodular(const RootDatum& rd, const Cone& c) {
    if (c.ambient_rank() != rd.rank() || !c.full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "cone is not full-dimensional for this root datum");
    return is_unimodular(c);
}

DualBasis dual_basis(const Cone& c) {
    if (!c.full_dimensional()) throw Error(ErrorKind::NotFullDimensional, "dual basis needs a full-dimensional cone");
    // Rows of the inverse of the ray matrix pair with the rays to the identity.
    const auto inv = unimodular_inverse(c.ray_matrix());
    if (!inv) throw Error(ErrorKind::NotSmooth, "cone is not unimodular");
    DualBasis chars;
    for (std::size_t i = 0; i < inv->rows(); ++i) chars.push_back(inv->row(i));
    return chars;
}

DualBasis dual_basis(const RootDatum& rd, const Cone& c) {
    if (c.ambient_rank() != rd.rank() || !c.full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "cone is not full-dimensional for this root datum");
    return dual_basis(c);
}

namespace {

void check_order(const BasisOrder& order, std::size_t n) {
    if (order.empty()) return;
    std::vector<std::size_t> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i)
        if (sorted.size() != n || sorted[i] != i)
            throw Error(ErrorKind::DimensionMismatch, "basis order is not a permutation of the simple roots");
}

template <typename Coord>
Sign first_nonzero_sign(const std::vector<Coord>& coords, const BasisOrder& order) {
    for (std::size_t k = 0; k < coords.size(); ++k) {
        const auto& x = coords[order.empty() ? k : order[k]];
        if (x > 0) return Sign::Positive;
        if (x < 0) return Sign::Negative;
    }
    return Sign::Zero;
}

}  // namespace

Sign lex_sign(const RootDatum& rd, std::span<const Int> chi, const BasisOrder& order) {
    check_order(order, rd.rank());
    return first_nonzero_sign(rd.root_coordinates(chi), order);
}

Sign lex_sign_standard(std::span<const Int> chi, const BasisOrder& order) {
    check_order(order, chi.size());
    return first_nonzero_sign(IntVector(chi.begin(), chi.end()), order);
}

bool common_face(const Cone& c1, const Cone& c2) {
    const std::size_t n = c1.ambient_rank();
    if (c2.ambient_rank() != n) throw Error(ErrorKind::DimensionMismatch, "cones live in different lattices");
    if (!c1.full_dimensional() || !c2.full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "common_face compares full-dimensional cones");

    // c1 ∩ c2 = {x : D1 x >= 0, D2 x >= 0}, D = inverse ray matrix. Every
    // extreme ray is cut out by n-1 independent tight inequalities; the
    // intersection is the shared face iff no extreme ray has weight on a
    // ray of c1 that c2 lacks.
    const auto d1 = inverse(c1.ray_matrix());
    const auto d2 = inverse(c2.ray_matrix());
    RationalMatrix rows = *d1;
    rows.insert(rows.end(), d2->begin(), d2->end());

    std::vector<bool> shared(n, false);
    for (std::size_t i = 0; i < n; ++i)
        shared[i] = std::find(c2.rays().begin(), c2.rays().end(), c1.rays()[i]) != c2.rays().end();

    const std::size_t m = rows.size();
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
    do {
        RationalMatrix tight;
        for (std::size_t i = 0; i < m; ++i)
            if (pick[i]) tight.push_back(rows[i]);
        const auto kernel = nullspace(tight, n);
        if (kernel.size() != 1) continue;
        for (int s : {1, -1}) {
            RationalVector x = kernel.front();
            for (auto& q : x) q *= s;
            bool feasible = true;
            for (const auto& r : rows) {
                Rational acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += r[j] * x[j];
                if (acc < 0) { feasible = false; break; }
            }
            if (!feasible) continue;
            for (std::size_t i = 0; i < n; ++i) {
                if (shared[i]) continue;
                Rational acc = 0;
                for (std::size_t j = 0; j < n; ++j) acc += rows[i][j] * x[j];
                if (acc != 0) return false;
            }
        }
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

}  // namespace toromotive
