#pragma once

#include <optional>
#include <span>
#include <vector>

#include "toromotive/linalg.hpp"
#include "toromotive/root_datum.hpp"

namespace toromotive {

/// Lattice point in cocharacter coordinates.
using LatticeVector = IntVector;

/// v / gcd(|v_i|); throws ZeroVector for v = 0.
LatticeVector primitive(std::span<const Int> v);
bool is_primitive(std::span<const Int> v);

/// Simplicial cone spanned by primitive, linearly independent rays.
class Cone {
public:
    /// Rays are normalized to primitive vectors. Throws ZeroVector or
    /// NotSimplicial.
    explicit Cone(std::vector<LatticeVector> rays);

    const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
    std::size_t dimension() const noexcept { return rays_.size(); }
    std::size_t ambient_rank() const noexcept { return rays_.empty() ? 0 : rays_.front().size(); }
    bool full_dimensional() const noexcept { return dimension() == ambient_rank(); }

    /// Matrix with the rays as columns.
    IntMatrix ray_matrix() const { return IntMatrix::from_columns(rays_); }

    /// Coefficients of v in the ray basis, or nullopt if v is not in the
    /// linear span. Requires nothing beyond simpliciality.
    std::optional<RationalVector> coefficients(std::span<const Int> v) const;

    bool contains(std::span<const Int> v) const;

    friend bool operator==(const Cone&, const Cone&) = default;

private:
    std::vector<LatticeVector> rays_;
};

/// Characters chi_1..chi_n with <chi_i, ray_j> = delta_ij.
using DualBasis = std::vector<IntVector>;

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

/// Permutation of the simple-root indices giving the order in which
/// coordinates are compared. Empty means the natural order.
using BasisOrder = std::vector<std::size_t>;

bool is_unimodular(const Cone& c);
bool is_unimodular(const RootDatum& rd, const Cone& c);

DualBasis dual_basis(const Cone& c);
DualBasis dual_basis(const RootDatum& rd, const Cone& c);

/// Sign of the first nonzero coordinate of chi in the simple-root basis.
Sign lex_sign(const RootDatum& rd, std::span<const Int> chi, const BasisOrder& order = {});

/// Lexicographic sign in the standard basis of Z^n (pure toric mode).
Sign lex_sign_standard(std::span<const Int> chi, const BasisOrder& order = {});

/// True iff c1 and c2 meet along the cone spanned by their shared rays.
bool common_face(const Cone& c1, const Cone& c2);
inline bool common_face(const RootDatum&, const Cone& c1, const Cone& c2) { return common_face(c1, c2); }

}  // namespace toromotive
