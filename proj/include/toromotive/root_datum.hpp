#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "toromotive/linalg.hpp"

namespace toromotive {

enum class Family { A, B, C, D, E, F, G };

struct CartanType {
    Family family;
    int rank;

    friend bool operator==(const CartanType&, const CartanType&) = default;
};

char family_letter(Family f) noexcept;
Family parse_family(char letter);
std::string to_string(const CartanType& ct);

enum class LatticeKind { SimplyConnected, Adjoint };

/// Order of W for a valid Cartan type, computed from the classical formulas.
std::uint64_t classical_weyl_order(const CartanType& ct);

struct WeylElement {
    IntMatrix char_matrix;    ///< action on T* coordinates
    IntMatrix cochar_matrix;  ///< inverse transpose of char_matrix, action on T_*
    int length = 0;
    std::vector<int> word;    ///< reduced word, w = s_{word[0]} ... s_{word[k-1]}
};

inline constexpr std::size_t kDefaultWeylGuard = 1'000'000;

/// Root datum of an irreducible split group.
///
/// Coordinates: for a simply connected datum, characters are written in the
/// fundamental-weight basis and cocharacters in the simple-coroot basis; for
/// an adjoint datum, characters use the simple-root basis and cocharacters
/// the fundamental-coweight basis. In both cases the pairing of a character
/// and a cocharacter is the dot product. The Cartan matrix entry (i, j) is
/// the pairing of the i-th simple root with the j-th simple coroot.
class RootDatum {
public:
    RootDatum(CartanType ct, LatticeKind lattice);

    const CartanType& cartan_type() const noexcept { return type_; }
    LatticeKind lattice() const noexcept { return lattice_; }
    std::size_t rank() const noexcept { return static_cast<std::size_t>(type_.rank); }
    const IntMatrix& cartan() const noexcept { return cartan_; }

    const IntVector& simple_root(std::size_t i) const { return simple_roots_.at(i); }
    const IntVector& simple_coroot(std::size_t i) const { return simple_coroots_.at(i); }

    /// Coordinates of a character in the simple-root basis.
    RationalVector root_coordinates(std::span<const Int> chi) const;

    const IntMatrix& reflection_on_characters(std::size_t i) const { return char_reflections_.at(i); }
    const IntMatrix& reflection_on_cocharacters(std::size_t i) const { return cochar_reflections_.at(i); }

    /// Positive roots in character coordinates, simple roots first.
    const std::vector<IntVector>& positive_roots() const noexcept { return positive_roots_; }

    /// Whole Weyl group, enumerated once on first use. Throws GroupTooLarge
    /// when |W| exceeds `guard`.
    const std::vector<WeylElement>& weyl_group(std::size_t guard = kDefaultWeylGuard) const;

private:
    CartanType type_;
    LatticeKind lattice_;
    IntMatrix cartan_;
    RationalMatrix inverse_cartan_;
    std::vector<IntVector> simple_roots_;
    std::vector<IntVector> simple_coroots_;
    std::vector<IntMatrix> char_reflections_;
    std::vector<IntMatrix> cochar_reflections_;
    std::vector<IntVector> positive_roots_;

    struct Cache;
    std::shared_ptr<Cache> cache_;
};

RootDatum build_root_datum(const CartanType& ct, LatticeKind lattice);

inline const std::vector<IntVector>& positive_roots(const RootDatum& rd) { return rd.positive_roots(); }

inline const std::vector<WeylElement>& weyl_group(const RootDatum& rd, std::size_t guard = kDefaultWeylGuard) {
    return rd.weyl_group(guard);
}

IntVector act_on_character(const RootDatum& rd, const WeylElement& w, std::span<const Int> chi);
IntVector act_on_cocharacter(const RootDatum& rd, const WeylElement& w, std::span<const Int> v);

/// Number of positive roots sent to negative roots.
int inversion_count(const RootDatum& rd, const WeylElement& w);

/// Index of the longest element in weyl_group(rd).
std::size_t longest_element_index(const RootDatum& rd);

}  // namespace toromotive
