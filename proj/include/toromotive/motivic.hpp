#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toromotive/poincare.hpp"

namespace toromotive {

bool is_prime(Int p) noexcept;

/// Shift b = (p^{n-1} - 1) / (p - 1) of the Rost motive.
Int rost_shift(Int p, int n);

/// sum_{i=0}^{p-1} t^{i b}. Throws NotPrime or BadDegree.
PoincarePolynomial rost_polynomial(Int p, int n = 3);

/// 1 + t + ... + t^{p-1}, the split motive of a Severi-Brauer variety of
/// dimension p - 1.
PoincarePolynomial severi_brauer_polynomial(Int p);

/// Poincare-level decomposition P = P_R + sum_j m_j t^j P_S. Only the
/// arithmetic is checked; the geometric hypotheses (the motive splits over
/// the function field of the Severi-Brauer variety) are the caller's.
struct MotivicDecomposition {
    Int p = 0;
    int n = 3;
    std::vector<Int> rost_shifts;
    std::map<int, Int> sb_multiplicities;  ///< only nonzero m_j

    Int total_sb_copies() const;
    PoincarePolynomial reconstruct() const;
};

/// Throws NotDecomposable when the division leaves a remainder or a
/// negative multiplicity.
MotivicDecomposition decompose(const PoincarePolynomial& poly, Int p, int n = 3);

/// s (p-1)! - 1.
Int sb_copy_count(Int s, Int p);

struct GroupDescriptor {
    enum class Kind { Free, Torsion };
    Kind kind;
    Int value;  ///< rank for Free, order for Torsion

    std::string to_string() const;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct ChowRingPresentation {
    Int p = 0;
    int generator_degree = 0;
    std::map<int, GroupDescriptor> components;  ///< nontrivial degrees only
    std::vector<std::string> relations;
    std::string note;

    int top_degree() const noexcept { return components.empty() ? 0 : components.rbegin()->first; }
};

/// CH(SL_1(D)) for a division algebra D of prime degree p: Z in degree 0
/// and Z/p generated by h^j in degree (p+1) j, 1 <= j <= p-1.
ChowRingPresentation chow_ring_sl1(Int p);

/// CH(E) = Z for a nonsplit SL_1(D)-torsor E; known in characteristic 0.
ChowRingPresentation chow_torsor(Int p);

/// Exponent pairs (i, p-1-i) of the diagonal class c·Δ = sum h^i × h^{p-1-i}.
std::vector<std::pair<int, int>> diagonal_pairs(Int p);

}  // namespace toromotive
