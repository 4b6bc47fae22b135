#pragma once

#include <cstddef>
#include <vector>

#include "toromotive/polyhedral.hpp"
#include "toromotive/root_datum.hpp"

namespace toromotive {

using ConeIndices = std::vector<std::size_t>;

/// Simplicial fan given by its maximal cones, each a sorted set of indices
/// into a shared, duplicate-free list of primitive rays.
class Fan {
public:
    /// Validates the structural invariants (ray length, primitivity,
    /// duplicates, index range, cone size, simpliciality) and throws
    /// MalformedFan on the first violation. Cone index sets are sorted.
    Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<ConeIndices> max_cones);

    std::size_t rank() const noexcept { return rank_; }
    const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
    const std::vector<ConeIndices>& max_cones() const noexcept { return max_cones_; }
    std::size_t size() const noexcept { return max_cones_.size(); }

    Cone cone(std::size_t i) const;

    /// Same fan with rays sorted lexicographically and cones sorted.
    Fan canonical() const;

    /// Equality of the underlying sets of cones, ignoring indexing.
    bool same_cones(const Fan& other) const;

private:
    std::size_t rank_;
    std::vector<LatticeVector> rays_;
    std::vector<ConeIndices> max_cones_;
};

/// Builds a fan from cones given by explicit rays, deduplicating rays and
/// cones. The result is canonical.
Fan fan_from_cones(std::size_t rank, const std::vector<Cone>& cones);

struct FanReport {
    bool simplicial = true;
    bool smooth = false;
    bool complete = false;
    bool faces_ok = false;
    bool w_invariant = false;
    bool refines_chambers = false;
    std::size_t max_cone_count = 0;             ///< s
    std::size_t cones_in_negative_chamber = 0;  ///< k

    bool admissible() const noexcept {
        return simplicial && smooth && complete && faces_ok && w_invariant && refines_chambers;
    }
};

/// Every max cone unimodular.
bool is_smooth(const Fan& f);
/// Every pair of max cones meets in a common face.
bool faces_ok(const Fan& f);
/// Wall condition: each codimension-one face lies in exactly two max cones
/// and the wall-adjacency graph is connected.
bool is_complete(const Fan& f);

/// Fan of Weyl chambers w(Ω), Ω = {x : <α_i, x> <= 0 for all i}.
Fan weyl_chamber_fan(const RootDatum& rd);

FanReport validate_fan(const RootDatum& rd, const Fan& f);

/// Star subdivision of every max cone containing `ray`.
Fan stellar_subdivide(const RootDatum& rd, const Fan& f, std::span<const Int> ray);
Fan stellar_subdivide(const Fan& f, std::span<const Int> ray);

/// W-orbit of the max cones of f lying in Ω. Throws NotRefinement if some
/// max cone is not contained in a single Weyl chamber.
Fan symmetrize(const RootDatum& rd, const Fan& f);

/// True iff every ray satisfies <α_i, ray> <= 0 for all simple roots.
bool in_negative_chamber(const RootDatum& rd, const Cone& c);

/// Index of a Weyl element w with c ⊂ w(Ω), or nullopt.
std::optional<std::size_t> containing_chamber(const RootDatum& rd, const Cone& c);

std::vector<Cone> cones_in_negative_chamber(const RootDatum& rd, const Fan& f);

}  // namespace toromotive
