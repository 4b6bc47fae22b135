#pragma once

#include <random>
#include <vector>

#include "toromotive/fan.hpp"
#include "toromotive/root_datum.hpp"

namespace testing_support {

/// Rank-2 resolution: subdivide every non-unimodular cone of f at a
/// lattice point of its fundamental parallelogram until all cones are
/// unimodular.
toromotive::Fan resolve_rank2(toromotive::Fan f);

/// Admissible fan for rd: the part of the chamber fan inside Ω gets
/// `steps` random stellar subdivisions, is made smooth (rank <= 2), and is
/// closed under W.
toromotive::Fan random_admissible_fan(const toromotive::RootDatum& rd, int steps, std::mt19937_64& rng);

/// The twelve-cone fan obtained by bisecting each Weyl chamber of SL_3.
toromotive::Fan bisected_sl3_fan(const toromotive::RootDatum& rd);

toromotive::Fan projective_plane_fan();
toromotive::Fan p1_fan();
toromotive::Fan p1xp1_fan();
toromotive::Fan hirzebruch_fan(toromotive::Int a);

}  // namespace testing_support
