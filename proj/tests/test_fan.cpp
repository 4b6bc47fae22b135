#include <doctest.h>

#include <random>
#include <set>

#include "fan_gen.hpp"
#include "toromotive/error.hpp"
#include "toromotive/fan.hpp"

using namespace toromotive;
using testing_support::bisected_sl3_fan;

namespace {

std::set<std::set<LatticeVector>> cone_sets(const Fan& f) {
    std::set<std::set<LatticeVector>> out;
    for (std::size_t c = 0; c < f.size(); ++c) {
        const Cone cone = f.cone(c);
        out.insert(std::set<LatticeVector>(cone.rays().begin(), cone.rays().end()));
    }
    return out;
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Overflow;
}

}  // namespace

TEST_CASE("Fan structural validation") {
    CHECK(kind_of([] { Fan(2, {{1, 0}, {0, 1}}, {{0, 2}}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{1, 0}, {1, 0}}, {}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{1, 0}, {-1, 0}}, {{0, 1}}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{1, 0, 0}}, {}); }) == ErrorKind::MalformedFan);
    CHECK(kind_of([] { Fan(2, {{1, 0}, {0, 1}}, {{0}}); }) == ErrorKind::MalformedFan);
}

TEST_CASE("weyl_chamber_fan") {
    const auto a1 = build_root_datum({Family::A, 1}, LatticeKind::SimplyConnected);
    const Fan f1 = weyl_chamber_fan(a1);
    CHECK(f1.rays() == std::vector<LatticeVector>{{-1}, {1}});
    CHECK(f1.size() == 2);

    const auto ad = build_root_datum({Family::A, 2}, LatticeKind::Adjoint);
    const Fan fa = weyl_chamber_fan(ad);
    CHECK(fa.rays().size() == 6);
    CHECK(fa.size() == 6);
    CHECK(cones_in_negative_chamber(ad, fa) == std::vector<Cone>{Cone({{-1, 0}, {0, -1}})});

    const auto sc = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan fs = weyl_chamber_fan(sc);
    CHECK(fs.size() == 6);
    const auto omega = cones_in_negative_chamber(sc, fs);
    REQUIRE(omega.size() == 1);
    CHECK(std::set<LatticeVector>(omega[0].rays().begin(), omega[0].rays().end()) ==
          std::set<LatticeVector>{{-2, -1}, {-1, -2}});

    CHECK(cones_in_negative_chamber(a1, f1) == std::vector<Cone>{Cone(std::vector<LatticeVector>{{-1}})});
}

TEST_CASE("validate_fan") {
    const auto ad = build_root_datum({Family::A, 2}, LatticeKind::Adjoint);
    const auto r1 = validate_fan(ad, weyl_chamber_fan(ad));
    CHECK(r1.smooth);
    CHECK(r1.complete);
    CHECK(r1.w_invariant);
    CHECK(r1.refines_chambers);
    CHECK(r1.max_cone_count == 6);
    CHECK(r1.cones_in_negative_chamber == 1);

    const auto sc = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const auto r2 = validate_fan(sc, weyl_chamber_fan(sc));
    CHECK_FALSE(r2.smooth);
    CHECK(r2.complete);

    const auto r3 = validate_fan(sc, bisected_sl3_fan(sc));
    CHECK(r3.admissible());
    CHECK(r3.max_cone_count == 12);
    CHECK(r3.cones_in_negative_chamber == 2);

    // P^2 is complete and smooth but not W-invariant and does not refine chambers.
    const auto r4 = validate_fan(ad, testing_support::projective_plane_fan());
    CHECK(r4.smooth);
    CHECK(r4.complete);
    CHECK_FALSE(r4.w_invariant);
    CHECK_FALSE(r4.refines_chambers);

    // Half of the chamber fan is not complete.
    const Fan omega_only = fan_from_cones(2, cones_in_negative_chamber(ad, weyl_chamber_fan(ad)));
    CHECK_FALSE(validate_fan(ad, omega_only).complete);

    CHECK(kind_of([&] { validate_fan(ad, testing_support::p1_fan()); }) == ErrorKind::MalformedFan);
}

TEST_CASE("wonderful fan is smooth for every supported type") {
    for (auto ct : {CartanType{Family::A, 3}, CartanType{Family::B, 2}, CartanType{Family::B, 3}, CartanType{Family::C, 3},
                    CartanType{Family::G, 2}}) {
        const auto rd = build_root_datum(ct, LatticeKind::Adjoint);
        CAPTURE(to_string(ct));
        const auto report = validate_fan(rd, weyl_chamber_fan(rd));
        CHECK(report.admissible());
        CHECK(report.max_cone_count == rd.weyl_group().size());
    }
}

TEST_CASE("stellar_subdivide") {
    const auto sc = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan chambers = weyl_chamber_fan(sc);
    const Fan sub = stellar_subdivide(sc, chambers, IntVector{-1, -1});
    CHECK(sub.size() == 7);
    const auto omega = cone_sets(fan_from_cones(2, cones_in_negative_chamber(sc, sub)));
    CHECK(omega == std::set<std::set<LatticeVector>>{{{-2, -1}, {-1, -1}}, {{-1, -1}, {-1, -2}}});

    // Subdividing at an existing ray changes nothing.
    CHECK(stellar_subdivide(chambers, IntVector{-2, -1}).same_cones(chambers));
    // Non-primitive input is normalized.
    CHECK(stellar_subdivide(chambers, IntVector{-3, -3}).same_cones(sub));

    const Fan half_plane(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}, {1, 2}});
    CHECK(kind_of([&] { stellar_subdivide(half_plane, IntVector{5, -5}); }) == ErrorKind::RayOutsideSupport);
    CHECK(kind_of([&] { stellar_subdivide(half_plane, IntVector{0, 0}); }) == ErrorKind::ZeroVector);

    // Ray on a wall splits both neighbours.
    const Fan p2 = testing_support::projective_plane_fan();
    const Fan split = stellar_subdivide(p2, IntVector{1, 1});
    CHECK(split.size() == 4);
    CHECK(is_complete(split));
}

TEST_CASE("stellar_subdivide preserves completeness and grows the fan") {
    std::mt19937_64 rng(5);
    const Fan base = testing_support::hirzebruch_fan(2);
    Fan f = base;
    std::uniform_int_distribution<Int> d(-4, 4);
    for (int step = 0; step < 30; ++step) {
        IntVector v{d(rng), d(rng)};
        if (is_zero(v)) continue;
        const bool existing = std::find(f.rays().begin(), f.rays().end(), primitive(v)) != f.rays().end();
        const Fan next = stellar_subdivide(f, v);
        CHECK(is_complete(next));
        CHECK(faces_ok(next));
        if (existing) CHECK(next.same_cones(f));
        else CHECK(next.size() > f.size());
        f = next;
    }
}

TEST_CASE("stellar_subdivide preserves the support of an incomplete fan") {
    const auto sc = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan omega = fan_from_cones(2, cones_in_negative_chamber(sc, weyl_chamber_fan(sc)));
    auto in_support = [](const Fan& f, const IntVector& x) {
        for (std::size_t c = 0; c < f.size(); ++c)
            if (f.cone(c).contains(x)) return true;
        return false;
    };
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> d(-6, 6);
    Fan f = omega;
    for (const IntVector& ray : {IntVector{-1, -1}, IntVector{-3, -2}, IntVector{-5, -4}, IntVector{-2, -3}}) {
        const Fan next = stellar_subdivide(sc, f, ray);
        CHECK(next.size() == f.size() + 1);
        for (int trial = 0; trial < 200; ++trial) {
            const IntVector x{d(rng), d(rng)};
            CHECK(in_support(next, x) == in_support(omega, x));
        }
        f = next;
    }
    CHECK(kind_of([&] { stellar_subdivide(sc, f, IntVector{1, 1}); }) == ErrorKind::RayOutsideSupport);
}

TEST_CASE("symmetrize") {
    const auto sc = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan two = fan_from_cones(2, {Cone({{-2, -1}, {-1, -1}}), Cone({{-1, -1}, {-1, -2}})});
    const Fan twelve = symmetrize(sc, two);
    CHECK(twelve.size() == 12);
    CHECK(validate_fan(sc, twelve).admissible());

    const Fan chambers = weyl_chamber_fan(sc);
    CHECK(symmetrize(sc, chambers).same_cones(chambers));
    CHECK(symmetrize(sc, twelve).same_cones(twelve));

    // The subdivided chamber fan symmetrizes to the same twelve cones.
    CHECK(symmetrize(sc, stellar_subdivide(chambers, IntVector{-1, -1})).same_cones(twelve));

    // Ω merged with its s1-neighbour straddles a wall.
    const auto ad = build_root_datum({Family::A, 2}, LatticeKind::Adjoint);
    const Fan straddle = fan_from_cones(2, {Cone({{-1, 0}, {1, -1}})});
    CHECK(kind_of([&] { symmetrize(ad, straddle); }) == ErrorKind::NotRefinement);
}

TEST_CASE("s = k|W| on random admissible fans") {
    std::mt19937_64 rng(42);
    for (auto ct : {CartanType{Family::A, 1}, CartanType{Family::A, 2}, CartanType{Family::B, 2}})
        for (auto lk : {LatticeKind::SimplyConnected, LatticeKind::Adjoint})
            for (int steps = 0; steps <= 3; ++steps) {
                const auto rd = build_root_datum(ct, lk);
                const Fan f = testing_support::random_admissible_fan(rd, steps, rng);
                const auto report = validate_fan(rd, f);
                CAPTURE(to_string(ct));
                CHECK(report.admissible());
                CHECK(report.max_cone_count == report.cones_in_negative_chamber * rd.weyl_group().size());
                CHECK(symmetrize(rd, f).same_cones(f));
            }
}
