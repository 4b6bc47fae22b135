// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "fan_gen.hpp"
#include "oracle.hpp"
#include "toromotive/fan.hpp"
#include "toromotive/motivic.hpp"
#include "toromotive/poincare.hpp"

using namespace toromotive;
using Coeffs = std::vector<Int>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string show(const std::vector<Int>& v) {
    std::ostringstream s;
    s << "[";
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    s << "]";
    return s.str();
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome bisected_sl3() {
    Outcome o;
    const auto start = Clock::now();
    const auto rd = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan f = testing_support::bisected_sl3_fan(rd);
    const auto res = compactification_poincare(rd, f);
    const auto report = validate_fan(rd, f);
    const auto fixed = fixed_point_count(rd, f);
    const double elapsed = seconds_since(start);
    o.require(res.first_factor.coeffs() == Coeffs{1, 1, 4, 4, 1, 1}, "first factor " + show(res.first_factor.coeffs()));
    o.require(res.flag_factor.coeffs() == Coeffs{1, 2, 2, 1}, "flag factor " + show(res.flag_factor.coeffs()));
    o.require(res.product.coeffs() == Coeffs{1, 3, 8, 15, 18, 15, 8, 3, 1}, "product " + show(res.product.coeffs()));
    o.require(report.max_cone_count == 12 && report.cones_in_negative_chamber == 2, "s/k");
    o.require(fixed == 72, "fixed points " + std::to_string(fixed));
    o.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s");
    if (o.ok) o.detail = "product " + show(res.product.coeffs()) + ", s=12, k=2, 72 fixed points, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome nine_term_decomposition() {
    Outcome o;
    const auto dec = decompose(PoincarePolynomial({1, 1, 2, 3, 4, 3, 2, 1, 1}), 3);
    o.require(dec.rost_shifts == Coeffs{0, 4, 8}, "rost shifts " + show(dec.rost_shifts));
    o.require(dec.sb_multiplicities == std::map<int, Int>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, "multiplicities");
    if (o.ok) o.detail = "R shifts {0,4,8}, M(S) shifts {1,2,3,4,5} each once";
    return o;
}

Outcome toroidal_decomposition() {
    Outcome o;
    const auto rd = build_root_datum({Family::A, 2}, LatticeKind::SimplyConnected);
    const Fan f = testing_support::bisected_sl3_fan(rd);
    const auto product = compactification_poincare(rd, f).product;
    const auto dec = decompose(product, 3);
    o.require(dec.sb_multiplicities == std::map<int, Int>{{1, 3}, {2, 5}, {3, 7}, {4, 5}, {5, 3}}, "multiplicities");
    o.require(dec.total_sb_copies() == 23, "total " + std::to_string(dec.total_sb_copies()));
    o.require(sb_copy_count(static_cast<Int>(f.size()), 3) == 23, "s(p-1)!-1");
    if (o.ok) o.detail = "{1:3,2:5,3:7,4:5,5:3}, total 23 = 12*2!-1";
    return o;
}

Outcome chow_tables() {
    Outcome o;
    for (Int p : {2, 3, 5, 7}) {
        const auto ring = chow_ring_sl1(p);
        std::map<int, GroupDescriptor> expected{{0, {GroupDescriptor::Kind::Free, 1}}};
        for (Int j = 1; j <= p - 1; ++j)
            expected[static_cast<int>((p + 1) * j)] = {GroupDescriptor::Kind::Torsion, p};
        o.require(ring.components == expected, "p=" + std::to_string(p));
    }
    if (o.ok) o.detail = "p in {2,3,5,7}";
    return o;
}

struct Sample {
    RootDatum rd;
    Fan fan;
};

// Distinct admissible fans on A1 and A2 in both lattices.
std::vector<Sample> oracle_samples() {
    std::vector<Sample> out;
    std::mt19937_64 rng(20240601);
    for (auto ct : {CartanType{Family::A, 1}, CartanType{Family::A, 2}})
        for (auto lk : {LatticeKind::SimplyConnected, LatticeKind::Adjoint}) {
            const auto rd = build_root_datum(ct, lk);
            std::vector<std::vector<LatticeVector>> seen_rays;
            const std::size_t want = ct.rank == 1 ? 1 : 12;
            for (int attempt = 0; attempt < 400 && seen_rays.size() < want; ++attempt) {
                const Fan f = testing_support::random_admissible_fan(rd, attempt % 5, rng).canonical();
                bool fresh = true;
                for (std::size_t i = 0; i < seen_rays.size(); ++i)
                    if (seen_rays[i] == f.rays()) fresh = false;
                if (!fresh) continue;
                seen_rays.push_back(f.rays());
                out.push_back({rd, f});
            }
        }
    return out;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto start = Clock::now();
    const auto samples = oracle_samples();
    o.require(samples.size() >= 20, "only " + std::to_string(samples.size()) + " fans");
    for (const auto& [rd, f] : samples) {
        o.require(validate_fan(rd, f).admissible(), "generated fan is not admissible");
        const auto lib = compactification_poincare(rd, f).product.coeffs();
        const auto ref = oracle::compactification_fixed_points(rd, f);
        o.require(lib == ref, "compactification " + show(lib) + " vs oracle " + show(ref));
    }
    const std::vector<std::pair<std::string, Fan>> toric = {
        {"P1", testing_support::p1_fan()},
        {"P2", testing_support::projective_plane_fan()},
        {"P1xP1", testing_support::p1xp1_fan()},
        {"F1", testing_support::hirzebruch_fan(1)},
        {"F2", testing_support::hirzebruch_fan(2)},
        {"F3", testing_support::hirzebruch_fan(3)},
    };
    for (const auto& [name, f] : toric) {
        const auto lib = toric_poincare(f).coeffs();
        o.require(lib == oracle::toric_fixed_points(f), name + " vs fixed-point oracle");
        o.require(lib == oracle::toric_h_polynomial(f), name + " vs h-polynomial");
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s");
    if (o.ok)
        o.detail = std::to_string(samples.size()) + " fans + " + std::to_string(toric.size()) + " toric fans, " +
                   std::to_string(elapsed) + " s";
    return o;
}

Outcome invariant_suite() {
    Outcome o;
    auto samples = oracle_samples();
    std::mt19937_64 rng(77);
    for (auto ct : {CartanType{Family::B, 2}, CartanType{Family::G, 2}})
        for (auto lk : {LatticeKind::SimplyConnected, LatticeKind::Adjoint}) {
            const auto rd = build_root_datum(ct, lk);
            for (int steps = 0; steps < 3; ++steps) samples.push_back({rd, testing_support::random_admissible_fan(rd, steps, rng)});
        }
    {
        const auto rd = build_root_datum({Family::A, 3}, LatticeKind::Adjoint);
        samples.push_back({rd, weyl_chamber_fan(rd)});
    }
    for (const auto& [rd, f] : samples) {
        const auto report = validate_fan(rd, f);
        const auto res = compactification_poincare(rd, f);
        const auto w = static_cast<Int>(rd.weyl_group().size());
        const auto s = static_cast<Int>(report.max_cone_count);
        const auto k = static_cast<Int>(report.cones_in_negative_chamber);
        const std::string tag = to_string(rd.cartan_type()) + " " + show(res.product.coeffs());
        o.require(res.product.is_palindromic(), "not palindromic: " + tag);
        const auto div = long_divide(res.product.coeffs(), flag_poincare(rd).coeffs());
        o.require(div && div->remainder.empty(), "not divisible by the flag polynomial: " + tag);
        o.require(res.product.at_one() == s * w && s * w == k * w * w, "P(1) != s|W| = k|W|^2: " + tag);
        std::vector<std::size_t> order(rd.rank());
        std::iota(order.begin(), order.end(), std::size_t{0});
        do {
            o.require(compactification_poincare(rd, f, order).product == res.product, "basis-order dependence: " + tag);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    if (o.ok) o.detail = std::to_string(samples.size()) + " admissible fans";
    return o;
}

Outcome wonderful() {
    Outcome o;
    const auto rd = build_root_datum({Family::A, 2}, LatticeKind::Adjoint);
    const Fan f = weyl_chamber_fan(rd);
    const auto lib = compactification_poincare(rd, f).product.coeffs();
    o.require(lib == Coeffs{1, 2, 4, 7, 8, 7, 4, 2, 1}, "product " + show(lib));
    o.require(lib == oracle::compactification_fixed_points(rd, f), "oracle disagrees");
    if (o.ok) o.detail = show(lib);
    return o;
}

Outcome flag_cross_check() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const auto rd = build_root_datum({Family::A, n}, LatticeKind::SimplyConnected);
        o.require(flag_poincare(rd).coeffs() == oracle::type_a_flag(n), "A" + std::to_string(n));
    }
    if (o.ok) o.detail = "A1..A5";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 sl3 bisected-chamber compactification", bisected_sl3},
        {"2 decomposition [1,1,2,3,4,3,2,1,1], p=3", nine_term_decomposition},
        {"3 toroidal decomposition, p=3", toroidal_decomposition},
        {"4 Chow ring tables of SL_1(D)", chow_tables},
        {"5 oracle equivalence on random admissible fans", oracle_equivalence},
        {"6 invariant suite", invariant_suite},
        {"7 wonderful compactification of PGL_3", wonderful},
        {"8 flag polynomial of A_n, n <= 5", flag_cross_check},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ")\n";
        failures += o.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
