#include "toromotive/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "toromotive/error.hpp"

namespace toromotive {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorKind::MalformedFan, what);
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<ConeIndices> max_cones)
    : rank_(rank), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (rank_ == 0) malformed("fan rank must be positive");
    std::set<LatticeVector> distinct;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& r = rays_[i];
        if (r.size() != rank_) malformed("ray " + std::to_string(i) + " has length " + std::to_string(r.size()));
        if (!is_primitive(r)) malformed("ray " + std::to_string(i) + " is not primitive");
        if (!distinct.insert(r).second) malformed("ray " + std::to_string(i) + " is a duplicate");
    }
    std::set<ConeIndices> cones;
    for (std::size_t c = 0; c < max_cones_.size(); ++c) {
        auto& idx = max_cones_[c];
        const std::string name = "max cone " + std::to_string(c);
        if (idx.size() != rank_) malformed(name + " does not have " + std::to_string(rank_) + " rays");
        for (auto i : idx)
            if (i >= rays_.size()) malformed(name + " references missing ray " + std::to_string(i));
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) malformed(name + " repeats a ray");
        std::vector<IntVector> cols;
        for (auto i : idx) cols.push_back(rays_[i]);
        if (determinant(IntMatrix::from_columns(cols)) == 0) malformed(name + " is not simplicial");
        if (!cones.insert(idx).second) malformed(name + " is a duplicate");
    }
}

Cone Fan::cone(std::size_t i) const {
    std::vector<LatticeVector> rays;
    for (auto r : max_cones_.at(i)) rays.push_back(rays_[r]);
    return Cone(std::move(rays));
}

Fan Fan::canonical() const {
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < size(); ++i) cones.push_back(cone(i));
    return fan_from_cones(rank_, cones);
}

bool Fan::same_cones(const Fan& other) const {
    auto as_set = [](const Fan& f) {
        std::set<std::set<LatticeVector>> out;
        for (const auto& idx : f.max_cones()) {
            std::set<LatticeVector> c;
            for (auto i : idx) c.insert(f.rays()[i]);
            out.insert(std::move(c));
        }
        return out;
    };
    return rank_ == other.rank_ && as_set(*this) == as_set(other);
}

Fan fan_from_cones(std::size_t rank, const std::vector<Cone>& cones) {
    std::map<LatticeVector, std::size_t> index;
    for (const auto& c : cones)
        for (const auto& r : c.rays()) index.emplace(r, 0);
    std::vector<LatticeVector> rays;
    for (auto& [r, i] : index) {
        i = rays.size();
        rays.push_back(r);
    }
    std::set<ConeIndices> unique;
    for (const auto& c : cones) {
        ConeIndices idx;
        for (const auto& r : c.rays()) idx.push_back(index.at(r));
        std::sort(idx.begin(), idx.end());
        unique.insert(std::move(idx));
    }
    return Fan(rank, std::move(rays), std::vector<ConeIndices>(unique.begin(), unique.end()));
}

bool is_smooth(const Fan& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!is_unimodular(f.cone(i))) return false;
    return true;
}

bool faces_ok(const Fan& f) {
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < f.size(); ++i) cones.push_back(f.cone(i));
    for (std::size_t i = 0; i < cones.size(); ++i)
        for (std::size_t j = i + 1; j < cones.size(); ++j)
            if (!common_face(cones[i], cones[j])) return false;
    return true;
}

bool is_complete(const Fan& f) {
    if (f.size() == 0) return false;
    std::map<ConeIndices, std::vector<std::size_t>> walls;
    for (std::size_t c = 0; c < f.size(); ++c) {
        const auto& idx = f.max_cones()[c];
        for (std::size_t drop = 0; drop < idx.size(); ++drop) {
            ConeIndices facet;
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != drop) facet.push_back(idx[k]);
            walls[facet].push_back(c);
        }
    }
    std::vector<std::size_t> parent(f.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [facet, owners] : walls) {
        if (owners.size() != 2) return false;
        parent[find(owners[0])] = find(owners[1]);
    }
    for (std::size_t c = 0; c < f.size(); ++c)
        if (find(c) != find(0)) return false;
    return true;
}

Fan weyl_chamber_fan(const RootDatum& rd) {
    const std::size_t n = rd.rank();
    std::vector<IntVector> root_rows;
    for (std::size_t i = 0; i < n; ++i) root_rows.push_back(rd.simple_root(i));
    const IntMatrix roots = IntMatrix::from_rows(root_rows);

    std::vector<LatticeVector> omega;
    for (std::size_t j = 0; j < n; ++j) {
        // -ϖ_j^∨: the cocharacter pairing to -δ_ij with the simple roots.
        IntVector e(n, 0);
        e[j] = -1;
        const auto x = solve(roots, e);
        BigInt common = 1;
        for (const auto& q : *x) common = boost::multiprecision::lcm(common, boost::multiprecision::denominator(q));
        IntVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Int>(boost::multiprecision::numerator(Rational((*x)[i] * common)));
        omega.push_back(primitive(v));
    }
    std::vector<Cone> cones;
    for (const auto& w : rd.weyl_group()) {
        std::vector<LatticeVector> rays;
        for (const auto& r : omega) rays.push_back(w.cochar_matrix * r);
        cones.emplace_back(std::move(rays));
    }
    return fan_from_cones(n, cones);
}

bool in_negative_chamber(const RootDatum& rd, const Cone& c) {
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < rd.rank(); ++i)
            if (dot(rd.simple_root(i), r) > 0) return false;
    return true;
}

std::optional<std::size_t> containing_chamber(const RootDatum& rd, const Cone& c) {
    const std::size_t n = rd.rank();
    if (c.ambient_rank() != n || !c.full_dimensional())
        throw Error(ErrorKind::NotFullDimensional, "cone is not full-dimensional for this root datum");
    IntVector p(n, 0);
    for (const auto& r : c.rays())
        for (std::size_t i = 0; i < n; ++i) p[i] = checked_add(p[i], r[i]);

    // Fold the interior point p into Ω by simple reflections; u = word applied.
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix u_inverse = IntMatrix::identity(n);
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (dot(rd.simple_root(i), p) > 0) {
                const auto& t = rd.reflection_on_cocharacters(i);
                p = t * p;
                u = t * u;
                u_inverse = u_inverse * t;
                moved = true;
            }
        }
    }
    for (const auto& r : c.rays()) {
        const IntVector image = u * r;
        for (std::size_t i = 0; i < n; ++i)
            if (dot(rd.simple_root(i), image) > 0) return std::nullopt;
    }
    const auto& group = rd.weyl_group();
    for (std::size_t k = 0; k < group.size(); ++k)
        if (group[k].cochar_matrix == u_inverse) return k;
    return std::nullopt;
}

FanReport validate_fan(const RootDatum& rd, const Fan& f) {
    if (f.rank() != rd.rank())
        malformed("fan rank " + std::to_string(f.rank()) + " does not match root datum rank " + std::to_string(rd.rank()));
    FanReport report;
    report.max_cone_count = f.size();
    report.smooth = is_smooth(f);
    report.faces_ok = faces_ok(f);
    report.complete = report.faces_ok && is_complete(f);

    std::map<LatticeVector, std::size_t> ray_index;
    for (std::size_t i = 0; i < f.rays().size(); ++i) ray_index.emplace(f.rays()[i], i);
    const std::set<ConeIndices> cone_set(f.max_cones().begin(), f.max_cones().end());
    report.w_invariant = true;
    for (std::size_t s = 0; s < rd.rank() && report.w_invariant; ++s) {
        const auto& t = rd.reflection_on_cocharacters(s);
        for (const auto& idx : f.max_cones()) {
            ConeIndices image;
            for (auto r : idx) {
                auto it = ray_index.find(t * f.rays()[r]);
                if (it == ray_index.end()) break;
                image.push_back(it->second);
            }
            std::sort(image.begin(), image.end());
            if (image.size() != idx.size() || !cone_set.contains(image)) {
                report.w_invariant = false;
                break;
            }
        }
    }

    report.refines_chambers = true;
    for (std::size_t c = 0; c < f.size(); ++c) {
        const Cone cone = f.cone(c);
        if (!containing_chamber(rd, cone)) report.refines_chambers = false;
        if (in_negative_chamber(rd, cone)) ++report.cones_in_negative_chamber;
    }
    return report;
}

Fan stellar_subdivide(const Fan& f, std::span<const Int> ray) {
    if (ray.size() != f.rank()) throw Error(ErrorKind::DimensionMismatch, "ray has the wrong length");
    const LatticeVector v = primitive(ray);
    std::vector<Cone> cones;
    bool inside = false;
    for (std::size_t c = 0; c < f.size(); ++c) {
        Cone cone = f.cone(c);
        const auto lambda = cone.coefficients(v);
        const bool contains =
            lambda && std::all_of(lambda->begin(), lambda->end(), [](const Rational& q) { return q >= 0; });
        if (!contains) {
            cones.push_back(std::move(cone));
            continue;
        }
        inside = true;
        if (std::find(cone.rays().begin(), cone.rays().end(), v) != cone.rays().end()) {
            cones.push_back(std::move(cone));
            continue;
        }
        for (std::size_t i = 0; i < cone.dimension(); ++i) {
            if ((*lambda)[i] == 0) continue;
            auto rays = cone.rays();
            rays[i] = v;
            cones.emplace_back(std::move(rays));
        }
    }
    if (!inside) throw Error(ErrorKind::RayOutsideSupport, "ray lies outside the support of the fan");
    return fan_from_cones(f.rank(), cones);
}

Fan stellar_subdivide(const RootDatum& rd, const Fan& f, std::span<const Int> ray) {
    if (f.rank() != rd.rank()) malformed("fan rank does not match root datum rank");
    return stellar_subdivide(f, ray);
}

Fan symmetrize(const RootDatum& rd, const Fan& f) {
    if (f.rank() != rd.rank()) malformed("fan rank does not match root datum rank");
    std::vector<Cone> seeds;
    for (std::size_t c = 0; c < f.size(); ++c) {
        Cone cone = f.cone(c);
        if (!containing_chamber(rd, cone))
            throw Error(ErrorKind::NotRefinement, "max cone " + std::to_string(c) + " straddles a chamber wall");
        if (in_negative_chamber(rd, cone)) seeds.push_back(std::move(cone));
    }
    std::vector<Cone> orbit;
    for (const auto& w : rd.weyl_group())
        for (const auto& seed : seeds) {
            std::vector<LatticeVector> rays;
            for (const auto& r : seed.rays()) rays.push_back(w.cochar_matrix * r);
            orbit.emplace_back(std::move(rays));
        }
    return fan_from_cones(f.rank(), orbit);
}

std::vector<Cone> cones_in_negative_chamber(const RootDatum& rd, const Fan& f) {
    std::vector<Cone> out;
    for (std::size_t c = 0; c < f.size(); ++c) {
        Cone cone = f.cone(c);
        if (in_negative_chamber(rd, cone)) out.push_back(std::move(cone));
    }
    return out;
}

}  // namespace toromotive
