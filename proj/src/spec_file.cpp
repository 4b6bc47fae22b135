#include "toromotive/spec_file.hpp"

#include <cstdio>
#include <fstream>

#include "toromotive/error.hpp"

namespace toromotive {

using nlohmann::json;

LatticeKind parse_lattice(const std::string& name) {
    if (name == "simply_connected") return LatticeKind::SimplyConnected;
    if (name == "adjoint") return LatticeKind::Adjoint;
    throw ParseError("unknown lattice '" + name + "' (expected simply_connected or adjoint)");
}

std::string lattice_name(LatticeKind kind) {
    return kind == LatticeKind::SimplyConnected ? "simply_connected" : "adjoint";
}

std::string coordinates_name(const std::optional<RootDatum>& rd) {
    if (!rd) return "standard_basis";
    return rd->lattice() == LatticeKind::SimplyConnected ? "simple_coroot_basis" : "fundamental_coweight_basis";
}

namespace {

const json& field(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(where) + ": missing field '" + key + "'");
    return j.at(key);
}

Int integer(const json& j, const char* where) {
    if (!j.is_number_integer()) throw ParseError(std::string(where) + ": expected an integer");
    return j.get<Int>();
}

}  // namespace

SpecFile parse_spec(const json& j) {
    if (!j.is_object()) throw ParseError("spec file must be a JSON object");
    const json& coords = field(j, "coordinates", "spec");
    if (!coords.is_string()) throw ParseError("spec: 'coordinates' must be a string");

    std::optional<RootDatum> rd;
    if (j.contains("root_datum")) {
        const json& r = j.at("root_datum");
        const json& family = field(r, "family", "root_datum");
        if (!family.is_string() || family.get<std::string>().size() != 1)
            throw ParseError("root_datum: 'family' must be a single letter");
        const Int rank = integer(field(r, "rank", "root_datum"), "root_datum.rank");
        if (rank < 1 || rank > 64) throw Error(ErrorKind::InvalidRank, "rank out of range");
        const json& lattice = field(r, "lattice", "root_datum");
        if (!lattice.is_string()) throw ParseError("root_datum: 'lattice' must be a string");
        rd.emplace(build_root_datum({parse_family(family.get<std::string>()[0]), static_cast<int>(rank)},
                                    parse_lattice(lattice.get<std::string>())));
    }
    if (coords.get<std::string>() != coordinates_name(rd))
        throw ParseError("spec: coordinates '" + coords.get<std::string>() + "' do not match the root datum (expected '" +
                         coordinates_name(rd) + "')");

    const json& fan = field(j, "fan", "spec");
    const json& rays = field(fan, "rays", "fan");
    const json& cones = field(fan, "max_cones", "fan");
    if (!rays.is_array() || !cones.is_array()) throw ParseError("fan: 'rays' and 'max_cones' must be arrays");

    std::vector<LatticeVector> ray_list;
    for (const auto& r : rays) {
        if (!r.is_array()) throw ParseError("fan.rays: each ray must be an array of integers");
        LatticeVector v;
        for (const auto& x : r) v.push_back(integer(x, "fan.rays"));
        ray_list.push_back(std::move(v));
    }
    std::vector<ConeIndices> cone_list;
    for (const auto& c : cones) {
        if (!c.is_array()) throw ParseError("fan.max_cones: each cone must be an array of ray indices");
        ConeIndices idx;
        for (const auto& x : c) {
            const Int i = integer(x, "fan.max_cones");
            if (i < 0) throw Error(ErrorKind::MalformedFan, "negative ray index");
            idx.push_back(static_cast<std::size_t>(i));
        }
        cone_list.push_back(std::move(idx));
    }
    std::size_t rank = rd ? rd->rank() : (ray_list.empty() ? 0 : ray_list.front().size());
    if (j.contains("rank")) rank = static_cast<std::size_t>(integer(j.at("rank"), "rank"));
    return SpecFile{std::move(rd), Fan(rank, std::move(ray_list), std::move(cone_list))};
}

SpecFile read_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
    return parse_spec(j);
}

json spec_to_json(const std::optional<RootDatum>& rd, const Fan& fan) {
    json j;
    j["coordinates"] = coordinates_name(rd);
    if (rd) {
        j["root_datum"] = {{"family", std::string(1, family_letter(rd->cartan_type().family))},
                           {"rank", rd->rank()},
                           {"lattice", lattice_name(rd->lattice())}};
    }
    j["fan"] = {{"rays", fan.rays()}, {"max_cones", fan.max_cones()}};
    return j;
}

json to_json(const FanReport& r) {
    return {{"simplicial", r.simplicial},
            {"smooth", r.smooth},
            {"complete", r.complete},
            {"faces_ok", r.faces_ok},
            {"w_invariant", r.w_invariant},
            {"refines_chambers", r.refines_chambers},
            {"s", r.max_cone_count},
            {"k", r.cones_in_negative_chamber}};
}

json to_json(const PoincarePolynomial& poly) {
    return poly.coeffs();
}

json to_json(const MotivicDecomposition& dec) {
    json sb = json::object();
    for (const auto& [shift, m] : dec.sb_multiplicities) sb[std::to_string(shift)] = m;
    return {{"p", dec.p}, {"n", dec.n}, {"rost_shifts", dec.rost_shifts}, {"sb", sb}, {"sb_total", dec.total_sb_copies()}};
}

json to_json(const ChowRingPresentation& ring) {
    json j = json::object();
    for (const auto& [degree, group] : ring.components) j[std::to_string(degree)] = group.to_string();
    if (!ring.relations.empty()) j["relations"] = ring.relations;
    if (!ring.note.empty()) j["note"] = ring.note;
    return j;
}

std::string digest(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

}  // namespace toromotive
