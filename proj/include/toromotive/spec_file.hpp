#pragma once

// JSON spec files and report payloads shared by the CLI and the Python
// module.
//
// Spec file:
//   {
//     "coordinates": "simple_coroot_basis" | "fundamental_coweight_basis" | "standard_basis",
//     "root_datum": {"family": "A", "rank": 2, "lattice": "simply_connected" | "adjoint"},   (optional)
//     "fan": {"rays": [[-1, -1], ...], "max_cones": [[0, 1], ...]}
//   }
// Rays are cocharacters. "coordinates" must agree with the lattice: simply
// connected data use the simple-coroot basis, adjoint data the
// fundamental-coweight basis, and pure toric files (no root datum) the
// standard basis.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "toromotive/fan.hpp"
#include "toromotive/motivic.hpp"
#include "toromotive/poincare.hpp"
#include "toromotive/root_datum.hpp"

namespace toromotive {

/// Input that cannot be read as a spec file (exit code 2 in the CLI).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpecFile {
    std::optional<RootDatum> root_datum;
    Fan fan;
};

LatticeKind parse_lattice(const std::string& name);
std::string lattice_name(LatticeKind kind);
std::string coordinates_name(const std::optional<RootDatum>& rd);

/// Throws ParseError for schema violations and MalformedFan (Error) for
/// structurally invalid fans.
SpecFile parse_spec(const nlohmann::json& j);
SpecFile read_spec_file(const std::string& path);

nlohmann::json spec_to_json(const std::optional<RootDatum>& rd, const Fan& fan);

nlohmann::json to_json(const FanReport& report);
nlohmann::json to_json(const PoincarePolynomial& poly);
nlohmann::json to_json(const MotivicDecomposition& dec);
nlohmann::json to_json(const ChowRingPresentation& ring);

/// 64-bit FNV-1a digest of a string, as "fnv1a64:<hex>".
std::string digest(const std::string& text);

}  // namespace toromotive
