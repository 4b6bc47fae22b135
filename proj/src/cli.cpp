#include "toromotive/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "toromotive/error.hpp"
#include "toromotive/fan.hpp"
#include "toromotive/motivic.hpp"
#include "toromotive/poincare.hpp"
#include "toromotive/spec_file.hpp"

namespace toromotive::cli {

using nlohmann::json;

namespace {

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
    std::vector<Int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const char* first = text.data() + start;
        const char* last = text.data() + comma;
        Int value = 0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc{} || ptr != last)
            throw ParseError(std::string(what) + ": '" + text + "' is not a comma-separated list of integers");
        out.push_back(value);
        start = comma + 1;
    }
    return out;
}

struct Invocation {
    std::string command;
    json input = json::object();
    bool pretty = false;
};

std::string render(const json& j) { return j.dump(2) + "\n"; }

int emit_ok(std::ostream& out, const Invocation& inv, const json& result) {
    json report = {{"command", inv.command},
                   {"input_digest", digest(inv.command + "\n" + inv.input.dump())},
                   {"status", "ok"},
                   {"result", result}};
    out << render(report);
    return kOk;
}

int emit_error(std::ostream& out, const Invocation& inv, std::string_view kind, const std::string& message, int code,
               const json* attachment = nullptr) {
    json report = {{"command", inv.command}, {"status", "error"}, {"error", {{"kind", kind}, {"message", message}}}};
    if (!inv.input.empty()) report["input_digest"] = digest(inv.command + "\n" + inv.input.dump());
    if (attachment) report["report"] = *attachment;
    out << render(report);
    return code;
}

RootDatum datum_from_options(const std::string& family, int rank, const std::string& lattice) {
    if (family.size() != 1) throw ParseError("--family must be a single letter A-G");
    return build_root_datum({parse_family(family[0]), rank}, parse_lattice(lattice));
}

json spec_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream o(path);
    if (!o || !(o << text)) throw ParseError("cannot write '" + path + "'");
}

std::string pretty_decomposition(const MotivicDecomposition& dec) {
    std::string s = "M(X) = R";
    for (const auto& [shift, m] : dec.sb_multiplicities) {
        s += " + M(S)(" + std::to_string(shift) + ")";
        if (m != 1) s += "^" + std::to_string(m);
    }
    std::string shifts;
    for (Int b : dec.rost_shifts) shifts += (shifts.empty() ? "" : ", ") + std::to_string(b);
    return s + "\nR = Tate shifts {" + shifts + "}\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"Poincare polynomials of toroidal compactifications and motivic decompositions of SL_1(D)",
                 "toromotive"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Render polynomials in t-notation for humans");

    std::string family = "A", lattice = "simply_connected", spec_path, output_path, ray_text, coeffs_text;
    int rank = 0;
    Int p = 0;
    int rost_degree = 3;
    bool torsor = false, symmetrize_flag = false;

    auto* poincare = app.add_subcommand("poincare", "Generating polynomials");
    poincare->require_subcommand(1);
    auto* p_flag = poincare->add_subcommand("flag", "Flag variety G/B");
    p_flag->add_option("--family", family, "Cartan family A-G")->required();
    p_flag->add_option("--rank", rank, "Rank")->required();
    p_flag->add_option("--lattice", lattice, "simply_connected or adjoint");
    auto* p_toric = poincare->add_subcommand("toric", "Smooth complete toric variety");
    p_toric->add_option("spec", spec_path, "Spec file")->required();
    auto* p_comp = poincare->add_subcommand("compactification", "Smooth toroidal compactification");
    p_comp->add_option("spec", spec_path, "Spec file")->required();

    auto* dec = app.add_subcommand("decompose", "Split P = P_R + m(t) P_S");
    dec->add_option("--p", p, "Prime degree")->required();
    dec->add_option("--coeffs", coeffs_text, "Comma-separated coefficients, ascending degree")->required();
    dec->add_option("--n", rost_degree, "Rost degree (default 3)");

    auto* chow = app.add_subcommand("chow-ring", "Chow ring of SL_1(D)");
    chow->add_option("--p", p, "Prime degree")->required();
    chow->add_flag("--torsor", torsor, "Chow ring of a nonsplit torsor (characteristic 0)");

    auto* fan_cmd = app.add_subcommand("fan", "Fan utilities");
    fan_cmd->require_subcommand(1);
    auto* f_check = fan_cmd->add_subcommand("check", "Validate a fan");
    f_check->add_option("spec", spec_path, "Spec file")->required();
    auto* f_chambers = fan_cmd->add_subcommand("chambers", "Weyl chamber fan");
    f_chambers->add_option("--family", family, "Cartan family A-G")->required();
    f_chambers->add_option("--rank", rank, "Rank")->required();
    f_chambers->add_option("--lattice", lattice, "simply_connected or adjoint");
    f_chambers->add_option("-o,--output", output_path, "Write the spec file here");
    auto* f_sub = fan_cmd->add_subcommand("subdivide", "Stellar subdivision");
    f_sub->add_option("spec", spec_path, "Spec file")->required();
    f_sub->add_option("--ray", ray_text, "Comma-separated cocharacter")->required();
    f_sub->add_flag("--symmetrize", symmetrize_flag, "Close the result under the Weyl group");
    f_sub->add_option("-o,--output", output_path, "Write the spec file here");

    // "--ray -1,-1" would otherwise be read as a short option.
    std::vector<std::string> argv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if ((args[i] == "--ray" || args[i] == "--coeffs") && i + 1 < args.size() && args[i + 1].starts_with("-")) {
            argv.push_back(args[i] + "=" + args[i + 1]);
            ++i;
        } else {
            argv.push_back(args[i]);
        }
    }
    std::reverse(argv.begin(), argv.end());

    Invocation inv;
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        inv.command = "toromotive";
        return emit_error(out, inv, "ParseError", e.what(), kInputError);
    }
    inv.pretty = pretty;

    try {
        if (p_flag->parsed()) {
            inv.command = "poincare flag";
            inv.input = {{"family", family}, {"rank", rank}, {"lattice", lattice}};
            const auto poly = flag_poincare(datum_from_options(family, rank, lattice));
            if (pretty) {
                out << "P(t) = " << poly.pretty() << "\n";
                return kOk;
            }
            return emit_ok(out, inv, {{"coeffs", to_json(poly)}});
        }
        if (p_toric->parsed() || p_comp->parsed()) {
            inv.command = p_toric->parsed() ? "poincare toric" : "poincare compactification";
            inv.input = {{"spec", spec_input(spec_path)}};
            const SpecFile spec = parse_spec(inv.input["spec"]);
            if (p_toric->parsed()) {
                const auto poly = spec.root_datum ? toric_poincare(*spec.root_datum, spec.fan) : toric_poincare(spec.fan);
                if (pretty) {
                    out << "P(t) = " << poly.pretty() << "\n";
                    return kOk;
                }
                return emit_ok(out, inv, {{"coeffs", to_json(poly)}});
            }
            if (!spec.root_datum) throw ParseError("compactification needs a root_datum in the spec file");
            const RootDatum& rd = *spec.root_datum;
            const auto factored = compactification_poincare(rd, spec.fan);
            const FanReport report = validate_fan(rd, spec.fan);
            const std::uint64_t fixed = fixed_point_count(rd, spec.fan);
            if (pretty) {
                out << "P(t) = (" << factored.first_factor.pretty() << ")(" << factored.flag_factor.pretty() << ")\n"
                    << "     = " << factored.product.pretty() << "\n"
                    << "s = " << report.max_cone_count << ", k = " << report.cones_in_negative_chamber
                    << ", fixed points = " << fixed << "\n";
                return kOk;
            }
            return emit_ok(out, inv,
                           {{"coeffs", to_json(factored.product)},
                            {"factored", {{"first", to_json(factored.first_factor)}, {"flag", to_json(factored.flag_factor)}}},
                            {"s", report.max_cone_count},
                            {"k", report.cones_in_negative_chamber},
                            {"fixed_points", fixed}});
        }
        if (dec->parsed()) {
            inv.command = "decompose";
            const auto coeffs = parse_int_list(coeffs_text, "--coeffs");
            inv.input = {{"p", p}, {"n", rost_degree}, {"coeffs", coeffs}};
            if (std::any_of(coeffs.begin(), coeffs.end(), [](Int c) { return c < 0; }))
                throw ParseError("--coeffs must be nonnegative");
            const auto d = decompose(PoincarePolynomial(coeffs), p, rost_degree);
            if (pretty) {
                out << pretty_decomposition(d);
                return kOk;
            }
            return emit_ok(out, inv, to_json(d));
        }
        if (chow->parsed()) {
            inv.command = "chow-ring";
            inv.input = {{"p", p}, {"torsor", torsor}};
            const auto ring = torsor ? chow_torsor(p) : chow_ring_sl1(p);
            if (pretty) {
                for (const auto& [degree, group] : ring.components)
                    out << "CH^" << degree << " = " << group.to_string() << "\n";
                for (const auto& r : ring.relations) out << r << "\n";
                if (!ring.note.empty()) out << "(" << ring.note << ")\n";
                return kOk;
            }
            return emit_ok(out, inv, to_json(ring));
        }
        if (f_check->parsed()) {
            inv.command = "fan check";
            inv.input = {{"spec", spec_input(spec_path)}};
            const SpecFile spec = parse_spec(inv.input["spec"]);
            if (!spec.root_datum) throw ParseError("fan check needs a root_datum in the spec file");
            const FanReport report = validate_fan(*spec.root_datum, spec.fan);
            const json payload = to_json(report);
            if (!report.admissible())
                return emit_error(out, inv, "FanNotAdmissible", "fan failed validation", kDomainError, &payload);
            return emit_ok(out, inv, payload);
        }
        if (f_chambers->parsed() || f_sub->parsed()) {
            std::optional<RootDatum> rd;
            std::optional<Fan> fan;
            if (f_chambers->parsed()) {
                inv.command = "fan chambers";
                inv.input = {{"family", family}, {"rank", rank}, {"lattice", lattice}};
                rd = datum_from_options(family, rank, lattice);
                fan = weyl_chamber_fan(*rd);
            } else {
                inv.command = "fan subdivide";
                const auto ray = parse_int_list(ray_text, "--ray");
                inv.input = {{"spec", spec_input(spec_path)}, {"ray", ray}, {"symmetrize", symmetrize_flag}};
                SpecFile spec = parse_spec(inv.input["spec"]);
                rd = spec.root_datum;
                fan = stellar_subdivide(spec.fan, ray);
                if (symmetrize_flag) {
                    if (!rd) throw ParseError("--symmetrize needs a root_datum in the spec file");
                    fan = symmetrize(*rd, *fan);
                }
            }
            const json spec_json = spec_to_json(rd, *fan);
            if (output_path.empty()) {
                out << render(spec_json);
                return kOk;
            }
            write_file(output_path, render(spec_json));
            json result = {{"written", output_path}, {"max_cones", fan->size()}};
            if (rd) result["report"] = to_json(validate_fan(*rd, *fan));
            return emit_ok(out, inv, result);
        }
    } catch (const ParseError& e) {
        return emit_error(out, inv, "ParseError", e.what(), kInputError);
    } catch (const Error& e) {
        return emit_error(out, inv, e.kind_name(), e.what(), kDomainError);
    }
    return emit_error(out, inv, "ParseError", "no command given", kInputError);
}

}  // namespace toromotive::cli
