#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "toromotive/cli.hpp"
#include "toromotive/error.hpp"
#include "toromotive/fan.hpp"
#include "toromotive/motivic.hpp"
#include "toromotive/poincare.hpp"
#include "toromotive/spec_file.hpp"

namespace py = pybind11;
using namespace toromotive;

namespace {

using Rays = std::vector<std::vector<Int>>;
using Cones = std::vector<std::vector<std::size_t>>;

RootDatum datum(const std::string& family, int rank, const std::string& lattice) {
    if (family.size() != 1) throw Error(ErrorKind::InvalidRank, "family must be a single letter A-G");
    return build_root_datum({parse_family(family[0]), rank}, parse_lattice(lattice));
}

py::dict report_dict(const FanReport& r) {
    py::dict d;
    d["simplicial"] = r.simplicial;
    d["smooth"] = r.smooth;
    d["complete"] = r.complete;
    d["faces_ok"] = r.faces_ok;
    d["w_invariant"] = r.w_invariant;
    d["refines_chambers"] = r.refines_chambers;
    d["s"] = r.max_cone_count;
    d["k"] = r.cones_in_negative_chamber;
    return d;
}

py::dict ring_dict(const ChowRingPresentation& ring) {
    py::dict groups;
    for (const auto& [deg, g] : ring.components) groups[py::int_(deg)] = g.to_string();
    py::dict d;
    d["p"] = ring.p;
    d["generator_degree"] = ring.generator_degree;
    d["groups"] = groups;
    d["relations"] = ring.relations;
    d["note"] = ring.note;
    return d;
}

py::tuple fan_tuple(const Fan& f) { return py::make_tuple(f.rays(), f.max_cones()); }

}  // namespace

PYBIND11_MODULE(_toromotive, m) {
    m.doc() = "Poincare polynomials of toroidal compactifications and motivic decompositions of SL_1(D).";

    // ValueError subclass carrying the error kind as `.kind`. Intentionally
    // never released: translators may run until interpreter shutdown.
    static PyObject* error_type = PyErr_NewException("toromotive.ToromotiveError", PyExc_ValueError, nullptr);
    m.attr("ToromotiveError") = py::handle(error_type);
    py::register_exception_translator([](std::exception_ptr p) {
        auto raise = [](const char* message, const std::string& kind) {
            py::object exc = py::handle(error_type)(message);
            exc.attr("kind") = kind;
            PyErr_SetObject(error_type, exc.ptr());
        };
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            raise(e.what(), std::string(e.kind_name()));
        } catch (const ParseError& e) {
            raise(e.what(), "ParseError");
        }
    });

    m.def(
        "flag_poincare",
        [](const std::string& family, int rank, const std::string& lattice) {
            return flag_poincare(datum(family, rank, lattice)).coeffs();
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice") = "simply_connected",
        "Coefficients of sum_w t^l(w), ascending degree.");

    m.def(
        "toric_poincare",
        [](const Rays& rays, const Cones& cones) {
            const std::size_t rank = rays.empty() ? 0 : rays.front().size();
            return toric_poincare(Fan(rank, rays, cones)).coeffs();
        },
        py::arg("rays"), py::arg("max_cones"), "Poincare polynomial of a smooth complete toric variety.");

    m.def(
        "weyl_chamber_fan",
        [](const std::string& family, int rank, const std::string& lattice) {
            return fan_tuple(weyl_chamber_fan(datum(family, rank, lattice)));
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice") = "simply_connected",
        "(rays, max_cones) of the Weyl chamber fan, in cocharacter coordinates.");

    m.def(
        "validate_fan",
        [](const std::string& family, int rank, const std::string& lattice, const Rays& rays, const Cones& cones) {
            const auto rd = datum(family, rank, lattice);
            return report_dict(validate_fan(rd, Fan(rd.rank(), rays, cones)));
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice"), py::arg("rays"), py::arg("max_cones"));

    m.def(
        "subdivide",
        [](const std::string& family, int rank, const std::string& lattice, const Rays& rays, const Cones& cones,
           const std::vector<Int>& ray, bool symmetrize_result) {
            const auto rd = datum(family, rank, lattice);
            Fan f = stellar_subdivide(rd, Fan(rd.rank(), rays, cones), ray);
            if (symmetrize_result) f = symmetrize(rd, f);
            return fan_tuple(f);
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice"), py::arg("rays"), py::arg("max_cones"), py::arg("ray"),
        py::arg("symmetrize") = false, "Stellar subdivision at `ray`, optionally closed under the Weyl group.");

    m.def(
        "compactification_poincare",
        [](const std::string& family, int rank, const std::string& lattice, const Rays& rays, const Cones& cones) {
            const auto rd = datum(family, rank, lattice);
            const Fan f(rd.rank(), rays, cones);
            FactoredPoincare res;
            {
                py::gil_scoped_release release;
                res = compactification_poincare(rd, f);
            }
            const auto report = validate_fan(rd, f);
            py::dict d;
            d["coeffs"] = res.product.coeffs();
            d["first"] = res.first_factor.coeffs();
            d["flag"] = res.flag_factor.coeffs();
            d["s"] = report.max_cone_count;
            d["k"] = report.cones_in_negative_chamber;
            d["fixed_points"] = fixed_point_count(rd, f);
            return d;
        },
        py::arg("family"), py::arg("rank"), py::arg("lattice"), py::arg("rays"), py::arg("max_cones"));

    m.def("rost_polynomial", [](Int p, int n) { return rost_polynomial(p, n).coeffs(); }, py::arg("p"), py::arg("n") = 3);
    m.def("severi_brauer_polynomial", [](Int p) { return severi_brauer_polynomial(p).coeffs(); }, py::arg("p"));
    m.def("sb_copy_count", &sb_copy_count, py::arg("s"), py::arg("p"));

    m.def(
        "decompose",
        [](const std::vector<Int>& coeffs, Int p, int n) {
            const auto dec = decompose(PoincarePolynomial(coeffs), p, n);
            py::dict d;
            d["p"] = dec.p;
            d["n"] = dec.n;
            d["rost_shifts"] = dec.rost_shifts;
            d["sb"] = dec.sb_multiplicities;
            d["sb_total"] = dec.total_sb_copies();
            return d;
        },
        py::arg("coeffs"), py::arg("p"), py::arg("n") = 3,
        "Split P = P_R + m(t) P_S; returns the Rost shifts and the multiplicities m_j.");

    m.def("chow_ring_sl1", [](Int p) { return ring_dict(chow_ring_sl1(p)); }, py::arg("p"));
    m.def("chow_torsor", [](Int p) { return ring_dict(chow_torsor(p)); }, py::arg("p"));
    m.def("diagonal_pairs", &diagonal_pairs, py::arg("p"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            const int code = cli::run(args, out);
            return py::make_tuple(code, out.str());
        },
        py::arg("args"), "Run the command-line interface in-process; returns (exit_code, output).");
}
