#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "navslip/analytic.hpp"
#include "navslip/boundary.hpp"
#include "navslip/catalog.hpp"
#include "navslip/config.hpp"
#include "navslip/error.hpp"
#include "navslip/experiments.hpp"
#include "navslip/identities.hpp"
#include "navslip/report.hpp"
#include "navslip/snapshot.hpp"
#include "navslip/solver.hpp"
#include "navslip/volume.hpp"

namespace py = pybind11;
using namespace navslip;

namespace {

// Reports cross the boundary as JSON text; Python decodes with json.loads.
template <class R>
std::string as_json(const R& r) {
    return to_json(r).dump();
}

std::array<double, 3> arr(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
Vec3 vec(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }

Surface surface_named(const std::string& name) {
    return surface_from(parse_config("surface = " + name, "<python>"));
}

CatalogParams make_params(std::uint64_t seed, int degree, double zeta) {
    CatalogParams p;
    p.seed = seed;
    p.degree = degree;
    p.zeta = zeta;
    return p;
}

} // namespace

PYBIND11_MODULE(_navslip, m) {
    m.doc() = "Navier-slip boundary geometry, div-curl identities and a channel solver";

    py::register_exception<Error>(m, "NavslipError", PyExc_RuntimeError);

    m.def("catalog_names", &catalog_names);
    m.def("robin_root", &robin_root, py::arg("zeta"), py::arg("n") = 0);
    m.def("tstar_estimate", &tstar_estimate, py::arg("er0"), py::arg("m"), py::arg("eta"));

    m.def(
        "field_value",
        [](const std::string& name, std::array<double, 3> x, std::uint64_t seed, int degree, double zeta) {
            return arr(catalog_field(name, make_params(seed, degree, zeta)).value(vec(x)));
        },
        py::arg("name"), py::arg("x"), py::arg("seed") = 42, py::arg("degree") = 4, py::arg("zeta") = 1.0);

    m.def(
        "normal",
        [](const std::string& surface, std::array<double, 3> x) { return arr(normal(surface_named(surface), vec(x))); },
        py::arg("surface"), py::arg("x"));

    m.def(
        "divcurl_base_check",
        [](const std::string& name, std::uint64_t seed) {
            return as_json(divcurl_base_check(catalog_field(name, make_params(seed, 4, 1.0)), VolumeDomain::unit_ball()));
        },
        py::arg("name") = "rigid_rotation", py::arg("seed") = 42);

    m.def(
        "persistence_check",
        [](const std::string& u0, const std::string& omega0, const std::string& surface, std::array<double, 3> x0) {
            return as_json(
                persistence_check(catalog_field(u0), catalog_field(omega0), surface_named(surface), vec(x0)));
        },
        py::arg("u0"), py::arg("omega0"), py::arg("surface"), py::arg("x0"));

    m.def(
        "fit_rate",
        [](const std::vector<std::pair<double, double>>& pts) { return as_json(fit_rate(pts)); },
        py::arg("points"));

    m.def(
        "simulate",
        [](const std::string& config_text) {
            const SimConfig cfg = sim_config_from(parse_config(config_text, "<python>"));
            py::gil_scoped_release release;
            const RunResult r = run(cfg);
            return as_json(r.report);
        },
        py::arg("config_text"));

    m.def(
        "parse_config",
        [](const std::string& text) {
            py::dict out;
            for (const auto& s : parse_config(text, "<python>").sections) {
                py::dict sec;
                for (const auto& e : s.entries) {
                    std::visit([&](const auto& v) { sec[py::str(e.key)] = py::cast(v); }, e.value);
                }
                out[py::str(s.name)] = sec;
            }
            return out;
        },
        py::arg("text"));

    m.def(
        "snapshot_roundtrip",
        [](const std::string& path, const std::string& field, int nx, int ny, int nz) {
            ChannelSpec spec;
            spec.nx = nx;
            spec.ny = ny;
            spec.nz = nz;
            const SpectralField u = SpectralField::sample(catalog_field(field), spec);
            write_snapshot(path, u, 0.0, 0.0, 1.0);
            const Snapshot s = read_snapshot(path);
            const auto ref = to_file_order(u);
            double worst = 0.0;
            for (std::size_t i = 0; i < ref.size(); ++i) {
                worst = std::max(worst, std::abs(ref[i] - s.values[i]));
            }
            return worst;
        },
        py::arg("path"), py::arg("field") = "taylor_green", py::arg("nx") = 8, py::arg("ny") = 8, py::arg("nz") = 9);
}
