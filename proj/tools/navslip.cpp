// navslip command-line front end. Exit codes: 0 ok, 1 bad input, 2 runtime failure.
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "navslip/boundary.hpp"
#include "navslip/catalog.hpp"
#include "navslip/config.hpp"
#include "navslip/error.hpp"
#include "navslip/experiments.hpp"
#include "navslip/geometry.hpp"
#include "navslip/identities.hpp"
#include "navslip/report.hpp"
#include "navslip/snapshot.hpp"
#include "navslip/solver.hpp"
#include "navslip/volume.hpp"

namespace fs = std::filesystem;
using namespace navslip;

namespace {

struct Globals {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    bool quiet = false;
};

ConfigDocument load(const Globals& g) {
    return g.config.empty() ? parse_config("", "<defaults>") : load_config(g.config);
}

CatalogParams params(const ConfigDocument& doc, const Globals& g) {
    CatalogParams p = catalog_params_from(doc);
    if (g.seed) {
        p.seed = *g.seed;
    }
    return p;
}

Vec3 default_point(const Surface& s) {
    switch (s.kind()) {
    case SurfaceKind::FlatWall:
        return {0.3, 0.7, s.z0()};
    default:
        return {0.0, 0.0, s.semi_axes().z()};
    }
}

Vec3 point_from(const ConfigDocument& doc, const Surface& s) {
    if (!doc.has("point")) {
        return default_point(s);
    }
    const auto p = doc.get_reals("point");
    if (p.size() != 3) {
        throw Error(Errc::ConfigInvalid, "point needs three coordinates");
    }
    return {p[0], p[1], p[2]};
}

VolumeDomain volume_from(const Surface& s) {
    switch (s.kind()) {
    case SurfaceKind::UnitSphere:
        return VolumeDomain::unit_ball();
    case SurfaceKind::Sphere:
        return VolumeDomain::solid_ellipsoid(s.semi_axes().x(), s.semi_axes().x(), s.semi_axes().x());
    case SurfaceKind::Ellipsoid:
        return VolumeDomain::solid_ellipsoid(s.semi_axes().x(), s.semi_axes().y(), s.semi_axes().z());
    case SurfaceKind::FlatWall:
        break;
    }
    return VolumeDomain::channel_cell(s.extent_x(), s.extent_y());
}

Json vec(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json mat(const Mat3& m) {
    Json j = Json::array();
    for (int i = 0; i < 3; ++i) {
        j.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    }
    return j;
}

void emit(const Globals& g, const Json& j, const std::string& file) {
    if (!g.out.empty()) {
        fs::create_directories(g.out);
        write_text((fs::path(g.out) / file).string(), j.dump(2) + "\n");
    }
    if (!g.quiet) {
        std::cout << j.dump(2) << "\n";
    }
}

Resolution resolution_from(const ConfigDocument& doc) {
    Resolution r;
    if (auto v = doc.opt_int("n1")) r.n1 = static_cast<int>(*v);
    if (auto v = doc.opt_int("n2")) r.n2 = static_cast<int>(*v);
    if (auto v = doc.opt_int("n3")) r.n3 = static_cast<int>(*v);
    if (auto v = doc.opt_int("s1")) r.s1 = static_cast<int>(*v);
    if (auto v = doc.opt_int("s2")) r.s2 = static_cast<int>(*v);
    return r;
}

int cmd_catalog(const Globals& g) {
    Json j;
    j["fields"] = catalog_names();
    j["surfaces"] = {"unit_sphere", "sphere", "ellipsoid", "top_wall", "bottom_wall"};
    j["config_keys"] = known_keys();
    if (g.quiet) {
        return 0;
    }
    if (!g.out.empty()) {
        emit(g, j, "catalog.json");
        return 0;
    }
    for (const auto& n : catalog_names()) {
        std::cout << n << "\n";
    }
    return 0;
}

int cmd_geom(const Globals& g) {
    const auto doc = load(g);
    const Surface s = surface_from(doc);
    const Vec3 x = point_from(doc, s);
    if (!s.contains(x)) {
        throw Error(Errc::PointOffSurface, "point is not on " + s.name());
    }
    const TangentFrame f = tangent_frame(s, x);
    const Curvatures k = curvatures(s, x);
    Json j;
    j["surface"] = s.name();
    j["point"] = vec(x);
    j["normal"] = vec(normal(s, x));
    j["e1"] = vec(f.e1);
    j["e2"] = vec(f.e2);
    j["shape_matrix"] = mat(shape_matrix(s, x));
    j["gauss"] = k.gauss;
    j["mean"] = k.mean;
    emit(g, j, "geom.json");
    return 0;
}

int cmd_bc_check(const Globals& g) {
    const auto doc = load(g);
    const Surface s = surface_from(doc);
    CatalogParams p = params(doc, g);
    p.surface = s;
    const double zeta = doc.opt_real("zeta").value_or(1.0);
    const auto samples = default_samples(s, static_cast<int>(doc.opt_int("s1").value_or(16)),
                                         static_cast<int>(doc.opt_int("s2").value_or(32)));
    const int sigma = static_cast<int>(doc.opt_int("sigma").value_or(kNavierSign));
    const double tol = doc.opt_real("tolerance").value_or(1e-8);

    Json j;
    if (const auto name = doc.opt_string("field")) {
        const AnalyticField u = catalog_field(*name, p);
        Json reps = Json::array();
        reps.push_back(to_json(kinematic_residual(u, s, samples)));
        reps.push_back(to_json(navier_classical_residual(u, s, zeta, samples)));
        reps.push_back(to_json(navier_geometric_residual(u, s, zeta, sigma, samples)));
        if (auto r = doc.opt_int("r")) {
            reps.push_back(to_json(iterated_navier_residual(u, s, zeta, sigma, static_cast<int>(*r), samples, true, tol)));
        }
        j["residuals"] = std::move(reps);
    }
    std::vector<AnalyticField> corpus;
    const long n = doc.opt_int("corpus_size").value_or(5);
    for (long i = 0; i < n; ++i) {
        CatalogParams q = p;
        q.seed = p.seed + static_cast<std::uint64_t>(i);
        corpus.push_back(catalog_field("tangent_poly", q));
    }
    const auto zetas = doc.has("zeta_list") ? doc.get_reals("zeta_list") : std::vector<double>{zeta};
    std::vector<EquivalenceResult> results;
    Json eq = Json::array();
    for (double z : zetas) {
        results.push_back(equivalence_check(s, z, corpus, samples, tol));
        eq.push_back(to_json(results.back()));
    }
    j["equivalence"] = std::move(eq);
    j["sigma_star"] = consistent_sign(results);
    emit(g, j, "bc_check.json");
    return 0;
}

int cmd_identity(const Globals& g) {
    const auto doc = load(g);
    const Surface s = surface_from(doc);
    const VolumeDomain d = volume_from(s);
    CatalogParams p = params(doc, g);
    const std::string name = doc.opt_string("field").value_or("rigid_rotation");
    const std::string check = doc.opt_string("check").value_or("base");
    const Resolution res = resolution_from(doc);
    Json j;
    if (check == "base") {
        j = to_json(divcurl_base_check(catalog_field(name, p), d, res));
    } else if (check == "ratio") {
        const int r = static_cast<int>(doc.opt_int("r").value_or(0));
        j = to_json(divcurl_ratio(catalog_field(name, p), d, r, doc.opt_real("zeta"), res));
    } else if (check == "vector") {
        const std::string partner = doc.opt_string("partner").value_or("solenoidal_poly");
        CatalogParams q = p;
        q.seed = p.seed + 1;
        j = Json::array();
        for (const auto& rep : vector_identity_checks(catalog_field(name, p), catalog_field(partner, q), d, res)) {
            j.push_back(to_json(rep));
        }
    } else if (check == "tstar") {
        const double e0 = doc.get_real("E0");
        const double m = doc.get_real("M");
        const double eta = doc.opt_real("eta").value_or(0.0);
        j = Json{{"E0", e0}, {"M", m}, {"eta", eta}, {"tstar", tstar_estimate(e0, m, eta)}};
    } else {
        throw Error(Errc::ConfigInvalid, "check must be base, ratio, vector or tstar");
    }
    emit(g, j, "identity.json");
    return 0;
}

int cmd_persistence(const Globals& g) {
    const auto doc = load(g);
    const Surface s = surface_from(doc);
    const Vec3 x = point_from(doc, s);
    CatalogParams p = params(doc, g);
    const AnalyticField u0 = catalog_field(doc.opt_string("field").value_or("rigid_rotation"), p);
    const AnalyticField w0 = doc.has("partner") ? catalog_field(doc.get_string("partner"), p) : u0.curl();
    const auto v = persistence_check(u0, w0, s, x, doc.opt_real("tolerance").value_or(1e-10));
    emit(g, to_json(v), "persistence.json");
    return 0;
}

int cmd_simulate(const Globals& g) {
    const auto doc = load(g);
    SimConfig cfg = sim_config_from(doc);
    if (g.seed) {
        cfg.initial_params.seed = *g.seed;
    }
    std::size_t saved = 0;
    SaveHook hook;
    if (!g.out.empty()) {
        fs::create_directories(g.out);
        hook = [&](const SolverState& st) {
            char name[32];
            std::snprintf(name, sizeof name, "snap_%05zu.vfld", saved++);
            write_snapshot((fs::path(g.out) / name).string(), st, cfg);
        };
    }
    const RunResult res = run(cfg, false, hook);
    const IdentityReport bal = energy_balance_check(res.report);
    Json j;
    j["steps"] = res.final_state.step_count;
    j["t"] = res.final_state.t;
    j["energy_balance"] = to_json(bal);
    if (!res.report.rows.empty()) {
        j["E0_final"] = res.report.rows.back().E0;
        j["Er_final"] = res.report.rows.back().Er;
    }
    if (!g.out.empty()) {
        emit_report(res.report, ReportFormat::Csv, (fs::path(g.out) / "energy.csv").string());
    }
    emit(g, j, "summary.json");
    return 0;
}

int cmd_inviscid_limit(const Globals& g) {
    const auto doc = load(g);
    CampaignSpec spec = campaign_from(doc);
    if (g.seed) {
        spec.base.initial_params.seed = *g.seed;
    }
    const CampaignResult res = inviscid_limit_campaign(spec, [&](const std::string& msg) {
        if (!g.quiet) {
            std::cerr << msg << "\n";
        }
    });
    if (!g.out.empty()) {
        write_campaign(res, g.out);
    }
    if (!g.quiet) {
        std::cout << to_json(res).dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"navslip: Navier-slip geometry, identities and channel solver"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t seed = 0;
    app.add_option("--config", g.config, "INI configuration file");
    app.add_option("--out", g.out, "output directory");
    auto* seed_opt = app.add_option("--seed", seed, "override the catalog seed");
    app.add_flag("--quiet", g.quiet, "suppress stdout");

    struct Cmd {
        const char* name;
        const char* help;
        int (*fn)(const Globals&);
    };
    const Cmd cmds[] = {
        {"geom", "normal, frame and curvature at a surface point", cmd_geom},
        {"bc-check", "boundary condition residuals and sign equivalence", cmd_bc_check},
        {"identity", "div-curl and vector identities", cmd_identity},
        {"persistence", "Lie-bracket persistence verdict", cmd_persistence},
        {"simulate", "channel Navier-Stokes or Euler run", cmd_simulate},
        {"inviscid-limit", "vanishing viscosity campaign", cmd_inviscid_limit},
        {"catalog", "list fields and surfaces", cmd_catalog},
    };
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        // globals are accepted after the subcommand too
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (seed_opt->count() > 0) {
        g.seed = seed;
    }
    try {
        for (const auto& c : cmds) {
            if (app.got_subcommand(c.name)) {
                return c.fn(g);
            }
        }
    } catch (const Error& e) {
        std::cerr << "navslip: " << e.what() << "\n";
        return e.is_validation() ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "navslip: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
