// One line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <string>

#include "navslip/boundary.hpp"
#include "navslip/catalog.hpp"
#include "navslip/error.hpp"
#include "navslip/experiments.hpp"
#include "navslip/identities.hpp"
#include "navslip/report.hpp"
#include "navslip/solver.hpp"
#include "oracles.hpp"

using namespace navslip;
using oracle::pi;

namespace {

int failures = 0;

void verdict(int id, const char* title, const std::function<std::string(bool&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
        detail = body(ok);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), secs);
    std::fflush(stdout);
    if (!ok) {
        ++failures;
    }
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c, d);
    return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

AnalyticField linear_field(const Mat3& a) {
    std::array<ScalarExpr, 3> c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (a(i, j) != 0.0) {
                c[i] += a(i, j) * ScalarExpr::coordinate(j);
            }
        }
    }
    return AnalyticField(c, "linear");
}

SimConfig robin_config(double dt) {
    SimConfig c;
    c.domain.nx = 8;
    c.domain.ny = 8;
    c.domain.nz = 65;
    c.nu = 0.1;
    c.zeta = 1.0;
    c.dt = dt;
    c.T = 1.0;
    c.save_every = static_cast<int>(std::lround(0.1 / dt));
    c.initial = "channel_robin_mode";
    c.initial_params.zeta = 1.0;
    return c;
}

} // namespace

int main(int argc, char** argv) {
    const std::string out_dir = argc > 1 ? argv[1] : "acceptance_out";

    verdict(1, "div-curl base identity", [](bool& ok) {
        const auto rep = divcurl_base_check(catalog_field("rigid_rotation"), VolumeDomain::unit_ball());
        const double e1 = rel(rep.term("grad_sq"), 8 * pi / 3);
        const double e2 = rel(rep.term("curl_sq"), 16 * pi / 3);
        const double e3 = rel(rep.term("boundary_II"), -8 * pi / 3);
        double worst = 0;
        for (int seed = 1; seed <= 5; ++seed) {
            CatalogParams p;
            p.seed = seed;
            p.degree = 3;
            worst = std::max(worst, divcurl_base_check(catalog_field("tangent_poly", p), VolumeDomain::unit_ball(),
                                                       {24, 24, 24, 32, 64})
                                        .rel_residual);
        }
        ok = e1 < 1e-10 && e2 < 1e-10 && e3 < 1e-10 && worst < 1e-6;
        return fmt("rel errors %.1e %.1e %.1e, corpus residual %.1e", e1, e2, e3, worst);
    });

    verdict(2, "Navier sign equivalence", [](bool& ok) {
        std::vector<EquivalenceResult> all;
        double worst = 0;
        const Surface surfaces[] = {Surface::unit_sphere(), Surface::ellipsoid(1.5, 1.0, 0.75),
                                    Surface::flat_wall(1.0, 1), Surface::flat_wall(-1.0, -1)};
        for (const Surface& s : surfaces) {
            std::vector<AnalyticField> corpus;
            for (int seed = 0; seed < 5; ++seed) {
                CatalogParams p;
                p.seed = 50 + seed;
                p.degree = 3;
                p.surface = s;
                corpus.push_back(catalog_field("tangent_poly", p));
            }
            const auto pts = default_samples(s, 12, 24);
            for (double zeta : {0.5, 1.0, 2.0}) {
                all.push_back(equivalence_check(s, zeta, corpus, pts));
            }
        }
        const int sigma = consistent_sign(all);
        for (const auto& r : all) {
            worst = std::max(worst, sigma > 0 ? r.deviation_plus : r.deviation_minus);
        }
        ok = sigma == kNavierSign && worst < 1e-8;
        return fmt("sigma* = %+.0f, max deviation %.1e over %.0f checks", sigma, worst, double(all.size()));
    });

    verdict(3, "div-curl ratio stability", [](bool& ok) {
        std::vector<AnalyticField> corpus;
        for (int seed = 1; seed <= 3; ++seed) {
            CatalogParams p;
            p.seed = seed;
            p.zeta = 1.0;
            corpus.push_back(catalog_field("navier_ball", p));
        }
        const Resolution base{16, 16, 16, 32, 64};
        std::string detail;
        double worst = 0;
        for (int r = 0; r <= 2; ++r) {
            const double lo = divcurl_ratio_corpus(corpus, VolumeDomain::unit_ball(), r, 1.0, base).back().running_max;
            const double hi =
                divcurl_ratio_corpus(corpus, VolumeDomain::unit_ball(), r, 1.0, base.doubled()).back().running_max;
            ok = ok && std::isfinite(lo) && std::isfinite(hi) && rel(hi, lo) < 0.10;
            worst = std::max(worst, rel(hi, lo));
            detail += fmt("r=%.0f max rho %.4f; ", r, hi);
        }
        return detail + fmt("worst change under doubling %.1e", worst);
    });

    verdict(4, "solver verification", [](bool& ok) {
        const double lambda = oracle::robin_root(1.0);
        const auto res = run(robin_config(1e-3));
        const double decay = std::exp(-0.1 * lambda * lambda * res.final_state.t);
        const auto exact = SpectralField::sample(
            AnalyticField({ScalarExpr::term(decay, Factor::one(), Factor::one(), Factor::cosine(lambda)), {}, {}}, "x"),
            res.final_state.u.spec());
        const double linf = linf_norm(res.final_state.u - exact);

        // balance on genuinely 3D, Robin-compatible data
        auto balance = [](double dt) {
            SimConfig c;
            c.domain.nx = 16;
            c.domain.ny = 16;
            c.domain.nz = 25;
            c.nu = 0.05;
            c.zeta = 0.5;
            c.dt = dt;
            c.T = 0.2;
            c.save_every = static_cast<int>(std::lround(0.02 / dt));
            c.initial = "robin_cells";
            c.initial_params.zeta = 0.5;
            return energy_balance_check(run(c).report).rel_residual;
        };
        const double b1 = balance(2e-3), b2 = balance(1e-3);

        SimConfig e;
        e.domain.nx = 16;
        e.domain.ny = 16;
        e.domain.nz = 33;
        e.nu = 0.0;
        e.dt = 1e-3;
        e.T = 0.5;
        e.save_every = 50;
        e.initial = "channel_solenoidal";
        e.initial_params.seed = 4;
        e.initial_params.amplitude = 0.2;
        const auto er = run(e).report;
        double drift = 0;
        for (const auto& row : er.rows) {
            drift = std::max(drift, rel(row.E0, er.rows.front().E0));
        }
        ok = linf < 1e-6 && b1 < 1e-6 && b2 < 1e-6 && b1 / b2 > 3.0 && b1 / b2 < 5.5 && drift < 1e-6;
        return fmt("Robin Linf %.1e, balance %.1e -> %.1e (ratio %.2f)", linf, b1, b2, b1 / b2) +
               fmt(", Euler E0 drift %.1e", drift);
    });

    verdict(5, "inviscid limit campaign", [&](bool& ok) {
        const CampaignSpec spec = default_campaign();
        const auto res = inviscid_limit_campaign(spec);
        write_campaign(res, out_dir);
        const RateFit& f = res.fits.front();
        ok = res.monotone && f.meets_cube_root && res.max_t0_error < 1e-12;
        std::string s = fmt("slope %.3f +- %.3f, t0 error %.1e, ", f.slope, f.slope_ci95, res.max_t0_error);
        s += res.monotone ? "monotone" : "NOT monotone";
        s += res.probe.uniform ? (res.sqrt_regime_met ? ", gradient uniform: sqrt rate met"
                                                      : ", gradient uniform: sqrt rate not met")
                               : ", gradient not uniform: sqrt rate not assessed";
        return s;
    });

    verdict(6, "persistence criterion", [](bool& ok) {
        const Surface sphere = Surface::unit_sphere();
        const AnalyticField rot = catalog_field("rigid_rotation");
        const double zero = persistence_check(rot, rot.curl(), sphere, Vec3(0.6, 0.0, 0.8)).bracket.norm();
        Mat3 a = Mat3::Zero(), b = Mat3::Zero();
        a(0, 1) = -1;
        a(1, 0) = 1;
        b(0, 2) = 1;
        const auto v = persistence_check(linear_field(a), linear_field(b), sphere, Vec3(0, 0, 1));
        const double bn = v.bracket_cross_n_norm;
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            CatalogParams p, q;
            p.seed = 1000 + i;
            q.seed = 2000 + i;
            const AnalyticField u = catalog_field("solenoidal_poly", p);
            const AnalyticField w = catalog_field(i % 2 ? "taylor_green" : "solenoidal_poly", q);
            const AnalyticField z = catalog_field("tangent_poly", q);
            SeededUniform rng(i);
            const Vec3 x(rng(), rng(), rng());
            const double al = rng(), be = rng();
            const Vec3 uw = lie_bracket(u, w, x);
            const double scale = 1 + uw.norm() + lie_bracket(u, z, x).norm();
            worst = std::max(worst, (uw + lie_bracket(w, u, x)).norm() / scale);
            worst = std::max(worst, (lie_bracket(u, al * w + be * z, x) - al * uw - be * lie_bracket(u, z, x)).norm() /
                                        scale);
        }
        ok = zero < 1e-15 && std::abs(bn - 1.0) < 1e-12 && v.verdict == Verdict::PredictsFailure && worst < 1e-12;
        return fmt("rigid bracket %.1e, |b x n| - 1 = %.1e, invariant defect %.1e", zero, bn - 1.0, worst);
    });

    verdict(7, "blowup time estimate", [](bool& ok) {
        SeededUniform rng(77);
        double worst = 0;
        for (int i = 0; i < 10; ++i) {
            const double e = 0.05 + 4 * (rng() + 1), m = 0.2 + (rng() + 1), eta = 0.5 * (rng() + 1);
            const double direct = std::log(1.0 + 1.0 / (eta + e)) / m;
            worst = std::max(worst, rel(tstar_estimate(e, m, eta), direct));
        }
        std::vector<double> t, e;
        for (int i = 0; i <= 400; ++i) {
            t.push_back(i * 1e-3);
            e.push_back(oracle::riccati(0.5, 1.0, t.back()));
        }
        const double m_fit = differential_inequality_audit(t, e, 1.0).m_fit;
        ok = worst < 1e-14 && std::abs(m_fit - 1.0) < 1e-3;
        return fmt("max rel deviation %.1e, audit M = %.6f", worst, m_fit);
    });

    std::printf("%d of 7 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
