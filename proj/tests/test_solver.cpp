#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "navslip/catalog.hpp"
#include "navslip/error.hpp"
#include "navslip/solver.hpp"
#include "oracles.hpp"

using namespace navslip;

namespace {

SimConfig base(int n, int nz) {
    SimConfig c;
    c.domain.nx = n;
    c.domain.ny = n;
    c.domain.nz = nz;
    return c;
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::DomainError;
}

} // namespace

TEST_CASE("robin decay mode") {
    const double zeta = 1.0, nu = 0.1;
    SimConfig c = base(8, 33);
    c.nu = nu;
    c.zeta = zeta;
    c.dt = 1e-3;
    c.T = 0.2;
    c.save_every = 50;
    c.initial = "channel_robin_mode";
    c.initial_params.zeta = zeta;
    const auto res = run(c);
    const double lambda = oracle::robin_root(zeta);
    const double decay = std::exp(-nu * lambda * lambda * res.final_state.t);
    const auto exact = SpectralField::sample(
        AnalyticField({ScalarExpr::term(decay, Factor::one(), Factor::one(), Factor::cosine(lambda)), {}, {}}, "x"),
        c.domain);
    CHECK(linf_norm(res.final_state.u - exact) < 1e-7);
    CHECK(energy_balance_check(res.report).rel_residual < 1e-8);
}

TEST_CASE("taylor-green in a free-slip channel") {
    const double nu = 0.05;
    SimConfig c = base(16, 17);
    c.nu = nu;
    c.zeta = std::numeric_limits<double>::infinity();
    c.dt = 1e-3;
    c.T = 0.2;
    c.save_every = 100;
    c.initial = "taylor_green_2d";
    const auto res = run(c);
    const auto u0 = SpectralField::sample(catalog_field("taylor_green_2d"), c.domain);
    const auto exact = std::exp(-2 * nu * res.final_state.t) * u0;
    CHECK(linf_norm(res.final_state.u - exact) < 1e-8);
}

TEST_CASE("euler conserves energy") {
    SimConfig c = base(16, 25);
    c.nu = 0.0;
    c.dt = 2e-3;
    c.T = 0.2;
    c.save_every = 10;
    c.initial = "channel_solenoidal";
    c.initial_params.seed = 4;
    c.initial_params.degree = 4;
    c.initial_params.amplitude = 0.2;
    const auto res = run(c);
    const double e0 = res.report.rows.front().E0;
    for (const auto& row : res.report.rows) {
        CHECK(std::abs(row.E0 - e0) < 1e-6 * e0);
    }
}

TEST_CASE("energy balance converges at second order") {
    double prev = 0.0;
    for (double dt : {2e-3, 1e-3}) {
        SimConfig c = base(16, 25);
        c.nu = 0.05;
        c.zeta = 0.5;
        c.dt = dt;
        c.T = 0.2;
        c.save_every = static_cast<int>(std::lround(0.02 / dt));
        // data must already satisfy the Robin condition, otherwise a wall layer
        // appears at t = 0+ and the balance is dominated by it
        c.initial = "robin_cells";
        c.initial_params.zeta = 0.5;
        const double rel = energy_balance_check(run(c).report).rel_residual;
        CHECK(rel < 1e-6);
        if (prev > 0.0) {
            const double ratio = prev / rel;
            MESSAGE("balance ratio under dt halving: " << ratio);
            CHECK(ratio > 3.0);
            CHECK(ratio < 5.5);
        }
        prev = rel;
    }
}

TEST_CASE("initial state is projected and normalized") {
    SimConfig c = base(16, 17);
    c.nu = 0.01;
    c.initial = "channel_solenoidal";
    c.normalize_er = 1.0;
    const auto st = init_state(c);
    CHECK(linf_norm(divergence(st.u)) < 1e-9);
    CHECK(max_wall_normal(st.u) < 1e-12);
    const auto er = iterated_curl(st.u, c.r);
    CHECK(l2_norm_sq(er) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("config validation") {
    SimConfig c = base(8, 9);
    c.nu = -1;
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
    c.nu = 0.1;
    c.zeta = 0.0;
    CHECK(code_of([&] { c.validate(); }) == Errc::NonpositiveSlipLength);
    c.zeta = 1.0;
    c.T = 0.0105;
    c.dt = 1e-3;
    CHECK(code_of([&] { c.validate(); }) == Errc::ConfigInvalid);
}

TEST_CASE("cfl guard") {
    SimConfig c = base(16, 17);
    c.nu = 0.01;
    c.dt = 0.5;
    c.T = 1.0;
    c.initial = "taylor_green_2d";
    c.initial_params.amplitude = 10.0;
    CHECK(code_of([&] { run(c); }) == Errc::CFLViolated);
}

TEST_CASE("blowup time estimate") {
    SeededUniform rng(2024);
    for (int i = 0; i < 10; ++i) {
        const double e = 0.1 + 5 * (rng() + 1);
        const double m = 0.5 + (rng() + 1);
        const double eta = 0.5 * (rng() + 1);
        const double direct = std::log(1.0 + 1.0 / (eta + e)) / m;
        CHECK(std::abs(tstar_estimate(e, m, eta) - direct) < 1e-14 * direct);
    }
    CHECK(code_of([] { tstar_estimate(1.0, 0.0, 0.1); }) == Errc::DomainError);
    CHECK(code_of([] { tstar_estimate(-1.0, 1.0, 0.1); }) == Errc::DomainError);
}

TEST_CASE("inequality audit on the exact riccati solution") {
    std::vector<double> t, e;
    for (int i = 0; i <= 500; ++i) {
        t.push_back(i * 1e-3);
        e.push_back(oracle::riccati(0.5, 1.0, t.back()));
    }
    const auto a = differential_inequality_audit(t, e, 1.0 + 1e-3);
    CHECK(a.m_fit == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(a.violation_fraction == 0.0);
    CHECK(a.points == 499);
    CHECK(code_of([&] { differential_inequality_audit({0, 1}, {1, 2}, 1.0); }) == Errc::SeriesTooShort);
}
