#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "navslip/catalog.hpp"
#include "navslip/chebyshev.hpp"
#include "navslip/error.hpp"
#include "navslip/spectral.hpp"
#include "navslip/volume.hpp"
#include "oracles.hpp"

using namespace navslip;

namespace {

ChannelSpec small(int n = 16, int nz = 17) {
    ChannelSpec s;
    s.nx = n;
    s.ny = n;
    s.nz = nz;
    return s;
}

double max_diff(const SpectralField& a, const SpectralField& b) { return linf_norm(a - b); }

} // namespace

TEST_CASE("chebyshev nodes descend from +1") {
    const auto z = cheb::nodes(5);
    REQUIRE(z.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(z[j] == doctest::Approx(std::cos(oracle::pi * j / 4)).epsilon(1e-15));
    }
}

TEST_CASE("chebyshev coefficient derivative") {
    // z^3 = (3 T1 + T3) / 4, 3 z^2 = 1.5 T0 + 1.5 T2
    const double a[5] = {0, 0.75, 0, 0.25, 0};
    double b[5];
    cheb::differentiate(a, b, 5);
    CHECK(b[0] == doctest::Approx(1.5));
    CHECK(b[1] == doctest::Approx(0.0));
    CHECK(b[2] == doctest::Approx(1.5));
    CHECK(b[3] == doctest::Approx(0.0));
}

TEST_CASE("boundary rows match T_k derivatives at the walls") {
    const int n = 7;
    const auto d1 = cheb::boundary_row(n, +1, 1);
    const auto d2m = cheb::boundary_row(n, -1, 2);
    for (int k = 0; k < n; ++k) {
        CHECK(d1(k) == doctest::Approx(k * k));
        // T_k''(-1) = (-1)^k k^2 (k^2 - 1) / 3
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        CHECK(d2m(k) == doctest::Approx(sign * k * k * (k * k - 1) / 3.0));
    }
}

TEST_CASE("grid round trip") {
    const auto spec = small();
    const auto u = SpectralField::sample(catalog_field("taylor_green"), spec);
    const auto back = SpectralField::from_grid(spec, u.to_grid(), 3);
    CHECK(max_diff(u, back) < 1e-14);
}

TEST_CASE("spectral derivatives match analytic ones") {
    const auto spec = small(16, 25);
    CatalogParams p;
    p.seed = 3;
    const AnalyticField f = catalog_field("channel_solenoidal", p);
    const auto u = SpectralField::sample(f, spec);
    for (int axis = 0; axis < 3; ++axis) {
        std::array<int, 3> alpha{0, 0, 0};
        alpha[axis] = 1;
        const auto du = u.derivative(axis);
        const auto exact = SpectralField::sample(
            AnalyticField({f.component(0).derivative(axis), f.component(1).derivative(axis),
                           f.component(2).derivative(axis)},
                          "d"),
            spec);
        CHECK(max_diff(du, exact) < 1e-9);
    }
}

TEST_CASE("curl and divergence of sampled fields") {
    const auto spec = small();
    const AnalyticField tg = catalog_field("taylor_green");
    const auto u = SpectralField::sample(tg, spec);
    CHECK(max_diff(curl(u), SpectralField::sample(tg.curl(), spec)) < 1e-11);
    CHECK(linf_norm(divergence(u)) < 1e-12);
    CHECK(max_diff(iterated_curl(u, 2), SpectralField::sample(tg.iterated_curl(2), spec)) < 1e-9);
}

TEST_CASE("iterated curl order bound") {
    const auto u = SpectralField(small(8, 9));
    CHECK_THROWS_AS(iterated_curl(u, 3), Error);
}

TEST_CASE("leray projection gives a solenoidal tangent field") {
    const auto spec = small(16, 25);
    CatalogParams p;
    p.seed = 11;
    const auto raw = SpectralField::sample(catalog_field("solenoidal_poly", p), spec) +
                     SpectralField::sample(catalog_field("radial"), spec);
    SpectralField pressure;
    const auto u = leray_project(SpectralField(raw).apply_dealias(), &pressure);
    CHECK(linf_norm(divergence(u)) < 1e-9 * (1 + linf_norm(raw)));
    CHECK(max_wall_normal(u) < 1e-10 * (1 + linf_norm(raw)));
    // already projected fields are fixed points
    const auto v = SpectralField::sample(catalog_field("channel_solenoidal", p), spec);
    CHECK(max_diff(leray_project(v), v) < 1e-9);
}

TEST_CASE("sobolev norm of the 2d taylor-green field") {
    // every x/y derivative keeps the L2 mass 4 pi^2, z derivatives vanish
    const auto u = SpectralField::sample(catalog_field("taylor_green_2d"), small());
    for (int r = 0; r <= 3; ++r) {
        const double expect = 4 * oracle::pi * oracle::pi * (r + 1) * (r + 2) / 2.0;
        const auto n = sobolev_norm(u, r);
        CHECK(n.value * n.value == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(l2_norm_sq(u) == doctest::Approx(l2_norm_sq_grid(u)).epsilon(1e-12));
    // two walls, 2 pi^2 each
    CHECK(wall_l2_sq(u) == doctest::Approx(4 * oracle::pi * oracle::pi).epsilon(1e-12));
}

TEST_CASE("spectral and quadrature sobolev norms agree") {
    const auto spec = small(16, 25);
    CatalogParams p;
    p.seed = 5;
    const AnalyticField f = catalog_field("channel_solenoidal", p);
    const auto s = sobolev_norm(SpectralField::sample(f, spec), 2);
    const auto q = sobolev_norm(f, 2, volume_rule(VolumeDomain::channel_cell(spec.lx, spec.ly), 32, 32, 32));
    CHECK(s.value == doctest::Approx(q.value).epsilon(1e-9));
}

TEST_CASE("multi-index bookkeeping") {
    CHECK(multi_indices(2).size() == 6);
    CHECK(multinomial({1, 1, 0}) == 2.0);
    CHECK(multinomial({2, 1, 1}) == 12.0);
}

TEST_CASE("dealiasing removes the outer third") {
    const auto spec = small();
    auto u = SpectralField::sample(catalog_field("taylor_green"), spec);
    u.apply_dealias();
    for (int ix = 0; ix < spec.nx; ++ix) {
        for (int iy = 0; iy < spec.nyh(); ++iy) {
            if (!spec.retained(ix, iy)) {
                CHECK(std::abs(u.mode(0, ix, iy)[0]) == 0.0);
            }
        }
    }
}

TEST_CASE("quadrature ball volume and rigid rotation norm") {
    const auto rule = volume_rule(VolumeDomain::unit_ball(), 16, 16, 16);
    CHECK(integrate(rule, [](const Vec3&) { return 1.0; }) == doctest::Approx(4 * oracle::pi / 3).epsilon(1e-14));
    const auto n = sobolev_norm(catalog_field("rigid_rotation"), 0, rule);
    CHECK(n.value * n.value == doctest::Approx(8 * oracle::pi / 15).epsilon(1e-13));
}
