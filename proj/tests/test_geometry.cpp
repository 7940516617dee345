#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "navslip/error.hpp"
#include "navslip/geometry.hpp"
#include "navslip/quadrature.hpp"
#include "oracles.hpp"

using namespace navslip;

namespace {

Vec3 on_ellipsoid(double a, double b, double c, double th, double ph) {
    return {a * std::sin(th) * std::cos(ph), b * std::sin(th) * std::sin(ph), c * std::cos(th)};
}

} // namespace

TEST_CASE("unit sphere normal is the position vector") {
    const Surface s = Surface::unit_sphere();
    for (double th : {0.3, 1.1, 2.5}) {
        for (double ph : {0.0, 2.0, 4.4}) {
            const Vec3 x = on_ellipsoid(1, 1, 1, th, ph);
            CHECK((normal(s, x) - x).norm() < 1e-14);
        }
    }
}

TEST_CASE("sphere shape matrix is minus identity on the tangent plane") {
    const double r = 2.0;
    const Surface s = Surface::sphere(r);
    const Vec3 x = r * Vec3(0.6, 0.0, 0.8);
    const Mat3 m = shape_matrix(s, x);
    const Vec3 n = normal(s, x);
    const Mat3 p = Mat3::Identity() - n * n.transpose();
    CHECK((m + p / r).norm() < 1e-13);
    const auto k = curvatures(s, x);
    CHECK(k.gauss == doctest::Approx(1.0 / (r * r)).epsilon(1e-13));
    CHECK(k.mean == doctest::Approx(-2.0 / r).epsilon(1e-13));
}

TEST_CASE("ellipsoid curvatures against closed forms") {
    const double a = 1.5, b = 1.0, c = 0.75;
    const Surface s = Surface::ellipsoid(a, b, c);
    for (double th : {0.2, 0.9, 1.7, 2.8}) {
        for (double ph : {0.1, 1.3, 3.9}) {
            const Vec3 x = on_ellipsoid(a, b, c, th, ph);
            const double h2 = x.x() * x.x() / std::pow(a, 4) + x.y() * x.y() / std::pow(b, 4) +
                              x.z() * x.z() / std::pow(c, 4);
            const double abc2 = a * a * b * b * c * c;
            const double gauss = 1.0 / (abc2 * h2 * h2);
            // trace of -grad n
            const double trace = (x.squaredNorm() - a * a - b * b - c * c) / (abc2 * std::pow(h2, 1.5));
            const auto k = curvatures(s, x);
            CHECK(k.gauss == doctest::Approx(gauss).epsilon(1e-12));
            CHECK(k.mean == doctest::Approx(trace).epsilon(1e-12));
        }
    }
}

TEST_CASE("shape operator is symmetric and tangent") {
    const Surface s = Surface::ellipsoid(1.2, 0.9, 1.4);
    const Vec3 x = on_ellipsoid(1.2, 0.9, 1.4, 1.0, 0.7);
    const TangentFrame f = tangent_frame(s, x);
    const Vec3 n = normal(s, x);
    CHECK(std::abs(f.e1.dot(f.e2)) < 1e-14);
    CHECK((f.e1.cross(f.e2) - n).norm() < 1e-14);
    const double ii12 = second_fundamental_form(s, x, f.e1, f.e2);
    const double ii21 = second_fundamental_form(s, x, f.e2, f.e1);
    CHECK(ii12 == doctest::Approx(ii21).epsilon(1e-12));
    CHECK(std::abs(shape_operator(s, x, f.e1).dot(n)) < 1e-13);
}

TEST_CASE("rotation is n cross and squares to minus one on tangents") {
    const Surface s = Surface::unit_sphere();
    const Vec3 x = Vec3(1, 2, 2) / 3.0;
    const TangentFrame f = tangent_frame(s, x);
    const Vec3 v(0.3, -1.0, 0.5);
    const Vec3 pv = tangential_project(f, v);
    CHECK(std::abs(pv.dot(normal(s, x))) < 1e-15);
    CHECK((rotate_tangent(f, pv) - x.cross(pv)).norm() < 1e-15);
    CHECK((rotate_tangent(f, rotate_tangent(f, pv)) + pv).norm() < 1e-15);
}

TEST_CASE("flat wall orientation and zero curvature") {
    const Surface top = Surface::flat_wall(1.0, 1);
    const Surface bot = Surface::flat_wall(-1.0, -1);
    CHECK((normal(top, Vec3(0.4, 2.0, 1.0)) - Vec3::UnitZ()).norm() == 0.0);
    CHECK((normal(bot, Vec3(0.4, 2.0, -1.0)) + Vec3::UnitZ()).norm() == 0.0);
    CHECK(shape_matrix(top, Vec3(1, 1, 1)).norm() == 0.0);
}

TEST_CASE("off-surface points are rejected") {
    const Surface s = Surface::unit_sphere();
    try {
        normal(s, Vec3(0, 0, 1.1));
        FAIL("expected PointOffSurface");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PointOffSurface);
    }
}

TEST_CASE("surface quadrature reproduces areas") {
    const double area = surface_quadrature(Surface::unit_sphere(), [](const Vec3&) { return 1.0; });
    CHECK(area == doctest::Approx(4 * oracle::pi).epsilon(1e-13));
    // integral of z^2 over the unit sphere is 4 pi / 3
    const double z2 = surface_quadrature(Surface::unit_sphere(), [](const Vec3& x) { return x.z() * x.z(); });
    CHECK(z2 == doctest::Approx(4 * oracle::pi / 3).epsilon(1e-13));
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    const auto r = quad::gauss_legendre(6, 0.0, 2.0);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        s += r.weights[i] * std::pow(r.nodes[i], 11);
    }
    CHECK(s == doctest::Approx(4096.0 / 12.0).epsilon(1e-13));
}
