#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "navslip/catalog.hpp"
#include "navslip/error.hpp"
#include "navslip/identities.hpp"
#include "oracles.hpp"

using namespace navslip;
using oracle::pi;

namespace {

AnalyticField linear_field(const Mat3& a, const std::string& label) {
    std::array<ScalarExpr, 3> c;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (a(i, j) != 0.0) {
                c[i] += a(i, j) * ScalarExpr::coordinate(j);
            }
        }
    }
    return AnalyticField(c, label);
}

} // namespace

TEST_CASE("rigid rotation on the unit ball") {
    const auto rep = divcurl_base_check(catalog_field("rigid_rotation"), VolumeDomain::unit_ball());
    CHECK(rep.term("grad_sq") == doctest::Approx(8 * pi / 3).epsilon(1e-12));
    CHECK(rep.term("curl_sq") == doctest::Approx(16 * pi / 3).epsilon(1e-12));
    CHECK(rep.term("boundary_II") == doctest::Approx(-8 * pi / 3).epsilon(1e-12));
    CHECK(rep.abs_residual < 1e-12);
}

TEST_CASE("base identity on tangent polynomial fields") {
    for (const auto& d : {VolumeDomain::unit_ball(), VolumeDomain::solid_ellipsoid(1.5, 1.0, 0.75)}) {
        for (int seed = 1; seed <= 3; ++seed) {
            CatalogParams p;
            p.seed = seed;
            p.degree = 3;
            p.surface = d.boundary().front();
            const auto rep = divcurl_base_check(catalog_field("tangent_poly", p), d, {24, 24, 24, 32, 64});
            CHECK(rep.rel_residual < 1e-10);
        }
    }
}

TEST_CASE("base identity preconditions") {
    try {
        divcurl_base_check(catalog_field("radial"), VolumeDomain::unit_ball(), {8, 8, 8, 8, 16});
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PreconditionViolated);
        CHECK(std::string(e.what()).find("divergence") != std::string::npos);
        CHECK(std::string(e.what()).find("normal") != std::string::npos);
    }
}

TEST_CASE("ratio for the zero field and rigid rotation") {
    const auto d = VolumeDomain::unit_ball();
    CHECK(divcurl_ratio(AnalyticField::zero(), d, 1).rho == 0.0);
    // grad u is constant: |grad^1 u|^2 = 8pi/3, sum = |u|^2 + |curl u|^2
    const auto r0 = divcurl_ratio(catalog_field("rigid_rotation"), d, 0);
    CHECK(r0.rho == doctest::Approx((8 * pi / 3) / (8 * pi / 15 + 16 * pi / 3)).epsilon(1e-12));
}

TEST_CASE("ratio needs the Navier condition when zeta is given") {
    CHECK_THROWS_AS(divcurl_ratio(catalog_field("rigid_rotation"), VolumeDomain::unit_ball(), 0, 1.0), Error);
    CatalogParams p;
    p.zeta = 1.0;
    const auto r = divcurl_ratio(catalog_field("navier_ball", p), VolumeDomain::unit_ball(), 1, 1.0, {16, 16, 16, 32, 64});
    CHECK(std::isfinite(r.rho));
    CHECK(r.rho > 0.0);
}

TEST_CASE("corpus running max is monotone") {
    std::vector<AnalyticField> corpus;
    for (int s = 0; s < 3; ++s) {
        CatalogParams p;
        p.seed = 7 + s;
        p.zeta = 0.5;
        corpus.push_back(catalog_field("navier_ball", p));
    }
    const auto reps = divcurl_ratio_corpus(corpus, VolumeDomain::unit_ball(), 0, 0.5, {16, 16, 16, 32, 64});
    for (std::size_t i = 1; i < reps.size(); ++i) {
        CHECK(reps[i].running_max >= reps[i - 1].running_max);
    }
}

TEST_CASE("vector identities on random fields") {
    CatalogParams p, q;
    p.seed = 21;
    q.seed = 22;
    const auto reps = vector_identity_checks(catalog_field("solenoidal_poly", p), catalog_field("taylor_green"),
                                             VolumeDomain::unit_ball(), {24, 24, 24, 32, 64});
    REQUIRE(reps.size() == 3);
    for (const auto& r : reps) {
        CHECK(r.rel_residual < 1e-11);
    }
}

TEST_CASE("persistence examples") {
    const Surface sphere = Surface::unit_sphere();
    const AnalyticField rot = catalog_field("rigid_rotation");
    const auto same = persistence_check(rot, rot.curl(), sphere, Vec3(0.6, 0, 0.8));
    CHECK(same.bracket.norm() < 1e-15);
    CHECK(same.verdict == Verdict::Inconclusive);

    Mat3 a = Mat3::Zero();
    a(0, 1) = -1;
    a(1, 0) = 1;
    Mat3 b = Mat3::Zero();
    b(0, 2) = 1;
    const auto v = persistence_check(linear_field(a, "rot"), linear_field(b, "zx"), sphere, Vec3(0, 0, 1));
    CHECK((v.bracket - Vec3(0, -1, 0)).norm() < 1e-15);
    CHECK(v.bracket_cross_n_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(v.verdict == Verdict::PredictsFailure);

    // flat walls never predict failure
    const auto flat = persistence_check(linear_field(a, "rot"), linear_field(b, "zx"), Surface::flat_wall(1.0, 1),
                                        Vec3(0, 0, 1));
    CHECK(flat.verdict == Verdict::Inconclusive);
}

TEST_CASE("lie bracket is antisymmetric and bilinear") {
    for (int s = 0; s < 5; ++s) {
        CatalogParams p, q;
        p.seed = 300 + s;
        q.seed = 400 + s;
        const AnalyticField u = catalog_field("solenoidal_poly", p);
        const AnalyticField w = catalog_field("solenoidal_poly", q);
        const AnalyticField tg = catalog_field("taylor_green");
        const Vec3 x(0.1 * s, -0.3, 0.45);
        const Vec3 uw = lie_bracket(u, w, x);
        const double scale = 1 + uw.norm();
        CHECK((uw + lie_bracket(w, u, x)).norm() < 1e-13 * scale);
        const Vec3 lin = lie_bracket(u, 2.0 * w + tg, x);
        CHECK((lin - 2.0 * uw - lie_bracket(u, tg, x)).norm() < 1e-12 * scale);
    }
}
