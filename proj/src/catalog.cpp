#include "navslip/catalog.hpp"

#include <cmath>

#include "navslip/error.hpp"

namespace navslip {

namespace {

using F = Factor;

ScalarExpr mono(double c, int a, int b, int d) {
    return ScalarExpr::term(c, F::monomial(a), F::monomial(b), F::monomial(d));
}

ScalarExpr random_polynomial(SeededUniform& rng, int degree) {
    ScalarExpr p;
    for (int total = 0; total <= degree; ++total) {
        for (int a = total; a >= 0; --a) {
            for (int b = total - a; b >= 0; --b) {
                p += mono(rng(), a, b, total - a - b);
            }
        }
    }
    return p;
}

// Real homogeneous harmonic polynomials of degree 1..3.
std::vector<ScalarExpr> harmonic_basis(int degree) {
    switch (degree) {
    case 1: return {mono(1, 1, 0, 0), mono(1, 0, 1, 0), mono(1, 0, 0, 1)};
    case 2:
        return {mono(1, 1, 1, 0), mono(1, 0, 1, 1), mono(1, 1, 0, 1), mono(1, 2, 0, 0) - mono(1, 0, 2, 0),
                mono(2, 0, 0, 2) - mono(1, 2, 0, 0) - mono(1, 0, 2, 0)};
    case 3:
        return {
            mono(1, 3, 0, 0) - mono(3, 1, 2, 0),
            mono(3, 2, 1, 0) - mono(1, 0, 3, 0),
            mono(1, 2, 0, 1) - mono(1, 0, 2, 1),
            mono(2, 1, 1, 1),
            mono(4, 1, 0, 2) - mono(1, 3, 0, 0) - mono(1, 1, 2, 0),
            mono(4, 0, 1, 2) - mono(1, 2, 1, 0) - mono(1, 0, 3, 0),
            mono(2, 0, 0, 3) - mono(3, 2, 0, 1) - mono(3, 0, 2, 1),
        };
    default: throw Error(Errc::DomainError, "harmonic basis available for degrees 1..3");
    }
}

// sum of c * trig(m x) * trig(n y) with |m|, |n| <= kmax.
ScalarExpr random_trig(SeededUniform& rng, int kmax) {
    ScalarExpr t;
    for (int m = 0; m <= kmax; ++m) {
        for (int n = 0; n <= kmax; ++n) {
            for (int sx = 0; sx < 2; ++sx) {
                for (int sy = 0; sy < 2; ++sy) {
                    if ((m == 0 && sx == 1) || (n == 0 && sy == 1)) {
                        continue;
                    }
                    const F fx = sx ? F::sine(m) : F::cosine(m);
                    const F fy = sy ? F::sine(n) : F::cosine(n);
                    t += ScalarExpr::term(rng() / (1.0 + m * m + n * n), fx, fy, F::one());
                }
            }
        }
    }
    return t;
}

ScalarExpr random_z_poly(SeededUniform& rng, int degree) {
    ScalarExpr p;
    for (int k = 0; k <= degree; ++k) {
        p += mono(rng(), 0, 0, k);
    }
    return p;
}

double zeta_or_default(const CatalogParams& p) {
    if (!(p.zeta > 0.0)) {
        throw Error(Errc::NonpositiveSlipLength, "catalog field needs zeta > 0");
    }
    return p.zeta;
}

AnalyticField scaled(AnalyticField f, double amplitude) {
    if (amplitude != 1.0) {
        f *= amplitude;
    }
    return f;
}

} // namespace

SeededUniform::SeededUniform(std::uint64_t seed) : engine_(seed) {}

double SeededUniform::operator()() {
    // 53 random mantissa bits mapped to [-1, 1).
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
}

ScalarExpr levelset_expr(const Surface& surface) {
    switch (surface.kind()) {
    case SurfaceKind::UnitSphere:
        return mono(1, 2, 0, 0) + mono(1, 0, 2, 0) + mono(1, 0, 0, 2) - ScalarExpr::constant(1.0);
    case SurfaceKind::Sphere:
    case SurfaceKind::Ellipsoid: {
        const Vec3 a = surface.semi_axes();
        return mono(1.0 / (a.x() * a.x()), 2, 0, 0) + mono(1.0 / (a.y() * a.y()), 0, 2, 0) +
               mono(1.0 / (a.z() * a.z()), 0, 0, 2) - ScalarExpr::constant(1.0);
    }
    case SurfaceKind::FlatWall:
        return mono(surface.orientation(), 0, 0, 1) - ScalarExpr::constant(surface.orientation() * surface.z0());
    }
    return {};
}

std::vector<std::string> catalog_names() {
    return {"zero",          "rigid_rotation",  "radial",       "gradient_field",  "shear_z",
            "sin_z",         "solenoidal_poly", "tangent_poly", "navier_ball",     "channel_robin_mode",
            "robin_shear",   "robin_cells",     "exp_profile",  "taylor_green",    "taylor_green_2d",
            "channel_solenoidal", "slip_commutation"};
}

AnalyticField catalog_field(std::string_view name, const CatalogParams& p) {
    const ScalarExpr half_r2 = mono(0.5, 2, 0, 0) + mono(0.5, 0, 2, 0) + mono(0.5, 0, 0, 2);

    if (name == "zero") {
        return AnalyticField::zero();
    }
    if (name == "rigid_rotation") {
        // a x x
        const Vec3 a = p.axis;
        std::array<ScalarExpr, 3> c{
            mono(a.y(), 0, 0, 1) - mono(a.z(), 0, 1, 0),
            mono(a.z(), 1, 0, 0) - mono(a.x(), 0, 0, 1),
            mono(a.x(), 0, 1, 0) - mono(a.y(), 1, 0, 0),
        };
        return scaled(AnalyticField(std::move(c), "rigid_rotation", true), p.amplitude);
    }
    if (name == "radial") {
        return scaled(gradient_of(half_r2, "radial"), p.amplitude);
    }
    if (name == "gradient_field") {
        return scaled(gradient_of(p.potential.value_or(half_r2), "gradient_field"), p.amplitude);
    }
    if (name == "shear_z") {
        return scaled(AnalyticField({mono(1, 0, 0, 1), {}, {}}, "shear_z", true), p.amplitude);
    }
    if (name == "sin_z") {
        return scaled(AnalyticField({ScalarExpr::term(1, F::one(), F::one(), F::sine(1)), {}, {}}, "sin_z", true),
                      p.amplitude);
    }
    if (name == "solenoidal_poly") {
        SeededUniform rng(p.seed);
        std::array<ScalarExpr, 3> a{random_polynomial(rng, p.degree + 1), random_polynomial(rng, p.degree + 1),
                                    random_polynomial(rng, p.degree + 1)};
        const AnalyticField potential(std::move(a), "potential");
        return scaled(potential.curl().relabeled("solenoidal_poly"), p.amplitude);
    }
    if (name == "tangent_poly") {
        const Surface surface = p.surface.value_or(Surface::unit_sphere());
        SeededUniform rng(p.seed);
        const ScalarExpr phi = random_polynomial(rng, p.degree);
        return scaled(cross_of_gradients(phi, levelset_expr(surface), "tangent_poly"), p.amplitude);
    }
    if (name == "navier_ball") {
        // h(r^2) (grad Y x x) with Y harmonic of degree l; the Navier condition on
        // the unit sphere reduces to h(1) (1 + zeta (l - 1)) + zeta h'(1) = 0.
        const double zeta = zeta_or_default(p);
        SeededUniform rng(p.seed);
        const int lmax = std::clamp(p.degree, 1, 3);
        AnalyticField total = AnalyticField::zero();
        for (int l = 1; l <= lmax; ++l) {
            ScalarExpr y;
            for (const auto& b : harmonic_basis(l)) {
                y += rng() * b;
            }
            const double beta = 1.0;
            const double alpha = -beta - 2.0 * zeta * beta / (1.0 + zeta * (l - 1));
            const ScalarExpr h = ScalarExpr::constant(alpha) + 2.0 * beta * half_r2;
            const AnalyticField w = cross_of_gradients(y, half_r2, "w");
            total += AnalyticField({h * w.component(0), h * w.component(1), h * w.component(2)}, "h_w", true);
        }
        return scaled(total.relabeled("navier_ball"), p.amplitude);
    }
    if (name == "channel_robin_mode") {
        const double lambda = robin_root(zeta_or_default(p), p.root);
        return scaled(AnalyticField({ScalarExpr::term(1, F::one(), F::one(), F::cosine(lambda)), {}, {}},
                                    "channel_robin_mode", true),
                      p.amplitude);
    }
    if (name == "robin_shear") {
        const double zeta = zeta_or_default(p);
        const double l0 = robin_root(zeta, 0);
        const double l1 = robin_root(zeta, 1);
        return scaled(AnalyticField({ScalarExpr::term(1, F::one(), F::one(), F::cosine(l0)),
                                     ScalarExpr::term(0.5, F::one(), F::one(), F::cosine(l1)), {}},
                                    "robin_shear", true),
                      p.amplitude);
    }
    if (name == "robin_cells") {
        // divergence-free, tangent, Robin at both walls, with a nonzero nonlinear term
        const double zeta = zeta_or_default(p);
        const double l0 = robin_root(zeta, 0);
        const double l1 = robin_root(zeta, 1);
        return scaled(AnalyticField({ScalarExpr::term(1, F::one(), F::sine(1), F::cosine(l0)),
                                     ScalarExpr::term(0.5, F::sine(1), F::one(), F::cosine(l1)), {}},
                                    "robin_cells", true),
                      p.amplitude);
    }
    if (name == "exp_profile") {
        const double zeta = zeta_or_default(p);
        const Surface wall = p.surface.value_or(Surface::flat_wall(1.0, 1));
        const double o = wall.orientation();
        const double c = std::exp(o * wall.z0() / zeta);
        return scaled(AnalyticField({ScalarExpr::term(c, F::one(), F::one(), F::exponential(-o / zeta)), {}, {}},
                                    "exp_profile", true),
                      p.amplitude);
    }
    if (name == "taylor_green") {
        return scaled(AnalyticField({ScalarExpr::term(1, F::sine(1), F::cosine(1), F::cosine(1)),
                                     ScalarExpr::term(-1, F::cosine(1), F::sine(1), F::cosine(1)), {}},
                                    "taylor_green", true),
                      p.amplitude);
    }
    if (name == "taylor_green_2d") {
        return scaled(AnalyticField({ScalarExpr::term(1, F::sine(1), F::cosine(1), F::one()),
                                     ScalarExpr::term(-1, F::cosine(1), F::sine(1), F::one()), {}},
                                    "taylor_green_2d", true),
                      p.amplitude);
    }
    if (name == "channel_solenoidal") {
        // curl A with A_x, A_y vanishing on z = +-1, so u_z = 0 on both walls.
        SeededUniform rng(p.seed);
        const ScalarExpr bubble = ScalarExpr::constant(1.0) - mono(1, 0, 0, 2);
        const int deg = std::max(p.degree - 2, 0);
        std::array<ScalarExpr, 3> a{
            bubble * random_z_poly(rng, deg) * random_trig(rng, 2),
            bubble * random_z_poly(rng, deg) * random_trig(rng, 2),
            random_z_poly(rng, deg) * random_trig(rng, 2),
        };
        const AnalyticField potential(std::move(a), "potential");
        return scaled(potential.curl().relabeled("channel_solenoidal"), p.amplitude);
    }
    if (name == "slip_commutation") {
        // (sin x g(z), cos y g(z), 0), g(z) = exp(-(z - 1)).
        const double e = std::exp(1.0);
        return scaled(AnalyticField({ScalarExpr::term(e, F::sine(1), F::one(), F::exponential(-1)),
                                     ScalarExpr::term(e, F::one(), F::cosine(1), F::exponential(-1)), {}},
                                    "slip_commutation", false),
                      p.amplitude);
    }
    throw Error(Errc::UnknownCatalogName, std::string(name));
}

} // namespace navslip
