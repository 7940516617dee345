#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "navslip/analytic.hpp"

namespace navslip {

struct CatalogParams {
    std::uint64_t seed = 42;
    int degree = 4;
    double zeta = 1.0;
    int root = 0;
    Vec3 axis = Vec3::UnitZ();
    double amplitude = 1.0;
    std::optional<Surface> surface;
    std::optional<ScalarExpr> potential;
};

/// Named test fields with exact derivatives. Throws UnknownCatalogName.
///
///   zero, rigid_rotation, radial, gradient_field, shear_z, sin_z,
///   solenoidal_poly      curl of a seeded random polynomial potential
///   tangent_poly         grad(phi) x grad(levelset), tangent to `surface`
///   navier_ball          tangent to the unit sphere and satisfying the Navier
///                        condition there for slip length `zeta`
///   channel_robin_mode   (cos(lambda z), 0, 0), lambda tan(lambda) = 1 / zeta
///   robin_shear          two Robin shear profiles, steady under Euler
///   robin_cells          (cos(l0 z) sin y, cos(l1 z) sin x / 2, 0), Robin at both walls
///   exp_profile          (exp(-o (z - z0) / zeta), 0, 0) for a flat wall
///   taylor_green, taylor_green_2d, channel_solenoidal, slip_commutation
AnalyticField catalog_field(std::string_view name, const CatalogParams& params = {});

std::vector<std::string> catalog_names();

/// Uniform double in [-1, 1) from a 64-bit Mersenne twister; stable across
/// standard libraries.
class SeededUniform {
public:
    explicit SeededUniform(std::uint64_t seed);
    double operator()();

private:
    std::mt19937_64 engine_;
};

/// Levelset of a polynomial surface as an expression.
ScalarExpr levelset_expr(const Surface& surface);

} // namespace navslip
