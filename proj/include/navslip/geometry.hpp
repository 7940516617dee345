#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace navslip {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Points with |levelset| below this are considered on the surface.
inline constexpr double kSurfaceTolerance = 1e-10;

enum class SurfaceKind { UnitSphere, Sphere, Ellipsoid, FlatWall };

/// Analytic boundary surface given as the zero set of a levelset with exact
/// gradient and Hessian. For closed surfaces the gradient points outward; for
/// flat walls the normal is orientation * e_z.
class Surface {
public:
    static Surface unit_sphere();
    static Surface sphere(double radius);
    static Surface ellipsoid(double a, double b, double c);
    /// Plane z = z0 with outward normal orientation * e_z, sampled over
    /// [0, lx) x [0, ly) for quadrature.
    static Surface flat_wall(double z0, int orientation, double lx = 2.0 * 3.14159265358979323846,
                             double ly = 2.0 * 3.14159265358979323846);

    SurfaceKind kind() const noexcept { return kind_; }
    bool is_flat() const noexcept { return kind_ == SurfaceKind::FlatWall; }
    std::string name() const;

    double levelset(const Vec3& x) const;
    Vec3 levelset_gradient(const Vec3& x) const;
    Mat3 levelset_hessian(const Vec3& x) const;

    const Vec3& semi_axes() const noexcept { return axes_; }
    double z0() const noexcept { return z0_; }
    int orientation() const noexcept { return orientation_; }
    double extent_x() const noexcept { return lx_; }
    double extent_y() const noexcept { return ly_; }

    bool contains(const Vec3& x, double tol = kSurfaceTolerance) const;

private:
    SurfaceKind kind_ = SurfaceKind::UnitSphere;
    Vec3 axes_ = Vec3::Ones();
    double z0_ = 0.0;
    int orientation_ = 1;
    double lx_ = 0.0;
    double ly_ = 0.0;
};

/// Orthonormal frame adapted to the surface: e1 x e2 = n.
struct TangentFrame {
    Vec3 point;
    Vec3 e1;
    Vec3 e2;
    Vec3 n;
};

struct Curvatures {
    double gauss = 0.0;
    double mean = 0.0;
};

/// Outward unit normal at a surface point. Throws PointOffSurface.
Vec3 normal(const Surface& surface, const Vec3& x);

/// Unit gradient field grad(phi)/|grad(phi)|, valid off the surface as well.
Vec3 extended_normal(const Surface& surface, const Vec3& x);

/// Jacobian of the extended normal field, d n_i / d x_j.
Mat3 extended_normal_jacobian(const Surface& surface, const Vec3& x);

TangentFrame tangent_frame(const Surface& surface, const Vec3& x);

/// S(v) = -(v . grad) n for a tangent v.
Vec3 shape_operator(const Surface& surface, const Vec3& x, const Vec3& v);

/// Matrix of S acting on tangent vectors, -P (grad n) P with P the tangential
/// projector. Evaluated without the on-surface check.
Mat3 shape_matrix(const Surface& surface, const Vec3& x);

/// II(v, w) = S(v) . w.
double second_fundamental_form(const Surface& surface, const Vec3& x, const Vec3& v, const Vec3& w);

Curvatures curvatures(const Surface& surface, const Vec3& x);

Vec3 tangential_project(const TangentFrame& frame, const Vec3& v);

/// n x V, the quarter turn in the tangent plane. Throws NotTangent.
Vec3 rotate_tangent(const TangentFrame& frame, const Vec3& v);

struct SurfaceRule {
    std::vector<Vec3> points;
    std::vector<double> weights;
    int n1 = 0;
    int n2 = 0;
};

/// Product Gauss-Legendre(cos theta) x trapezoid(phi) rule on spheres and
/// ellipsoids; tensor Gauss-Legendre on flat walls.
SurfaceRule surface_rule(const Surface& surface, int n1 = 64, int n2 = 128);

double surface_quadrature(const Surface& surface, const std::function<double(const Vec3&)>& f,
                          int n1 = 64, int n2 = 128);

} // namespace navslip
