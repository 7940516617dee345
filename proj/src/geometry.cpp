#include "navslip/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "navslip/error.hpp"
#include "navslip/quadrature.hpp"

namespace navslip {

Surface Surface::unit_sphere() {
    Surface s;
    s.kind_ = SurfaceKind::UnitSphere;
    return s;
}

Surface Surface::sphere(double radius) {
    if (!(radius > 0.0)) {
        throw Error(Errc::DomainError, "sphere radius must be positive");
    }
    Surface s;
    s.kind_ = SurfaceKind::Sphere;
    s.axes_ = Vec3::Constant(radius);
    return s;
}

Surface Surface::ellipsoid(double a, double b, double c) {
    if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
        throw Error(Errc::DomainError, "ellipsoid semi-axes must be positive");
    }
    Surface s;
    s.kind_ = SurfaceKind::Ellipsoid;
    s.axes_ = Vec3(a, b, c);
    return s;
}

Surface Surface::flat_wall(double z0, int orientation, double lx, double ly) {
    if (orientation != 1 && orientation != -1) {
        throw Error(Errc::DomainError, "flat wall orientation must be +1 or -1");
    }
    Surface s;
    s.kind_ = SurfaceKind::FlatWall;
    s.z0_ = z0;
    s.orientation_ = orientation;
    s.lx_ = lx;
    s.ly_ = ly;
    return s;
}

std::string Surface::name() const {
    std::ostringstream os;
    switch (kind_) {
    case SurfaceKind::UnitSphere: os << "unit_sphere"; break;
    case SurfaceKind::Sphere: os << "sphere(" << axes_.x() << ")"; break;
    case SurfaceKind::Ellipsoid:
        os << "ellipsoid(" << axes_.x() << "," << axes_.y() << "," << axes_.z() << ")";
        break;
    case SurfaceKind::FlatWall:
        os << "flat_wall(z0=" << z0_ << ",orientation=" << orientation_ << ")";
        break;
    }
    return os.str();
}

double Surface::levelset(const Vec3& x) const {
    switch (kind_) {
    case SurfaceKind::UnitSphere: return x.squaredNorm() - 1.0;
    case SurfaceKind::Sphere: return x.squaredNorm() - axes_.x() * axes_.x();
    case SurfaceKind::Ellipsoid: return x.cwiseQuotient(axes_).squaredNorm() - 1.0;
    case SurfaceKind::FlatWall: return orientation_ * (x.z() - z0_);
    }
    return 0.0;
}

Vec3 Surface::levelset_gradient(const Vec3& x) const {
    switch (kind_) {
    case SurfaceKind::UnitSphere:
    case SurfaceKind::Sphere: return 2.0 * x;
    case SurfaceKind::Ellipsoid: return 2.0 * x.cwiseQuotient(axes_.cwiseProduct(axes_));
    case SurfaceKind::FlatWall: return Vec3(0.0, 0.0, orientation_);
    }
    return Vec3::Zero();
}

Mat3 Surface::levelset_hessian(const Vec3& /*x*/) const {
    switch (kind_) {
    case SurfaceKind::UnitSphere:
    case SurfaceKind::Sphere: return 2.0 * Mat3::Identity();
    case SurfaceKind::Ellipsoid:
        return (2.0 * axes_.cwiseProduct(axes_).cwiseInverse()).asDiagonal();
    case SurfaceKind::FlatWall: return Mat3::Zero();
    }
    return Mat3::Zero();
}

bool Surface::contains(const Vec3& x, double tol) const { return std::abs(levelset(x)) < tol; }

namespace {

void require_on_surface(const Surface& surface, const Vec3& x) {
    if (!surface.contains(x)) {
        std::ostringstream os;
        os << "point (" << x.x() << ", " << x.y() << ", " << x.z() << ") is not on " << surface.name()
           << " (levelset " << surface.levelset(x) << ")";
        throw Error(Errc::PointOffSurface, os.str());
    }
}

void require_tangent(const Vec3& n, const Vec3& v) {
    if (std::abs(v.dot(n)) >= kSurfaceTolerance * std::max(1.0, v.norm())) {
        throw Error(Errc::NotTangent, "vector has normal component " + std::to_string(v.dot(n)));
    }
}

} // namespace

Vec3 extended_normal(const Surface& surface, const Vec3& x) {
    const Vec3 g = surface.levelset_gradient(x);
    const double gn = g.norm();
    if (!(gn > 0.0)) {
        throw Error(Errc::DomainError, "degenerate levelset gradient");
    }
    return g / gn;
}

Vec3 normal(const Surface& surface, const Vec3& x) {
    require_on_surface(surface, x);
    return extended_normal(surface, x);
}

Mat3 extended_normal_jacobian(const Surface& surface, const Vec3& x) {
    const Vec3 g = surface.levelset_gradient(x);
    const double gn = g.norm();
    const Vec3 n = g / gn;
    const Mat3 proj = Mat3::Identity() - n * n.transpose();
    return proj * surface.levelset_hessian(x) / gn;
}

Mat3 shape_matrix(const Surface& surface, const Vec3& x) {
    const Vec3 n = extended_normal(surface, x);
    const Mat3 proj = Mat3::Identity() - n * n.transpose();
    return -extended_normal_jacobian(surface, x) * proj;
}

TangentFrame tangent_frame(const Surface& surface, const Vec3& x) {
    TangentFrame frame;
    frame.point = x;
    frame.n = normal(surface, x);
    // Axis least aligned with n; ties go to the lower index.
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(frame.n[i]) < std::abs(frame.n[best])) {
            best = i;
        }
    }
    const Vec3 axis = Vec3::Unit(best);
    frame.e1 = (axis - axis.dot(frame.n) * frame.n).normalized();
    frame.e2 = frame.n.cross(frame.e1);
    return frame;
}

Vec3 shape_operator(const Surface& surface, const Vec3& x, const Vec3& v) {
    const Vec3 n = normal(surface, x);
    require_tangent(n, v);
    return shape_matrix(surface, x) * v;
}

double second_fundamental_form(const Surface& surface, const Vec3& x, const Vec3& v, const Vec3& w) {
    return shape_operator(surface, x, v).dot(w);
}

Curvatures curvatures(const Surface& surface, const Vec3& x) {
    const TangentFrame f = tangent_frame(surface, x);
    const Mat3 s = shape_matrix(surface, x);
    Eigen::Matrix2d m;
    m << f.e1.dot(s * f.e1), f.e1.dot(s * f.e2), f.e2.dot(s * f.e1), f.e2.dot(s * f.e2);
    return Curvatures{m.determinant(), m.trace()};
}

Vec3 tangential_project(const TangentFrame& frame, const Vec3& v) {
    return v - v.dot(frame.n) * frame.n;
}

Vec3 rotate_tangent(const TangentFrame& frame, const Vec3& v) {
    require_tangent(frame.n, v);
    return frame.n.cross(v);
}

SurfaceRule surface_rule(const Surface& surface, int n1, int n2) {
    SurfaceRule rule;
    rule.n1 = n1;
    rule.n2 = n2;
    rule.points.reserve(static_cast<std::size_t>(n1) * n2);
    rule.weights.reserve(static_cast<std::size_t>(n1) * n2);
    if (surface.is_flat()) {
        const auto gx = quad::gauss_legendre(n1, 0.0, surface.extent_x());
        const auto gy = quad::gauss_legendre(n2, 0.0, surface.extent_y());
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                rule.points.emplace_back(gx.nodes[i], gy.nodes[j], surface.z0());
                rule.weights.push_back(gx.weights[i] * gy.weights[j]);
            }
        }
        return rule;
    }
    const Vec3 ax = surface.semi_axes();
    const double a = ax.x();
    const double b = ax.y();
    const double c = ax.z();
    const auto gt = quad::gauss_legendre(n1);
    const auto gp = quad::trapezoid_periodic(n2, 0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < n1; ++i) {
        const double t = gt.nodes[i];
        const double s = std::sqrt(1.0 - t * t);
        for (int j = 0; j < n2; ++j) {
            const double cp = std::cos(gp.nodes[j]);
            const double sp = std::sin(gp.nodes[j]);
            // |x_theta x x_phi| / sin(theta), the area density in (cos theta, phi).
            const double density = std::sqrt(b * b * c * c * s * s * cp * cp + a * a * c * c * s * s * sp * sp +
                                              a * a * b * b * t * t);
            rule.points.emplace_back(a * s * cp, b * s * sp, c * t);
            rule.weights.push_back(gt.weights[i] * gp.weights[j] * density);
        }
    }
    return rule;
}

double surface_quadrature(const Surface& surface, const std::function<double(const Vec3&)>& f, int n1,
                          int n2) {
    const SurfaceRule rule = surface_rule(surface, n1, n2);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
        sum += rule.weights[i] * f(rule.points[i]);
    }
    return sum;
}

} // namespace navslip
