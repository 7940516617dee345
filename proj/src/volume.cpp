#include "navslip/volume.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "navslip/error.hpp"
#include "navslip/quadrature.hpp"

namespace navslip {

VolumeDomain VolumeDomain::unit_ball() { return VolumeDomain{}; }

VolumeDomain VolumeDomain::solid_ellipsoid(double a, double b, double c) {
    VolumeDomain d;
    d.axes = Vec3(a, b, c);
    return d;
}

VolumeDomain VolumeDomain::channel_cell(double lx, double ly) {
    VolumeDomain d;
    d.kind = VolumeKind::ChannelCell;
    d.lx = lx;
    d.ly = ly;
    d.lz = 2.0;
    return d;
}

VolumeDomain VolumeDomain::periodic_box(double l) {
    VolumeDomain d;
    d.kind = VolumeKind::PeriodicBox;
    d.lx = d.ly = d.lz = l;
    return d;
}

std::vector<Surface> VolumeDomain::boundary() const {
    switch (kind) {
    case VolumeKind::Ball:
        if (axes == Vec3::Ones()) {
            return {Surface::unit_sphere()};
        }
        return {Surface::ellipsoid(axes.x(), axes.y(), axes.z())};
    case VolumeKind::ChannelCell:
        return {Surface::flat_wall(1.0, 1, lx, ly), Surface::flat_wall(-1.0, -1, lx, ly)};
    case VolumeKind::PeriodicBox: return {};
    }
    return {};
}

std::string VolumeDomain::name() const {
    std::ostringstream os;
    switch (kind) {
    case VolumeKind::Ball:
        if (axes == Vec3::Ones()) {
            os << "unit_ball";
        } else {
            os << "solid_ellipsoid(" << axes.x() << "," << axes.y() << "," << axes.z() << ")";
        }
        break;
    case VolumeKind::ChannelCell: os << "channel_cell(" << lx << "x" << ly << "x2)"; break;
    case VolumeKind::PeriodicBox: os << "periodic_box(" << lx << ")"; break;
    }
    return os.str();
}

VolumeRule volume_rule(const VolumeDomain& domain, int n1, int n2, int n3) {
    VolumeRule rule;
    std::ostringstream os;
    os << domain.name() << " " << n1 << "x" << n2 << "x" << n3;
    rule.descriptor = os.str();
    const std::size_t total = static_cast<std::size_t>(n1) * n2 * n3;
    rule.points.reserve(total);
    rule.weights.reserve(total);

    switch (domain.kind) {
    case VolumeKind::Ball: {
        const auto gr = quad::gauss_legendre(n1, 0.0, 1.0);
        const auto gt = quad::gauss_legendre(n2);
        const auto gp = quad::trapezoid_periodic(n3, 0.0, 2.0 * std::numbers::pi);
        const double jac = domain.axes.prod();
        for (int i = 0; i < n1; ++i) {
            const double r = gr.nodes[i];
            for (int j = 0; j < n2; ++j) {
                const double t = gt.nodes[j];
                const double s = std::sqrt(1.0 - t * t);
                for (int k = 0; k < n3; ++k) {
                    const Vec3 dir(s * std::cos(gp.nodes[k]), s * std::sin(gp.nodes[k]), t);
                    rule.points.push_back(domain.axes.cwiseProduct(r * dir));
                    rule.weights.push_back(jac * r * r * gr.weights[i] * gt.weights[j] * gp.weights[k]);
                }
            }
        }
        break;
    }
    case VolumeKind::ChannelCell:
    case VolumeKind::PeriodicBox: {
        const auto gx = quad::trapezoid_periodic(n1, 0.0, domain.lx);
        const auto gy = quad::trapezoid_periodic(n2, 0.0, domain.ly);
        const auto gz = (domain.kind == VolumeKind::ChannelCell) ? quad::gauss_legendre(n3, -1.0, 1.0)
                                                                  : quad::trapezoid_periodic(n3, 0.0, domain.lz);
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                for (int k = 0; k < n3; ++k) {
                    rule.points.emplace_back(gx.nodes[i], gy.nodes[j], gz.nodes[k]);
                    rule.weights.push_back(gx.weights[i] * gy.weights[j] * gz.weights[k]);
                }
            }
        }
        break;
    }
    }
    return rule;
}

BoundaryRule boundary_rule(const VolumeDomain& domain, int n1, int n2) {
    BoundaryRule rule;
    std::ostringstream os;
    os << "boundary " << n1 << "x" << n2;
    rule.descriptor = os.str();
    const auto pieces = domain.boundary();
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const SurfaceRule sr = surface_rule(pieces[p], n1, n2);
        for (std::size_t i = 0; i < sr.points.size(); ++i) {
            rule.points.push_back(sr.points[i]);
            rule.normals.push_back(extended_normal(pieces[p], sr.points[i]));
            rule.weights.push_back(sr.weights[i]);
            rule.piece.push_back(static_cast<int>(p));
        }
    }
    return rule;
}

double integrate(const VolumeRule& rule, const std::function<double(const Vec3&)>& f) {
    double total = 0.0;
    for (std::size_t i = 0; i < rule.points.size(); ++i) {
        total += rule.weights[i] * f(rule.points[i]);
    }
    return total;
}

namespace {

double partial_norm_sq(const AnalyticField& u, const std::array<int, 3>& alpha, const VolumeRule& rule) {
    return integrate(rule, [&](const Vec3& x) {
        double s = 0.0;
        for (int c = 0; c < 3; ++c) {
            const double v = u.derivative_value(c, x, alpha);
            s += v * v;
        }
        return s;
    });
}

} // namespace

SobolevNorm sobolev_norm(const AnalyticField& u, int r, const VolumeRule& rule) {
    if (r < 0) {
        throw Error(Errc::OrderTooHigh, "negative Sobolev order");
    }
    SobolevNorm out;
    out.order = r;
    out.variant = "multi_index";
    double total = 0.0;
    for (int l = 0; l <= r; ++l) {
        double part = 0.0;
        for (const auto& alpha : multi_indices(l)) {
            part += partial_norm_sq(u, alpha, rule);
        }
        out.breakdown.push_back(part);
        total += part;
    }
    out.value = std::sqrt(total);
    return out;
}

SobolevNorm curl_sobolev_norm(const AnalyticField& u, int r, const VolumeRule& rule) {
    if (r < 0) {
        throw Error(Errc::OrderTooHigh, "negative curl order");
    }
    SobolevNorm out;
    out.order = r;
    out.variant = "curl";
    AnalyticField q = u;
    double total = 0.0;
    for (int l = 0; l <= r; ++l) {
        const double part = partial_norm_sq(q, {0, 0, 0}, rule);
        out.breakdown.push_back(part);
        total += part;
        if (l < r) {
            q = q.curl();
        }
    }
    out.value = std::sqrt(total);
    return out;
}

double derivative_tensor_norm_sq(const AnalyticField& u, int k, const VolumeRule& rule) {
    double total = 0.0;
    for (const auto& alpha : multi_indices(k)) {
        total += multinomial(alpha) * partial_norm_sq(u, alpha, rule);
    }
    return total;
}

} // namespace navslip
