#pragma once

#include <string>
#include <vector>

#include "navslip/analytic.hpp"
#include "navslip/spectral.hpp"

namespace navslip {

enum class VolumeKind { Ball, ChannelCell, PeriodicBox };

/// Volume region for analytic-field integrals: a ball (or the solid ellipsoid
/// it maps to), a periodic channel cell [0, lx) x [0, ly) x [-1, 1], or a fully
/// periodic box [0, l)^3.
struct VolumeDomain {
    VolumeKind kind = VolumeKind::Ball;
    Vec3 axes = Vec3::Ones();
    double lx = 0.0;
    double ly = 0.0;
    double lz = 0.0;

    static VolumeDomain unit_ball();
    static VolumeDomain solid_ellipsoid(double a, double b, double c);
    static VolumeDomain channel_cell(double lx, double ly);
    static VolumeDomain periodic_box(double l);

    /// Boundary pieces; periodic faces are omitted.
    std::vector<Surface> boundary() const;
    std::string name() const;
};

struct VolumeRule {
    std::vector<Vec3> points;
    std::vector<double> weights;
    std::string descriptor;
};

/// Ball: Gauss-Legendre in radius (n1) times the sphere rule (n2 x n3).
/// Channel: trapezoid in x (n1) and y (n2), Gauss-Legendre in z (n3).
/// Box: trapezoid in all three directions.
VolumeRule volume_rule(const VolumeDomain& domain, int n1, int n2, int n3);

/// Boundary rule for every boundary piece, concatenated; normals are taken from
/// the owning surface.
struct BoundaryRule {
    std::vector<Vec3> points;
    std::vector<Vec3> normals;
    std::vector<double> weights;
    std::vector<int> piece;
    std::string descriptor;
};

BoundaryRule boundary_rule(const VolumeDomain& domain, int n1, int n2);

double integrate(const VolumeRule& rule, const std::function<double(const Vec3&)>& f);

/// Analytic counterparts of the spectral norms, by quadrature.
SobolevNorm sobolev_norm(const AnalyticField& u, int r, const VolumeRule& rule);
SobolevNorm curl_sobolev_norm(const AnalyticField& u, int r, const VolumeRule& rule);
double derivative_tensor_norm_sq(const AnalyticField& u, int k, const VolumeRule& rule);

} // namespace navslip
