#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "navslip/analytic.hpp"
#include "navslip/volume.hpp"

namespace navslip {

struct IdentityReport {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::string resolution;
    /// Named intermediate quantities, in insertion order.
    std::vector<std::pair<std::string, double>> terms;

    static IdentityReport make(std::string name, double lhs, double rhs, std::string resolution);
    double term(const std::string& key) const;
};

/// Node counts: volume (n1, n2, n3) and boundary (s1, s2).
struct Resolution {
    int n1 = 48, n2 = 48, n3 = 48;
    int s1 = 64, s2 = 128;

    Resolution doubled() const { return {2 * n1, 2 * n2, 2 * n3, 2 * s1, 2 * s2}; }
};

/// ||grad u||^2 = ||curl u||^2 + int_boundary II(u, u). Throws
/// PreconditionViolated (naming the failed checks) unless u is divergence-free
/// and tangent to the boundary.
IdentityReport divcurl_base_check(const AnalyticField& u, const VolumeDomain& domain, const Resolution& res = {});

struct RatioReport : IdentityReport {
    int r = 0;
    double rho = 0.0;          // lhs / rhs, 0 for the zero field
    double running_max = 0.0;  // filled by divcurl_ratio_corpus
};

/// rho = ||grad^{r+1} u||^2 / sum_{l <= r+1} ||curl^l u||^2. When zeta is given
/// the Navier condition is required on the boundary as well.
RatioReport divcurl_ratio(const AnalyticField& u, const VolumeDomain& domain, int r,
                          std::optional<double> zeta = std::nullopt, const Resolution& res = {});

std::vector<RatioReport> divcurl_ratio_corpus(const std::vector<AnalyticField>& corpus, const VolumeDomain& domain,
                                              int r, std::optional<double> zeta, const Resolution& res = {});

/// Rotational advection identity for u and w, and curl integration by parts
/// int V . curl W = int_boundary (W x V) . n + int curl V . W with V = u, W = w.
std::vector<IdentityReport> vector_identity_checks(const AnalyticField& u, const AnalyticField& w,
                                                   const VolumeDomain& domain, const Resolution& res = {});

/// (u . grad) omega - (omega . grad) u at x.
Vec3 lie_bracket(const AnalyticField& u, const AnalyticField& omega, const Vec3& x);

enum class Verdict { PredictsFailure, Inconclusive };

std::string verdict_name(Verdict v);

struct PersistenceVerdict {
    double div_u0 = 0.0;
    double u0_dot_n = 0.0;
    double omega0_cross_n = 0.0;
    Vec3 bracket = Vec3::Zero();
    double bracket_cross_n_norm = 0.0;
    double gauss_curvature_at_x0 = 0.0;
    double vorticity_norm_at_x0 = 0.0;
    double tolerance = 1e-10;
    Verdict verdict = Verdict::Inconclusive;
};

/// Throws PointOffSurface.
PersistenceVerdict persistence_check(const AnalyticField& u0, const AnalyticField& omega0, const Surface& surface,
                                     const Vec3& x0, double tol = 1e-10);

} // namespace navslip
