#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "navslip/analytic.hpp"

namespace navslip {

enum class Condition { Kinematic, NavierClassical, NavierGeometric, SlipType, IteratedNavier };

std::string condition_name(Condition c);

/// Curvature-term sign of the geometric Navier form, with II = -grad n. Fixed by
/// equivalence_check against the classical condition; the tests pin it.
inline constexpr int kNavierSign = -1;

struct BCResidualReport {
    Condition condition = Condition::Kinematic;
    int order = 0;  // IteratedNavier only
    double max_residual = 0.0;
    double mean_residual = 0.0;
    std::size_t samples = 0;
    int sign_sigma = 0;  // geometric forms only, 0 otherwise
    std::string surface;
    std::string field;
    /// IteratedNavier on fields tangent in a collar: max deviation of the
    /// commutation identity, NaN when not evaluated.
    double commutation_deviation = 0.0;
};

/// Quadrature nodes of the surface rule, used as the default sample set.
std::vector<Vec3> default_samples(const Surface& surface, int n1 = 16, int n2 = 32);

/// Classical residual c = pi(u) + 2 zeta pi(Du n) at one point.
Vec3 navier_classical_vector(const AnalyticField& u, const Surface& surface, double zeta, const Vec3& x);

/// Geometric residual g = pi(omega) + (1/zeta) R pi(u) - 2 sigma R S pi(u) at one point.
Vec3 navier_geometric_vector(const AnalyticField& u, const Surface& surface, double zeta, int sigma, const Vec3& x);

BCResidualReport kinematic_residual(const AnalyticField& u, const Surface& surface, const std::vector<Vec3>& samples);
BCResidualReport navier_classical_residual(const AnalyticField& u, const Surface& surface, double zeta,
                                           const std::vector<Vec3>& samples);
BCResidualReport navier_geometric_residual(const AnalyticField& u, const Surface& surface, double zeta, int sigma,
                                           const std::vector<Vec3>& samples);
BCResidualReport slip_type_residual(const AnalyticField& u, const Surface& surface, const std::vector<Vec3>& samples);

struct EquivalenceResult {
    /// +1 or -1 when exactly one sign satisfies g = (1/zeta) R c; 0 when both do
    /// (flat walls, where the curvature term vanishes).
    int sigma = 0;
    double max_deviation = 0.0;  // for the selected sign (either, when sigma = 0)
    double deviation_plus = 0.0;
    double deviation_minus = 0.0;
    bool accepts_plus = false;
    bool accepts_minus = false;
    std::size_t fields = 0;
    std::size_t samples = 0;
    std::string surface;
    double zeta = 0.0;
};

/// Deviations are measured relative to 1 + |u| + |grad u| at each sample and
/// accepted below `tol`. Throws PreconditionViolated if a corpus field is not
/// tangent, NoConsistentSign if neither sign fits.
EquivalenceResult equivalence_check(const Surface& surface, double zeta, const std::vector<AnalyticField>& corpus,
                                    const std::vector<Vec3>& samples, double tol = 1e-8);

/// Sign accepted by every result. Returns 0 only if every result accepts both.
/// Throws NoConsistentSign when the accepted sets do not intersect.
int consistent_sign(const std::vector<EquivalenceResult>& results);

/// Order-r residual
///   pi(curl^{r+1} u) + (1/zeta) R pi(curl^r u) - 2 sigma R pi(curl^r (S pi u)).
/// Throws BaseConditionViolated if the r = 0 residual exceeds base_tol. On
/// curved surfaces the curvature term for r >= 1 is differentiated numerically
/// (r <= 3). When `check_commutation` is set the identity
/// pi curl R pi V = R pi curl V is also evaluated for V = u.
BCResidualReport iterated_navier_residual(const AnalyticField& u, const Surface& surface, double zeta, int sigma,
                                          int r, const std::vector<Vec3>& samples, bool check_commutation = false,
                                          double base_tol = 1e-8);

/// max over samples of |pi curl R pi V - R pi curl V|.
double commutation_deviation(const AnalyticField& v, const Surface& surface, const std::vector<Vec3>& samples);

using PointField = std::function<Vec3(const Vec3&)>;

/// Fourth-order central-difference curl of a pointwise field.
Vec3 numeric_curl(const PointField& f, const Vec3& x, double h = 1e-3);

} // namespace navslip
