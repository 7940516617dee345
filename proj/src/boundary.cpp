#include "navslip/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "navslip/error.hpp"

namespace navslip {

namespace {

void require_positive_zeta(double zeta) {
    if (!(zeta > 0.0)) {
        throw Error(Errc::NonpositiveSlipLength, "slip length must be positive, got " + std::to_string(zeta));
    }
}

BCResidualReport summarise(Condition c, const std::vector<double>& r, const Surface& s, const AnalyticField& u) {
    BCResidualReport rep;
    rep.condition = c;
    rep.samples = r.size();
    rep.surface = s.name();
    rep.field = u.label();
    double sum = 0.0;
    for (double v : r) {
        rep.max_residual = std::max(rep.max_residual, v);
        sum += v;
    }
    rep.mean_residual = r.empty() ? 0.0 : sum / static_cast<double>(r.size());
    return rep;
}

Vec3 project(const Vec3& n, const Vec3& v) { return v - v.dot(n) * n; }

Vec3 curl_from_jacobian(const Mat3& j) { return Vec3(j(2, 1) - j(1, 2), j(0, 2) - j(2, 0), j(1, 0) - j(0, 1)); }

// S(pi u) extended off the surface with the unit-gradient normal.
PointField shape_of_tangent(const AnalyticField& u, const Surface& surface) {
    return [&u, &surface](const Vec3& x) {
        const Vec3 n = extended_normal(surface, x);
        return Vec3(shape_matrix(surface, x) * project(n, u.value(x)));
    };
}

PointField iterate_numeric_curl(PointField f, int r) {
    for (int l = 0; l < r; ++l) {
        f = [g = std::move(f)](const Vec3& x) { return numeric_curl(g, x); };
    }
    return f;
}

// R pi V as an analytic field on a flat wall, where n is constant.
AnalyticField flat_rotated_tangent(const AnalyticField& v, const Surface& wall) {
    const double o = wall.orientation();
    return AnalyticField({-o * v.component(1), o * v.component(0), ScalarExpr{}}, "R_pi_" + v.label());
}

} // namespace

std::string condition_name(Condition c) {
    switch (c) {
    case Condition::Kinematic: return "kinematic";
    case Condition::NavierClassical: return "navier_classical";
    case Condition::NavierGeometric: return "navier_geometric";
    case Condition::SlipType: return "slip_type";
    case Condition::IteratedNavier: return "iterated_navier";
    }
    return "unknown";
}

std::vector<Vec3> default_samples(const Surface& surface, int n1, int n2) {
    return surface_rule(surface, n1, n2).points;
}

Vec3 numeric_curl(const PointField& f, const Vec3& x, double h) {
    Mat3 j;
    for (int a = 0; a < 3; ++a) {
        Vec3 e = Vec3::Zero();
        e[a] = h;
        const Vec3 d = (8.0 * (f(x + e) - f(x - e)) - (f(x + 2.0 * e) - f(x - 2.0 * e))) / (12.0 * h);
        j.col(a) = d;
    }
    return curl_from_jacobian(j);
}

Vec3 navier_classical_vector(const AnalyticField& u, const Surface& surface, double zeta, const Vec3& x) {
    require_positive_zeta(zeta);
    const Vec3 n = normal(surface, x);
    const Mat3 j = u.jacobian(x);
    const Mat3 du = 0.5 * (j + j.transpose());
    return project(n, u.value(x)) + 2.0 * zeta * project(n, du * n);
}

Vec3 navier_geometric_vector(const AnalyticField& u, const Surface& surface, double zeta, int sigma, const Vec3& x) {
    require_positive_zeta(zeta);
    const TangentFrame f = tangent_frame(surface, x);
    const Vec3 omega = curl_from_jacobian(u.jacobian(x));
    const Vec3 ut = tangential_project(f, u.value(x));
    const Vec3 su = shape_operator(surface, x, ut);
    return tangential_project(f, omega) + (1.0 / zeta) * rotate_tangent(f, ut) -
           2.0 * sigma * rotate_tangent(f, tangential_project(f, su));
}

BCResidualReport kinematic_residual(const AnalyticField& u, const Surface& surface, const std::vector<Vec3>& samples) {
    std::vector<double> r;
    r.reserve(samples.size());
    for (const auto& x : samples) {
        r.push_back(std::abs(u.value(x).dot(normal(surface, x))));
    }
    return summarise(Condition::Kinematic, r, surface, u);
}

BCResidualReport navier_classical_residual(const AnalyticField& u, const Surface& surface, double zeta,
                                           const std::vector<Vec3>& samples) {
    require_positive_zeta(zeta);
    std::vector<double> r;
    r.reserve(samples.size());
    for (const auto& x : samples) {
        r.push_back(navier_classical_vector(u, surface, zeta, x).norm());
    }
    return summarise(Condition::NavierClassical, r, surface, u);
}

BCResidualReport navier_geometric_residual(const AnalyticField& u, const Surface& surface, double zeta, int sigma,
                                           const std::vector<Vec3>& samples) {
    require_positive_zeta(zeta);
    std::vector<double> r;
    r.reserve(samples.size());
    for (const auto& x : samples) {
        r.push_back(navier_geometric_vector(u, surface, zeta, sigma, x).norm());
    }
    auto rep = summarise(Condition::NavierGeometric, r, surface, u);
    rep.sign_sigma = sigma;
    return rep;
}

BCResidualReport slip_type_residual(const AnalyticField& u, const Surface& surface, const std::vector<Vec3>& samples) {
    std::vector<double> r;
    r.reserve(samples.size());
    for (const auto& x : samples) {
        const Vec3 omega = curl_from_jacobian(u.jacobian(x));
        r.push_back(omega.cross(normal(surface, x)).norm());
    }
    return summarise(Condition::SlipType, r, surface, u);
}

EquivalenceResult equivalence_check(const Surface& surface, double zeta, const std::vector<AnalyticField>& corpus,
                                    const std::vector<Vec3>& samples, double tol) {
    require_positive_zeta(zeta);
    EquivalenceResult res;
    res.surface = surface.name();
    res.zeta = zeta;
    res.fields = corpus.size();
    res.samples = samples.size();
    double rel_plus = 0.0, rel_minus = 0.0;
    for (const auto& u : corpus) {
        for (const auto& x : samples) {
            const TangentFrame f = tangent_frame(surface, x);
            const Vec3 val = u.value(x);
            const double scale = 1.0 + val.norm() + u.jacobian(x).norm();
            if (std::abs(val.dot(f.n)) > 1e-10 * scale) {
                throw Error(Errc::PreconditionViolated,
                            "corpus field " + u.label() + " is not tangent to " + surface.name());
            }
            const Vec3 target = (1.0 / zeta) * rotate_tangent(f, navier_classical_vector(u, surface, zeta, x));
            const double dp = (navier_geometric_vector(u, surface, zeta, +1, x) - target).norm();
            const double dm = (navier_geometric_vector(u, surface, zeta, -1, x) - target).norm();
            res.deviation_plus = std::max(res.deviation_plus, dp);
            res.deviation_minus = std::max(res.deviation_minus, dm);
            rel_plus = std::max(rel_plus, dp / scale);
            rel_minus = std::max(rel_minus, dm / scale);
        }
    }
    res.accepts_plus = rel_plus < tol;
    res.accepts_minus = rel_minus < tol;
    if (res.accepts_plus && res.accepts_minus) {
        res.sigma = 0;
        res.max_deviation = std::max(res.deviation_plus, res.deviation_minus);
    } else if (res.accepts_plus) {
        res.sigma = +1;
        res.max_deviation = res.deviation_plus;
    } else if (res.accepts_minus) {
        res.sigma = -1;
        res.max_deviation = res.deviation_minus;
    } else {
        throw Error(Errc::NoConsistentSign, "neither curvature sign matches the classical condition on " +
                                                surface.name() + " (deviations " + std::to_string(res.deviation_plus) +
                                                ", " + std::to_string(res.deviation_minus) + ")");
    }
    return res;
}

int consistent_sign(const std::vector<EquivalenceResult>& results) {
    bool plus = true, minus = true;
    for (const auto& r : results) {
        plus = plus && r.accepts_plus;
        minus = minus && r.accepts_minus;
    }
    if (plus && minus) {
        return 0;
    }
    if (plus) {
        return +1;
    }
    if (minus) {
        return -1;
    }
    throw Error(Errc::NoConsistentSign, "surfaces disagree on the curvature-term sign");
}

double commutation_deviation(const AnalyticField& v, const Surface& surface, const std::vector<Vec3>& samples) {
    double worst = 0.0;
    if (surface.is_flat()) {
        const AnalyticField rv = flat_rotated_tangent(v, surface);
        for (const auto& x : samples) {
            const TangentFrame f = tangent_frame(surface, x);
            const Vec3 lhs = tangential_project(f, curl_from_jacobian(rv.jacobian(x)));
            const Vec3 rhs = rotate_tangent(f, tangential_project(f, curl_from_jacobian(v.jacobian(x))));
            worst = std::max(worst, (lhs - rhs).norm());
        }
        return worst;
    }
    const PointField rv = [&v, &surface](const Vec3& x) {
        const Vec3 n = extended_normal(surface, x);
        return Vec3(n.cross(project(n, v.value(x))));
    };
    for (const auto& x : samples) {
        const TangentFrame f = tangent_frame(surface, x);
        const Vec3 lhs = tangential_project(f, numeric_curl(rv, x));
        const Vec3 rhs = rotate_tangent(f, tangential_project(f, curl_from_jacobian(v.jacobian(x))));
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

BCResidualReport iterated_navier_residual(const AnalyticField& u, const Surface& surface, double zeta, int sigma,
                                          int r, const std::vector<Vec3>& samples, bool check_commutation,
                                          double base_tol) {
    require_positive_zeta(zeta);
    if (r < 0) {
        throw Error(Errc::OrderTooHigh, "negative curl order");
    }
    if (!surface.is_flat() && r > 3) {
        throw Error(Errc::OrderTooHigh, "curved-surface iterated residual supports r <= 3");
    }
    for (const auto& x : samples) {
        const double scale = 1.0 + u.value(x).norm() + u.jacobian(x).norm();
        const double g = navier_geometric_vector(u, surface, zeta, sigma, x).norm();
        if (g > base_tol * scale) {
            throw Error(Errc::BaseConditionViolated,
                        u.label() + " violates the base Navier condition (" + std::to_string(g) + ")");
        }
    }

    const AnalyticField qr = u.iterated_curl(r);
    const AnalyticField qr1 = qr.curl();
    PointField curvature_term;
    if (!surface.is_flat()) {
        curvature_term = iterate_numeric_curl(shape_of_tangent(u, surface), r);
    }

    std::vector<double> res;
    res.reserve(samples.size());
    for (const auto& x : samples) {
        const TangentFrame f = tangent_frame(surface, x);
        Vec3 v = tangential_project(f, qr1.value(x)) + (1.0 / zeta) * rotate_tangent(f, tangential_project(f, qr.value(x)));
        if (curvature_term) {
            v -= 2.0 * sigma * rotate_tangent(f, tangential_project(f, curvature_term(x)));
        }
        res.push_back(v.norm());
    }
    auto rep = summarise(Condition::IteratedNavier, res, surface, u);
    rep.order = r;
    rep.sign_sigma = sigma;
    rep.commutation_deviation =
        check_commutation ? commutation_deviation(u, surface, samples) : std::numeric_limits<double>::quiet_NaN();
    return rep;
}

} // namespace navslip
