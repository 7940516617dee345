#include "navslip/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "navslip/boundary.hpp"
#include "navslip/error.hpp"

namespace navslip {

namespace {

std::string describe(const VolumeRule& v, const BoundaryRule& b) { return v.descriptor + " / " + b.descriptor; }

VolumeRule volume_for(const VolumeDomain& d, const Resolution& res) {
    return volume_rule(d, res.n1, res.n2, res.n3);
}

BoundaryRule boundary_for(const VolumeDomain& d, const Resolution& res) { return boundary_rule(d, res.s1, res.s2); }

Vec3 curl_at(const AnalyticField& u, const Vec3& x) {
    const Mat3 j = u.jacobian(x);
    return Vec3(j(2, 1) - j(1, 2), j(0, 2) - j(2, 0), j(1, 0) - j(0, 1));
}

// Checks shared by the div-curl reports; returns the failures.
std::vector<std::string> check_divfree_tangent(const AnalyticField& u, const VolumeRule& vol,
                                               const BoundaryRule& bnd) {
    std::vector<std::string> failed;
    double div = 0.0, scale = 1.0;
    // every 7th node is plenty to catch a non-solenoidal field
    for (std::size_t i = 0; i < vol.points.size(); i += 7) {
        div = std::max(div, std::abs(u.divergence(vol.points[i])));
        scale = std::max(scale, u.jacobian(vol.points[i]).norm());
    }
    if (div > 1e-10 * scale) {
        failed.push_back("divergence " + std::to_string(div));
    }
    double normal = 0.0;
    for (std::size_t i = 0; i < bnd.points.size(); ++i) {
        normal = std::max(normal, std::abs(u.value(bnd.points[i]).dot(bnd.normals[i])));
    }
    if (normal > 1e-10 * scale) {
        failed.push_back("normal component " + std::to_string(normal));
    }
    return failed;
}

[[noreturn]] void precondition_failed(const std::string& what, const std::vector<std::string>& failed) {
    std::ostringstream os;
    os << what << ":";
    for (const auto& f : failed) {
        os << " " << f << ";";
    }
    throw Error(Errc::PreconditionViolated, os.str());
}

} // namespace

IdentityReport IdentityReport::make(std::string name, double lhs, double rhs, std::string resolution) {
    IdentityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_residual = std::abs(lhs - rhs);
    r.rel_residual = r.abs_residual / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    r.resolution = std::move(resolution);
    return r;
}

double IdentityReport::term(const std::string& key) const {
    for (const auto& [k, v] : terms) {
        if (k == key) {
            return v;
        }
    }
    throw Error(Errc::DomainError, "identity report has no term " + key);
}

IdentityReport divcurl_base_check(const AnalyticField& u, const VolumeDomain& domain, const Resolution& res) {
    const VolumeRule vol = volume_for(domain, res);
    const BoundaryRule bnd = boundary_for(domain, res);
    if (auto failed = check_divfree_tangent(u, vol, bnd); !failed.empty()) {
        precondition_failed("divcurl_base_check(" + u.label() + ")", failed);
    }
    const double grad_sq = integrate(vol, [&](const Vec3& x) { return u.jacobian(x).squaredNorm(); });
    const double curl_sq = integrate(vol, [&](const Vec3& x) { return curl_at(u, x).squaredNorm(); });
    const auto pieces = domain.boundary();
    double boundary = 0.0;
    for (std::size_t i = 0; i < bnd.points.size(); ++i) {
        const Vec3& x = bnd.points[i];
        const Vec3 v = u.value(x);
        boundary += bnd.weights[i] * v.dot(shape_matrix(pieces[bnd.piece[i]], x) * v);
    }
    auto rep = IdentityReport::make("divcurl_base", grad_sq, curl_sq + boundary, describe(vol, bnd));
    rep.terms = {{"grad_sq", grad_sq}, {"curl_sq", curl_sq}, {"boundary_II", boundary}};
    return rep;
}

RatioReport divcurl_ratio(const AnalyticField& u, const VolumeDomain& domain, int r, std::optional<double> zeta,
                          const Resolution& res) {
    if (r < 0) {
        throw Error(Errc::OrderTooHigh, "negative order");
    }
    const VolumeRule vol = volume_for(domain, res);
    const BoundaryRule bnd = boundary_for(domain, res);
    auto failed = check_divfree_tangent(u, vol, bnd);
    if (zeta) {
        if (!(*zeta > 0.0)) {
            throw Error(Errc::NonpositiveSlipLength, "slip length must be positive");
        }
        const auto pieces = domain.boundary();
        double worst = 0.0, scale = 1.0;
        for (std::size_t i = 0; i < bnd.points.size(); ++i) {
            const Vec3& x = bnd.points[i];
            scale = std::max(scale, u.value(x).norm() + u.jacobian(x).norm());
            worst = std::max(worst, navier_classical_vector(u, pieces[bnd.piece[i]], *zeta, x).norm());
        }
        if (worst > 1e-8 * scale) {
            failed.push_back("Navier residual " + std::to_string(worst));
        }
    }
    if (!failed.empty()) {
        precondition_failed("divcurl_ratio(" + u.label() + ")", failed);
    }
    const double grad = derivative_tensor_norm_sq(u, r + 1, vol);
    const SobolevNorm curls = curl_sobolev_norm(u, r + 1, vol);
    const double curl_sum = curls.value * curls.value;
    RatioReport rep;
    static_cast<IdentityReport&>(rep) = IdentityReport::make("divcurl_ratio", grad, curl_sum, describe(vol, bnd));
    rep.r = r;
    rep.rho = (curl_sum == 0.0 && grad == 0.0) ? 0.0 : grad / curl_sum;
    rep.running_max = rep.rho;
    rep.terms = {{"grad_pow_sq", grad}, {"curl_sum", curl_sum}, {"rho", rep.rho}};
    for (std::size_t l = 0; l < curls.breakdown.size(); ++l) {
        rep.terms.emplace_back("curl_" + std::to_string(l) + "_sq", curls.breakdown[l]);
    }
    return rep;
}

std::vector<RatioReport> divcurl_ratio_corpus(const std::vector<AnalyticField>& corpus, const VolumeDomain& domain,
                                              int r, std::optional<double> zeta, const Resolution& res) {
    std::vector<RatioReport> out;
    double running = 0.0;
    for (const auto& u : corpus) {
        auto rep = divcurl_ratio(u, domain, r, zeta, res);
        running = std::max(running, rep.rho);
        rep.running_max = running;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<IdentityReport> vector_identity_checks(const AnalyticField& u, const AnalyticField& w,
                                                   const VolumeDomain& domain, const Resolution& res) {
    const VolumeRule vol = volume_for(domain, res);
    const BoundaryRule bnd = boundary_for(domain, res);
    const std::string resolution = describe(vol, bnd);
    std::vector<IdentityReport> out;

    for (const AnalyticField* f : {&u, &w}) {
        double lhs = 0.0, rhs = 0.0, diff = 0.0;
        for (std::size_t i = 0; i < vol.points.size(); ++i) {
            const Vec3& x = vol.points[i];
            const Vec3 v = f->value(x);
            const Mat3 j = f->jacobian(x);
            const Vec3 adv = j * v;
            const Vec3 rot = j.transpose() * v - v.cross(curl_at(*f, x));
            lhs += vol.weights[i] * adv.squaredNorm();
            rhs += vol.weights[i] * rot.squaredNorm();
            diff += vol.weights[i] * (adv - rot).squaredNorm();
        }
        auto rep = IdentityReport::make("advection_rotational(" + f->label() + ")", std::sqrt(lhs), std::sqrt(rhs),
                                        resolution);
        rep.abs_residual = std::sqrt(diff);
        rep.rel_residual = rep.abs_residual / std::max({rep.lhs, rep.rhs, 1e-300});
        out.push_back(rep);
    }

    const double v_curl_w = integrate(vol, [&](const Vec3& x) { return u.value(x).dot(curl_at(w, x)); });
    const double curl_v_w = integrate(vol, [&](const Vec3& x) { return curl_at(u, x).dot(w.value(x)); });
    double flux = 0.0;
    for (std::size_t i = 0; i < bnd.points.size(); ++i) {
        const Vec3& x = bnd.points[i];
        flux += bnd.weights[i] * w.value(x).cross(u.value(x)).dot(bnd.normals[i]);
    }
    auto ibp = IdentityReport::make("curl_integration_by_parts", v_curl_w, flux + curl_v_w, resolution);
    ibp.terms = {{"V_curlW", v_curl_w}, {"curlV_W", curl_v_w}, {"boundary_flux", flux}};
    out.push_back(ibp);
    return out;
}

Vec3 lie_bracket(const AnalyticField& u, const AnalyticField& omega, const Vec3& x) {
    return omega.jacobian(x) * u.value(x) - u.jacobian(x) * omega.value(x);
}

std::string verdict_name(Verdict v) {
    return v == Verdict::PredictsFailure ? "PredictsFailure" : "Inconclusive";
}

PersistenceVerdict persistence_check(const AnalyticField& u0, const AnalyticField& omega0, const Surface& surface,
                                     const Vec3& x0, double tol) {
    const Vec3 n = normal(surface, x0);
    PersistenceVerdict v;
    v.tolerance = tol;
    v.div_u0 = std::abs(u0.divergence(x0));
    v.u0_dot_n = std::abs(u0.value(x0).dot(n));
    const Vec3 w = omega0.value(x0);
    v.omega0_cross_n = w.cross(n).norm();
    v.bracket = lie_bracket(u0, omega0, x0);
    v.bracket_cross_n_norm = v.bracket.cross(n).norm();
    v.gauss_curvature_at_x0 = curvatures(surface, x0).gauss;
    v.vorticity_norm_at_x0 = w.norm();
    const bool fails = v.bracket_cross_n_norm > tol && std::abs(v.gauss_curvature_at_x0) > tol &&
                       v.vorticity_norm_at_x0 > 0.0;
    v.verdict = fails ? Verdict::PredictsFailure : Verdict::Inconclusive;
    return v;
}

} // namespace navslip
