#include "navslip/solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "navslip/chebyshev.hpp"
#include "navslip/error.hpp"

namespace navslip {

namespace {

using CVec = Eigen::VectorXcd;
using LU = Eigen::PartialPivLU<Eigen::MatrixXd>;
constexpr cplx I{0.0, 1.0};

CVec solve(const LU& lu, const CVec& rhs) {
    CVec out(rhs.size());
    out.real() = lu.solve(Eigen::VectorXd(rhs.real()));
    out.imag() = lu.solve(Eigen::VectorXd(rhs.imag()));
    return out;
}

Eigen::MatrixXd with_rows(Eigen::MatrixXd a, const Eigen::RowVectorXd& top, const Eigen::RowVectorXd& bot) {
    const auto n = a.rows();
    a.row(n - 2) = top;
    a.row(n - 1) = bot;
    return a;
}

CVec zero_tail(CVec v) {
    v[v.size() - 2] = 0.0;
    v[v.size() - 1] = 0.0;
    return v;
}

} // namespace

struct ModeOps {
    LU lap_dir;     // D^2 - k^2, w(+-1) = 0
    LU helm_dir;    // I - a (D^2 - k^2), Dirichlet
    LU helm_robin;  // I - a (D^2 - k^2), Robin
    Eigen::VectorXd psi1, psi2, w1, w2;
    Eigen::Matrix2d minv = Eigen::Matrix2d::Zero();
};

struct StepperCache {
    int nz = 0;
    double nu = 0.0;
    double dt = 0.0;
    double inv_zeta = 0.0;
    Eigen::MatrixXd d;
    Eigen::RowVectorXd b_top, b_bot;  // Robin functional on w
    std::map<double, ModeOps> ops;

    bool matches(const SimConfig& c) const {
        return nz == c.domain.nz && nu == c.nu && dt == c.dt && inv_zeta == (c.free_slip() ? 0.0 : 1.0 / c.zeta);
    }

    const ModeOps& at(double k2) const { return ops.at(k2); }

    cplx robin_w(const CVec& w, int side) const {
        return side > 0 ? b_top.cast<cplx>().dot(w) : b_bot.cast<cplx>().dot(w);
    }
};

namespace {

std::shared_ptr<const StepperCache> build_cache(const SimConfig& cfg) {
    auto c = std::make_shared<StepperCache>();
    const ChannelSpec& s = cfg.domain;
    const int n = s.nz;
    c->nz = n;
    c->nu = cfg.nu;
    c->dt = cfg.dt;
    c->inv_zeta = cfg.free_slip() ? 0.0 : 1.0 / cfg.zeta;
    c->d = cheb::diff_matrix(n);
    const Eigen::MatrixXd d2 = c->d * c->d;
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const double iz = c->inv_zeta;
    // D^2 w + Dw / zeta at z = 1 and D^2 w - Dw / zeta at z = -1
    c->b_top = cheb::boundary_row(n, 1, 2) + iz * cheb::boundary_row(n, 1, 1);
    c->b_bot = cheb::boundary_row(n, -1, 2) - iz * cheb::boundary_row(n, -1, 1);
    const Eigen::RowVectorXd d_top = cheb::boundary_row(n, 1, 0);
    const Eigen::RowVectorXd d_bot = cheb::boundary_row(n, -1, 0);
    // Dv + v / zeta at z = 1 and Dv - v / zeta at z = -1
    const Eigen::RowVectorXd r_top = cheb::boundary_row(n, 1, 1) + iz * d_top;
    const Eigen::RowVectorXd r_bot = cheb::boundary_row(n, -1, 1) - iz * d_bot;
    const double a = 0.5 * cfg.nu * cfg.dt;

    for (int ix = 0; ix < s.nx; ++ix) {
        for (int iy = 0; iy < s.nyh(); ++iy) {
            if (!s.retained(ix, iy)) {
                continue;
            }
            const double k2 = s.kx(ix) * s.kx(ix) + s.ky(iy) * s.ky(iy);
            if (c->ops.count(k2)) {
                continue;
            }
            ModeOps op;
            const Eigen::MatrixXd lap = d2 - k2 * id;
            op.lap_dir.compute(with_rows(lap, d_top, d_bot));
            if (cfg.nu > 0.0) {
                const Eigen::MatrixXd helm = id - a * lap;
                op.helm_dir.compute(with_rows(helm, d_top, d_bot));
                op.helm_robin.compute(with_rows(helm, r_top, r_bot));
                if (k2 > 0.0) {
                    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
                    e[n - 2] = 1.0;
                    op.psi1 = op.helm_dir.solve(e);
                    e.setZero();
                    e[n - 1] = 1.0;
                    op.psi2 = op.helm_dir.solve(e);
                    Eigen::VectorXd f = op.psi1;
                    f[n - 2] = f[n - 1] = 0.0;
                    op.w1 = op.lap_dir.solve(f);
                    f = op.psi2;
                    f[n - 2] = f[n - 1] = 0.0;
                    op.w2 = op.lap_dir.solve(f);
                    Eigen::Matrix2d m;
                    m << c->b_top.dot(op.w1), c->b_top.dot(op.w2), c->b_bot.dot(op.w1), c->b_bot.dot(op.w2);
                    if (std::abs(m.determinant()) < 1e-300) {
                        throw Error(Errc::SingularMode, "influence matrix singular at k^2 = " + std::to_string(k2));
                    }
                    op.minv = m.inverse();
                }
            }
            c->ops.emplace(k2, std::move(op));
        }
    }
    return c;
}

void check_finite(const SpectralField& u, long step_index) {
    for (const auto& c : u.coeffs()) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw Error(Errc::NaNDetected, "non-finite coefficient after step " + std::to_string(step_index));
        }
    }
}

// Laplacian of w, mode by mode, into a one-component field.
SpectralField laplacian_w(const SpectralField& u, const Eigen::MatrixXd& d) {
    const ChannelSpec& s = u.spec();
    const int n = s.nz;
    SpectralField phi(s, 1);
    const Eigen::MatrixXd d2 = d * d;
    for (int ix = 0; ix < s.nx; ++ix) {
        for (int iy = 0; iy < s.nyh(); ++iy) {
            if (!s.retained(ix, iy)) {
                continue;
            }
            const double k2 = s.kx(ix) * s.kx(ix) + s.ky(iy) * s.ky(iy);
            const Eigen::Map<const CVec> w(u.mode(2, ix, iy), n);
            Eigen::Map<CVec>(phi.mode(0, ix, iy), n) = d2 * w - k2 * w;
        }
    }
    return phi;
}

double wall_navier_residual(const SpectralField& u, double inv_zeta) {
    const ChannelSpec& s = u.spec();
    const auto ug = u.to_grid();
    const auto dg = u.derivative(2).to_grid();
    const std::size_t np = s.grid_points();
    double worst = 0.0;
    for (int c = 0; c < 2; ++c) {
        for (std::size_t col = 0; col < static_cast<std::size_t>(s.nx) * s.ny; ++col) {
            const std::size_t top = c * np + col * s.nz;
            const std::size_t bot = top + s.nz - 1;
            worst = std::max(worst, std::abs(dg[top] + inv_zeta * ug[top]));
            worst = std::max(worst, std::abs(dg[bot] - inv_zeta * ug[bot]));
        }
    }
    return worst;
}

double dissipation_rate(const SpectralField& u, const SimConfig& cfg, double* diss, double* wall) {
    *diss = 0.0;
    *wall = 0.0;
    if (cfg.nu == 0.0) {
        return 0.0;
    }
    *diss = 2.0 * cfg.nu * derivative_tensor_norm_sq(u, 1);
    if (!cfg.free_slip()) {
        *wall = 2.0 * cfg.nu / cfg.zeta * wall_l2_sq(u);
    }
    return *diss + *wall;
}

} // namespace

int SimConfig::steps() const { return static_cast<int>(std::llround(T / dt)); }

void SimConfig::validate() const {
    domain.validate();
    if (!(nu >= 0.0) || !std::isfinite(nu)) {
        throw Error(Errc::ConfigInvalid, "nu must be finite and >= 0");
    }
    if (nu > 0.0 && !(zeta > 0.0)) {
        throw Error(Errc::NonpositiveSlipLength, "zeta must be positive");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw Error(Errc::ConfigInvalid, "dt must be positive");
    }
    if (!(T >= 0.0) || !std::isfinite(T)) {
        throw Error(Errc::ConfigInvalid, "T must be >= 0");
    }
    if (std::abs(steps() * dt - T) > 1e-9 * std::max(1.0, T)) {
        throw Error(Errc::ConfigInvalid, "T must be a whole number of time steps");
    }
    if (save_every < 1) {
        throw Error(Errc::ConfigInvalid, "save_every must be >= 1");
    }
    if (r < 0 || r > domain.nz / 4) {
        throw Error(Errc::ConfigInvalid, "diagnostic order r must lie in [0, nz/4]");
    }
    if (!(cfl > 0.0)) {
        throw Error(Errc::ConfigInvalid, "cfl limit must be positive");
    }
    if (normalize_er && !(*normalize_er > 0.0)) {
        throw Error(Errc::ConfigInvalid, "normalize_er must be positive");
    }
}

SpectralField nonlinear_term(const SpectralField& u) {
    const ChannelSpec& s = u.spec();
    const auto ug = u.to_grid();
    const auto wg = curl(u).to_grid();
    const std::size_t np = s.grid_points();
    std::vector<double> n(3 * np);
    for (std::size_t p = 0; p < np; ++p) {
        const double u0 = ug[p], u1 = ug[np + p], u2 = ug[2 * np + p];
        const double w0 = wg[p], w1 = wg[np + p], w2 = wg[2 * np + p];
        n[p] = u1 * w2 - u2 * w1;
        n[np + p] = u2 * w0 - u0 * w2;
        n[2 * np + p] = u0 * w1 - u1 * w0;
    }
    return SpectralField::from_grid(s, n, 3).apply_dealias();
}

SpectralField nonlinear_pressure(const SpectralField& u) {
    SpectralField p;
    leray_project(nonlinear_term(u), &p);
    return p;
}

double cfl_number(const SpectralField& u, double dt) {
    const ChannelSpec& s = u.spec();
    const auto ug = u.to_grid();
    const std::size_t np = s.grid_points();
    const double dx = s.lx / s.nx, dy = s.ly / s.ny;
    std::vector<double> dz(s.nz);
    for (int iz = 0; iz < s.nz; ++iz) {
        double h = std::numeric_limits<double>::infinity();
        if (iz > 0) {
            h = std::min(h, s.z(iz - 1) - s.z(iz));
        }
        if (iz + 1 < s.nz) {
            h = std::min(h, s.z(iz) - s.z(iz + 1));
        }
        dz[iz] = h;
    }
    double worst = 0.0;
    for (std::size_t p = 0; p < np; ++p) {
        const double c = std::abs(ug[p]) / dx + std::abs(ug[np + p]) / dy + std::abs(ug[2 * np + p]) / dz[p % s.nz];
        worst = std::max(worst, c);
    }
    return worst * dt;
}

SolverState init_state(const SimConfig& config) {
    config.validate();
    SolverState st;
    const ChannelSpec& s = config.domain;
    AnalyticField u0;
    try {
        u0 = catalog_field(config.initial, config.initial_params);
    } catch (const Error& e) {
        throw Error(Errc::ConfigInvalid, std::string("initial field: ") + e.what());
    }
    SpectralField u = SpectralField::sample(u0, s);
    u.apply_dealias();
    u = leray_project(u);
    u.apply_dealias();
    if (config.normalize_er) {
        const double er = l2_norm_sq(iterated_curl(u, config.r));
        if (er > 0.0) {
            u *= std::sqrt(*config.normalize_er / er);
        }
    }
    const double scale = 1.0 + linf_norm(u);
    if (max_wall_normal(u) > 1e-10 * scale) {
        throw Error(Errc::ConfigInvalid, "initial field is not impermeable at the walls");
    }
    const double c = cfl_number(u, config.dt);
    if (c > config.cfl) {
        throw Error(Errc::CFLViolated, "initial CFL number " + std::to_string(c) + " exceeds " +
                                           std::to_string(config.cfl));
    }
    st.cache = build_cache(config);
    st.u = std::move(u);
    st.phi = laplacian_w(st.u, st.cache->d);
    st.h_prev = SpectralField(s, 3);
    st.p = SpectralField(s, 1);
    if (config.nu > 0.0) {
        st.initial_navier_residual = wall_navier_residual(st.u, st.cache->inv_zeta);
    }
    return st;
}

SolverState step(SolverState st, const SimConfig& cfg) {
    if (!st.cache || !st.cache->matches(cfg)) {
        st.cache = build_cache(cfg);
    }
    const StepperCache& cache = *st.cache;
    const ChannelSpec& s = cfg.domain;
    const int n = s.nz;
    const Eigen::MatrixXd& d = cache.d;
    const double dt = cfg.dt;

    const double c = cfl_number(st.u, dt);
    if (c > cfg.cfl) {
        throw Error(Errc::CFLViolated, "CFL number " + std::to_string(c) + " at step " + std::to_string(st.step_count));
    }
    const SpectralField nl = nonlinear_term(st.u);
    SpectralField h(s, 3);
    SpectralField next(s, 3);
    SpectralField phi_next(s, 1);

    for (int ix = 0; ix < s.nx; ++ix) {
        for (int iy = 0; iy < s.nyh(); ++iy) {
            if (!s.retained(ix, iy)) {
                continue;
            }
            const double kx = s.kx(ix), ky = s.ky(iy);
            const double k2 = kx * kx + ky * ky;
            const ModeOps& op = cache.at(k2);
            const Eigen::Map<const CVec> nx(nl.mode(0, ix, iy), n), ny(nl.mode(1, ix, iy), n),
                nz(nl.mode(2, ix, iy), n);
            const Eigen::Map<const CVec> u(st.u.mode(0, ix, iy), n), v(st.u.mode(1, ix, iy), n);
            Eigen::Map<CVec> h0(h.mode(0, ix, iy), n), h1(h.mode(1, ix, iy), n);
            Eigen::Map<CVec> uo(next.mode(0, ix, iy), n), vo(next.mode(1, ix, iy), n), wo(next.mode(2, ix, iy), n);

            if (k2 == 0.0) {
                h0 = nx;
                h1 = ny;
            } else {
                h0 = -k2 * nz - d * (I * kx * nx + I * ky * ny);
                h1 = I * kx * ny - I * ky * nx;
            }
            CVec f0 = h0, f1 = h1;
            if (st.has_prev) {
                f0 = 1.5 * h0 - 0.5 * Eigen::Map<const CVec>(st.h_prev.mode(0, ix, iy), n);
                f1 = 1.5 * h1 - 0.5 * Eigen::Map<const CVec>(st.h_prev.mode(1, ix, iy), n);
            }

            if (k2 == 0.0) {
                if (cfg.nu > 0.0) {
                    uo = solve(op.helm_robin, zero_tail(2.0 * u + dt * f0)) - u;
                    vo = solve(op.helm_robin, zero_tail(2.0 * v + dt * f1)) - v;
                } else {
                    uo = u + dt * f0;
                    vo = v + dt * f1;
                }
                wo.setZero();
                continue;
            }

            const Eigen::Map<const CVec> phi(st.phi.mode(0, ix, iy), n);
            const CVec eta = I * kx * v - I * ky * u;
            CVec phin, wn, etan;
            if (cfg.nu > 0.0) {
                const CVec psi = solve(op.helm_dir, zero_tail(2.0 * phi + dt * f0));
                const CVec wp = solve(op.lap_dir, zero_tail(psi - phi));
                const Eigen::Vector2cd b(cache.robin_w(wp, 1), cache.robin_w(wp, -1));
                const Eigen::Vector2cd coef = -(op.minv.cast<cplx>() * b);
                phin = psi + coef[0] * op.psi1.cast<cplx>() + coef[1] * op.psi2.cast<cplx>() - phi;
                wn = wp + coef[0] * op.w1.cast<cplx>() + coef[1] * op.w2.cast<cplx>();
                etan = solve(op.helm_robin, zero_tail(2.0 * eta + dt * f1)) - eta;
            } else {
                phin = phi + dt * f0;
                wn = solve(op.lap_dir, zero_tail(phin));
                etan = eta + dt * f1;
            }
            const CVec chi = -(d * wn);
            wo = wn;
            uo = -I * (kx * chi - ky * etan) / k2;
            vo = -I * (ky * chi + kx * etan) / k2;
            Eigen::Map<CVec>(phi_next.mode(0, ix, iy), n) = phin;
        }
    }
    next.enforce_hermitian();
    next.apply_dealias();
    phi_next.enforce_hermitian();

    st.u = std::move(next);
    st.phi = std::move(phi_next);
    st.h_prev = std::move(h);
    st.has_prev = true;
    st.t += dt;
    ++st.step_count;
    check_finite(st.u, st.step_count);
    return st;
}

RunResult run(const SimConfig& config, bool keep_trajectory, const SaveHook& on_save) {
    RunResult out;
    SolverState st = init_state(config);
    EnergyReport& rep = out.report;
    rep.r = config.r;
    rep.nu = config.nu;
    rep.zeta = config.zeta;
    rep.dt = config.dt;

    double diss = 0.0, wall = 0.0;
    double rate = dissipation_rate(st.u, config, &diss, &wall);
    double integral = 0.0;
    const double e_initial = l2_norm_sq(st.u);

    const auto record = [&]() {
        EnergySample row;
        row.t = st.t;
        row.E0 = l2_norm_sq(st.u);
        row.diss = diss;
        row.wall = wall;
        row.Er = l2_norm_sq(iterated_curl(st.u, config.r));
        row.balance_residual = row.E0 + integral - e_initial;
        rep.rows.push_back(row);
        st.p = nonlinear_pressure(st.u);
        if (keep_trajectory) {
            out.trajectory.emplace_back(st.t, st.u);
        }
        if (on_save) {
            on_save(st);
        }
    };

    record();
    const int nsteps = config.steps();
    for (int i = 1; i <= nsteps; ++i) {
        st = step(std::move(st), config);
        const double prev = rate;
        rate = dissipation_rate(st.u, config, &diss, &wall);
        integral += 0.5 * config.dt * (prev + rate);
        if (i % config.save_every == 0 || i == nsteps) {
            record();
        }
    }
    out.final_state = std::move(st);
    return out;
}

IdentityReport energy_balance_check(const EnergyReport& report) {
    if (report.rows.empty()) {
        return IdentityReport::make("energy_balance", 0.0, 0.0, "empty");
    }
    const double e0 = report.rows.front().E0;
    double worst = 0.0;
    for (const auto& row : report.rows) {
        worst = std::max(worst, std::abs(row.balance_residual));
    }
    const auto& last = report.rows.back();
    IdentityReport r;
    r.name = "energy_balance";
    r.lhs = e0 + last.balance_residual;  // E0(T) + dissipated energy
    r.rhs = e0;
    r.abs_residual = worst;
    r.rel_residual = e0 > 0.0 ? worst / e0 : worst;
    r.resolution = "dt=" + std::to_string(report.dt) + " saves=" + std::to_string(report.rows.size());
    return r;
}

double tstar_estimate(double er0, double m, double eta) {
    if (!(er0 >= 0.0) || !(m > 0.0) || !(eta > 0.0) || !std::isfinite(m) || !std::isfinite(eta) ||
        std::isnan(er0)) {
        throw Error(Errc::DomainError, "tstar_estimate needs E_r0 >= 0, M > 0, eta > 0");
    }
    return std::log1p(1.0 / (eta + er0)) / m;
}

InequalityAudit differential_inequality_audit(const std::vector<double>& t, const std::vector<double>& e, double m,
                                              std::pair<double, double> window) {
    if (t.size() != e.size()) {
        throw Error(Errc::DomainError, "time and energy series differ in length");
    }
    std::vector<double> ts, es;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= window.first && t[i] <= window.second) {
            ts.push_back(t[i]);
            es.push_back(e[i]);
        }
    }
    if (ts.size() < 3) {
        throw Error(Errc::SeriesTooShort, "need at least three samples, got " + std::to_string(ts.size()));
    }
    InequalityAudit a;
    std::size_t violations = 0;
    for (std::size_t i = 1; i + 1 < ts.size(); ++i) {
        // three-point derivative on a possibly uneven grid
        const double h0 = ts[i] - ts[i - 1], h1 = ts[i + 1] - ts[i];
        const double de = (-h1 / (h0 * (h0 + h1))) * es[i - 1] + ((h1 - h0) / (h0 * h1)) * es[i] +
                          (h0 / (h1 * (h0 + h1))) * es[i + 1];
        const double bound = es[i] + es[i] * es[i];
        if (bound > 0.0) {
            a.m_fit = std::max(a.m_fit, de / bound);
        }
        if (de > m * bound) {
            ++violations;
        }
        ++a.points;
    }
    a.violation_fraction = static_cast<double>(violations) / static_cast<double>(a.points);
    return a;
}

InequalityAudit differential_inequality_audit(const EnergyReport& report, double m, std::pair<double, double> window) {
    std::vector<double> t, e;
    for (const auto& row : report.rows) {
        t.push_back(row.t);
        e.push_back(row.Er);
    }
    return differential_inequality_audit(t, e, m, window);
}

} // namespace navslip
