#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "navslip/catalog.hpp"
#include "navslip/identities.hpp"
#include "navslip/spectral.hpp"

namespace navslip {

struct SimConfig {
    ChannelSpec domain;
    double nu = 0.0;
    /// Slip length; +inf gives free slip. Ignored when nu = 0.
    double zeta = 1.0;
    double dt = 1e-3;
    double T = 1.0;
    int r = 2;
    int save_every = 10;
    double cfl = 1.0;
    std::string initial = "zero";
    CatalogParams initial_params;
    /// When set, the initial field is rescaled so that ||curl^r u||^2 equals it.
    std::optional<double> normalize_er;

    bool free_slip() const { return std::isinf(zeta); }
    int steps() const;
    /// Throws ConfigInvalid.
    void validate() const;
};

struct StepperCache;

struct SolverState {
    double t = 0.0;
    SpectralField u;
    /// Pressure of the projected nonlinear term, refreshed at save points by run.
    SpectralField p;
    long step_count = 0;

    /// Laplacian of the wall-normal velocity, carried between steps.
    SpectralField phi;
    /// Previous explicit tendencies (w, eta / mean u, mean v) for AB2.
    SpectralField h_prev;
    bool has_prev = false;

    /// max over the walls of |du_h/dz +- u_h/zeta| for the initial field.
    double initial_navier_residual = 0.0;

    std::shared_ptr<const StepperCache> cache;
};

struct EnergySample {
    double t = 0.0;
    double E0 = 0.0;
    double diss = 0.0;
    double wall = 0.0;
    double Er = 0.0;
    double balance_residual = 0.0;
};

struct EnergyReport {
    int r = 2;
    double nu = 0.0;
    double zeta = 0.0;
    double dt = 0.0;
    std::vector<EnergySample> rows;
};

/// Throws ConfigInvalid, CFLViolated.
SolverState init_state(const SimConfig& config);

/// Throws NaNDetected, CFLViolated.
SolverState step(SolverState state, const SimConfig& config);

struct RunResult {
    EnergyReport report;
    std::vector<std::pair<double, SpectralField>> trajectory;  // (t, u) at save points
    SolverState final_state;
};

using SaveHook = std::function<void(const SolverState&)>;

RunResult run(const SimConfig& config, bool keep_trajectory = false, const SaveHook& on_save = {});

/// Pressure of the projected nonlinear term u x omega.
SpectralField nonlinear_pressure(const SpectralField& u);

/// u x omega on the grid, transformed back and dealiased.
SpectralField nonlinear_term(const SpectralField& u);

/// max over grid points of (|u|/dx + |v|/dy + |w|/dz_local) * dt.
double cfl_number(const SpectralField& u, double dt);

/// Max over save points of |balance residual| / E0(0).
IdentityReport energy_balance_check(const EnergyReport& report);

/// (1/M) log(1 + 1/(eta + E_r0)). Throws DomainError.
double tstar_estimate(double er0, double m, double eta);

struct InequalityAudit {
    double m_fit = 0.0;
    double violation_fraction = 0.0;
    std::size_t points = 0;
};

/// Finite-difference E' against M E + M E^2 over the samples with t in
/// [window.first, window.second]. Throws SeriesTooShort with fewer than three.
InequalityAudit differential_inequality_audit(const std::vector<double>& t, const std::vector<double>& e, double m,
                                              std::pair<double, double> window = {
                                                  -std::numeric_limits<double>::infinity(),
                                                  std::numeric_limits<double>::infinity()});
InequalityAudit differential_inequality_audit(const EnergyReport& report, double m,
                                              std::pair<double, double> window = {
                                                  -std::numeric_limits<double>::infinity(),
                                                  std::numeric_limits<double>::infinity()});

} // namespace navslip
