#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "navslip/solver.hpp"

namespace navslip {

struct CampaignSpec {
    SimConfig base;
    std::vector<double> nu_ladder;
    double zeta = 1.0;
    std::vector<int> error_orders{2};

    /// Throws ConfigInvalid.
    void validate() const;
};

/// Ladder 1e-2 .. 1e-4, T = 0.5, r = 2, 32 x 32 x 65, 51 save points, unit E_2
/// Robin shear data.
CampaignSpec default_campaign();

struct RateFit {
    std::vector<std::pair<double, double>> points;  // (nu, error)
    double slope = 0.0;
    double intercept = 0.0;
    /// Root-mean-square residual of the log-log fit.
    double residual = 0.0;
    double slope_stderr = 0.0;
    /// 95% confidence half-width on the slope (Student t, n - 2 dof).
    double slope_ci95 = 0.0;
    bool meets_cube_root = false;  // slope >= 1/3 - 0.02
    bool consistent_sqrt = false;  // slope >= 1/2 - 0.05
};

/// Least squares in (log nu, log err). Throws TooFewPoints, NonpositiveValue.
RateFit fit_rate(const std::vector<std::pair<double, double>>& points);

struct CampaignRow {
    double nu = 0.0;
    double t = 0.0;
    std::vector<double> err;  // one per error order
    double grad_inf = 0.0;
};

struct LadderEntry {
    double nu = 0.0;
    bool completed = false;
    std::string failure;
    std::vector<double> sup_err;   // per error order
    double integrated_hr1 = 0.0;   // int_0^T ||u^nu - u||^2_{H^{r+1}} dt
};

struct GradientProbe {
    std::vector<std::pair<double, double>> rows_max;  // (nu, max_t grad_inf)
    double max_small = 0.0;   // over the two smallest completed nu
    double max_large = 0.0;   // over the two largest completed nu
    bool uniform = false;
};

/// Flags "uniform" when the max over the smallest two viscosities is within 2x
/// of the max over the largest two.
GradientProbe gradient_uniformity_probe(const std::vector<CampaignRow>& raw);

struct CampaignResult {
    std::vector<int> error_orders;
    int r = 2;
    std::vector<CampaignRow> raw;
    std::vector<LadderEntry> entries;
    std::vector<RateFit> fits;  // one per error order
    RateFit integrated_fit;     // for the H^{r+1} integral, reported only
    GradientProbe probe;
    double nu_star = 0.0;
    bool monotone = false;      // sup errors strictly decreasing in nu
    double max_t0_error = 0.0;
    bool sqrt_regime_checked = false;
    bool sqrt_regime_met = false;
};

using Progress = std::function<void(const std::string&)>;

/// Euler reference once, then one Navier-Stokes run per ladder entry.
CampaignResult inviscid_limit_campaign(const CampaignSpec& spec, const Progress& progress = {});

} // namespace navslip
