#include "navslip/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>

#include "navslip/error.hpp"

namespace navslip {

void CampaignSpec::validate() const {
    base.validate();
    if (nu_ladder.size() < 3) {
        throw Error(Errc::ConfigInvalid, "nu_ladder needs at least three entries");
    }
    for (std::size_t i = 0; i < nu_ladder.size(); ++i) {
        if (!(nu_ladder[i] > 0.0)) {
            throw Error(Errc::ConfigInvalid, "nu_ladder entries must be positive");
        }
        if (i > 0 && !(nu_ladder[i] < nu_ladder[i - 1])) {
            throw Error(Errc::ConfigInvalid, "nu_ladder must be strictly decreasing");
        }
    }
    if (!(zeta > 0.0)) {
        throw Error(Errc::NonpositiveSlipLength, "campaign zeta must be positive");
    }
    if (error_orders.empty()) {
        throw Error(Errc::ConfigInvalid, "error_orders must not be empty");
    }
    for (int o : error_orders) {
        if (o < 0 || o + 1 > base.domain.nz / 4) {
            throw Error(Errc::ConfigInvalid, "error order out of range for nz");
        }
    }
}

CampaignSpec default_campaign() {
    CampaignSpec c;
    c.base.domain = ChannelSpec{};
    c.base.dt = 1e-3;
    c.base.T = 0.5;
    c.base.r = 2;
    c.base.save_every = 10;
    c.base.initial = "robin_shear";
    c.base.initial_params.zeta = 1.0;
    c.base.normalize_er = 1.0;
    c.zeta = 1.0;
    c.base.zeta = 1.0;
    c.nu_ladder = {1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
    c.error_orders = {2};
    return c;
}

RateFit fit_rate(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw Error(Errc::TooFewPoints, "rate fit needs at least three points");
    }
    for (const auto& [nu, err] : points) {
        if (!(nu > 0.0) || !(err > 0.0)) {
            throw Error(Errc::NonpositiveValue, "rate fit needs positive nu and error values");
        }
    }
    const auto n = static_cast<double>(points.size());
    double mx = 0.0, my = 0.0;
    for (const auto& [nu, err] : points) {
        mx += std::log(nu);
        my += std::log(err);
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [nu, err] : points) {
        const double dx = std::log(nu) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(err) - my);
    }
    if (sxx == 0.0) {
        throw Error(Errc::TooFewPoints, "rate fit needs distinct viscosities");
    }
    RateFit f;
    f.points = points;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0.0;
    for (const auto& [nu, err] : points) {
        const double r = std::log(err) - (f.intercept + f.slope * std::log(nu));
        ss += r * r;
    }
    f.residual = std::sqrt(ss / n);
    f.slope_stderr = std::sqrt(ss / (n - 2.0) / sxx);
    const boost::math::students_t dist(n - 2.0);
    f.slope_ci95 = boost::math::quantile(boost::math::complement(dist, 0.025)) * f.slope_stderr;
    f.meets_cube_root = f.slope >= 1.0 / 3.0 - 0.02;
    f.consistent_sqrt = f.slope >= 0.5 - 0.05;
    return f;
}

GradientProbe gradient_uniformity_probe(const std::vector<CampaignRow>& raw) {
    GradientProbe p;
    for (const auto& row : raw) {
        auto it = std::find_if(p.rows_max.begin(), p.rows_max.end(), [&](const auto& e) { return e.first == row.nu; });
        if (it == p.rows_max.end()) {
            p.rows_max.emplace_back(row.nu, row.grad_inf);
        } else {
            it->second = std::max(it->second, row.grad_inf);
        }
    }
    std::sort(p.rows_max.begin(), p.rows_max.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    const std::size_t m = p.rows_max.size();
    for (std::size_t i = 0; i < std::min<std::size_t>(2, m); ++i) {
        p.max_large = std::max(p.max_large, p.rows_max[i].second);
        p.max_small = std::max(p.max_small, p.rows_max[m - 1 - i].second);
    }
    p.uniform = p.max_small <= 2.0 * p.max_large;
    return p;
}

CampaignResult inviscid_limit_campaign(const CampaignSpec& spec, const Progress& progress) {
    spec.validate();
    const auto say = [&](const std::string& s) {
        if (progress) {
            progress(s);
        }
    };
    CampaignResult res;
    res.error_orders = spec.error_orders;
    res.r = spec.base.r;
    const int hr1 = std::min(res.r + 1, spec.base.domain.nz / 4);

    SimConfig euler = spec.base;
    euler.nu = 0.0;
    say("euler reference");
    const RunResult ref = run(euler, true);
    const auto& snaps = ref.trajectory;

    for (double nu : spec.nu_ladder) {
        std::ostringstream label;
        label << "nu=" << nu;
        say(label.str());
        LadderEntry entry;
        entry.nu = nu;
        entry.sup_err.assign(spec.error_orders.size(), 0.0);
        std::vector<CampaignRow> rows;
        std::vector<std::pair<double, double>> hr1_series;
        SimConfig cfg = spec.base;
        cfg.nu = nu;
        cfg.zeta = spec.zeta;
        std::size_t k = 0;
        try {
            run(cfg, false, [&](const SolverState& st) {
                if (k >= snaps.size() || std::abs(snaps[k].first - st.t) > 1e-9) {
                    throw Error(Errc::LadderRunFailed, "save points out of step with the Euler reference");
                }
                const SpectralField diff = st.u - snaps[k].second;
                CampaignRow row;
                row.nu = nu;
                row.t = st.t;
                for (std::size_t o = 0; o < spec.error_orders.size(); ++o) {
                    const double e = sobolev_norm(diff, spec.error_orders[o]).value;
                    row.err.push_back(e);
                    entry.sup_err[o] = std::max(entry.sup_err[o], e);
                    if (k == 0) {
                        res.max_t0_error = std::max(res.max_t0_error, e);
                    }
                }
                const double h = sobolev_norm(diff, hr1).value;
                hr1_series.emplace_back(st.t, h * h);
                row.grad_inf = linf_norm(gradient(diff));
                rows.push_back(std::move(row));
                ++k;
            });
            entry.completed = true;
        } catch (const Error& e) {
            entry.completed = false;
            entry.failure = e.what();
            say(std::string("ladder entry failed: ") + e.what());
        }
        for (std::size_t i = 1; i < hr1_series.size(); ++i) {
            entry.integrated_hr1 += 0.5 * (hr1_series[i].first - hr1_series[i - 1].first) *
                                    (hr1_series[i].second + hr1_series[i - 1].second);
        }
        if (entry.completed) {
            res.raw.insert(res.raw.end(), rows.begin(), rows.end());
            res.nu_star = std::max(res.nu_star, nu);
        }
        res.entries.push_back(std::move(entry));
    }

    std::vector<const LadderEntry*> done;
    for (const auto& e : res.entries) {
        if (e.completed) {
            done.push_back(&e);
        }
    }
    if (done.size() < 3) {
        throw Error(Errc::LadderRunFailed, "only " + std::to_string(done.size()) + " ladder entries completed");
    }
    for (std::size_t o = 0; o < spec.error_orders.size(); ++o) {
        std::vector<std::pair<double, double>> pts;
        for (const auto* e : done) {
            pts.emplace_back(e->nu, e->sup_err[o]);
        }
        res.fits.push_back(fit_rate(pts));
    }
    {
        std::vector<std::pair<double, double>> pts;
        for (const auto* e : done) {
            pts.emplace_back(e->nu, std::sqrt(e->integrated_hr1));
        }
        try {
            res.integrated_fit = fit_rate(pts);
        } catch (const Error&) {
            res.integrated_fit = RateFit{};
            res.integrated_fit.points = pts;
        }
    }
    res.monotone = true;
    for (std::size_t i = 1; i < done.size(); ++i) {
        for (std::size_t o = 0; o < spec.error_orders.size(); ++o) {
            if (!(done[i]->sup_err[o] < done[i - 1]->sup_err[o])) {
                res.monotone = false;
            }
        }
    }
    res.probe = gradient_uniformity_probe(res.raw);
    res.sqrt_regime_checked = res.probe.uniform;
    res.sqrt_regime_met = res.probe.uniform && !res.fits.empty() && res.fits.front().consistent_sqrt;
    return res;
}

} // namespace navslip
