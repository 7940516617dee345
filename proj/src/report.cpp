#include "navslip/report.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "navslip/error.hpp"

namespace navslip {

namespace {

// JSON has no infinity; slip lengths use it for free slip.
Json real(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return std::isnan(v) ? Json("nan") : Json(v > 0 ? "inf" : "-inf");
}

Json terms(const IdentityReport& r) {
    Json t = Json::object();
    for (const auto& [k, v] : r.terms) {
        t[k] = real(v);
    }
    return t;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch;
        if (ch == '"') {
            out += '"';
        }
    }
    return out + "\"";
}

} // namespace

std::string format_real(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

Json to_json(const EnergyReport& r) {
    Json j;
    j["r"] = r.r;
    j["nu"] = real(r.nu);
    j["zeta"] = real(r.zeta);
    j["dt"] = real(r.dt);
    Json rows = Json::array();
    for (const auto& s : r.rows) {
        rows.push_back({{"t", real(s.t)}, {"E0", real(s.E0)}, {"diss", real(s.diss)}, {"wall", real(s.wall)},
                        {"Er", real(s.Er)}, {"balance_residual", real(s.balance_residual)}});
    }
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const RateFit& f) {
    Json j;
    j["slope"] = real(f.slope);
    j["intercept"] = real(f.intercept);
    j["residual"] = real(f.residual);
    j["slope_stderr"] = real(f.slope_stderr);
    j["slope_ci95"] = real(f.slope_ci95);
    j["meets_cube_root"] = f.meets_cube_root;
    j["consistent_sqrt"] = f.consistent_sqrt;
    Json pts = Json::array();
    for (const auto& [nu, e] : f.points) {
        pts.push_back({{"nu", real(nu)}, {"error", real(e)}});
    }
    j["points"] = std::move(pts);
    return j;
}

Json to_json(const IdentityReport& r) {
    Json j;
    j["name"] = r.name;
    j["lhs"] = real(r.lhs);
    j["rhs"] = real(r.rhs);
    j["abs_residual"] = real(r.abs_residual);
    j["rel_residual"] = real(r.rel_residual);
    j["resolution"] = r.resolution;
    j["terms"] = terms(r);
    return j;
}

Json to_json(const RatioReport& r) {
    Json j = to_json(static_cast<const IdentityReport&>(r));
    j["r"] = r.r;
    j["rho"] = real(r.rho);
    j["running_max"] = real(r.running_max);
    return j;
}

Json to_json(const BCResidualReport& r) {
    Json j;
    j["condition"] = condition_name(r.condition);
    j["order"] = r.order;
    j["surface"] = r.surface;
    j["field"] = r.field;
    j["samples"] = r.samples;
    j["sign_sigma"] = r.sign_sigma;
    j["max_residual"] = real(r.max_residual);
    j["mean_residual"] = real(r.mean_residual);
    j["commutation_deviation"] = real(r.commutation_deviation);
    return j;
}

Json to_json(const EquivalenceResult& r) {
    Json j;
    j["surface"] = r.surface;
    j["zeta"] = real(r.zeta);
    j["sigma"] = r.sigma;
    j["max_deviation"] = real(r.max_deviation);
    j["deviation_plus"] = real(r.deviation_plus);
    j["deviation_minus"] = real(r.deviation_minus);
    j["accepts_plus"] = r.accepts_plus;
    j["accepts_minus"] = r.accepts_minus;
    j["fields"] = r.fields;
    j["samples"] = r.samples;
    return j;
}

Json to_json(const PersistenceVerdict& v) {
    Json j;
    j["verdict"] = verdict_name(v.verdict);
    j["div_u0"] = real(v.div_u0);
    j["u0_dot_n"] = real(v.u0_dot_n);
    j["omega0_cross_n"] = real(v.omega0_cross_n);
    j["bracket"] = {real(v.bracket.x()), real(v.bracket.y()), real(v.bracket.z())};
    j["bracket_cross_n_norm"] = real(v.bracket_cross_n_norm);
    j["gauss_curvature_at_x0"] = real(v.gauss_curvature_at_x0);
    j["vorticity_norm_at_x0"] = real(v.vorticity_norm_at_x0);
    j["tolerance"] = real(v.tolerance);
    return j;
}

Json to_json(const InequalityAudit& a) {
    return Json{{"m_fit", real(a.m_fit)}, {"violation_fraction", real(a.violation_fraction)}, {"points", a.points}};
}

Json to_json(const CampaignResult& c) {
    Json j;
    j["r"] = c.r;
    j["error_orders"] = c.error_orders;
    Json fits = Json::array();
    for (std::size_t o = 0; o < c.fits.size(); ++o) {
        Json f = to_json(c.fits[o]);
        f["order"] = c.error_orders[o];
        fits.push_back(std::move(f));
    }
    // top-level slope is the first requested order
    j["slope"] = c.fits.empty() ? Json(nullptr) : real(c.fits.front().slope);
    j["fits"] = std::move(fits);
    Json integ = to_json(c.integrated_fit);
    integ["order"] = c.r + 1;
    j["integrated_fit"] = std::move(integ);
    j["nu_star"] = real(c.nu_star);
    j["monotone"] = c.monotone;
    j["max_t0_error"] = real(c.max_t0_error);
    j["gradient_probe"] = {{"max_small", real(c.probe.max_small)},
                           {"max_large", real(c.probe.max_large)},
                           {"uniform", c.probe.uniform}};
    j["sqrt_regime_checked"] = c.sqrt_regime_checked;
    j["sqrt_regime_met"] = c.sqrt_regime_met;
    Json entries = Json::array();
    for (const auto& e : c.entries) {
        Json x{{"nu", real(e.nu)}, {"completed", e.completed}};
        if (!e.completed) {
            x["failure"] = e.failure;
        }
        Json sup = Json::array();
        for (double v : e.sup_err) {
            sup.push_back(real(v));
        }
        x["sup_err"] = std::move(sup);
        x["integrated_hr1"] = real(e.integrated_hr1);
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string to_csv(const EnergyReport& r) {
    std::ostringstream os;
    os << "t,E0,diss,wall,Er,balance_residual\n";
    for (const auto& s : r.rows) {
        os << format_real(s.t) << ',' << format_real(s.E0) << ',' << format_real(s.diss) << ','
           << format_real(s.wall) << ',' << format_real(s.Er) << ',' << format_real(s.balance_residual) << '\n';
    }
    return os.str();
}

std::string to_csv(const RateFit& f) {
    std::ostringstream os;
    os << "nu,error,fitted\n";
    for (const auto& [nu, e] : f.points) {
        os << format_real(nu) << ',' << format_real(e) << ','
           << format_real(std::exp(f.intercept + f.slope * std::log(nu))) << '\n';
    }
    return os.str();
}

std::string to_csv(const std::vector<IdentityReport>& rows) {
    std::ostringstream os;
    os << "name,lhs,rhs,abs_residual,rel_residual,resolution\n";
    for (const auto& r : rows) {
        os << csv_field(r.name) << ',' << format_real(r.lhs) << ',' << format_real(r.rhs) << ','
           << format_real(r.abs_residual) << ',' << format_real(r.rel_residual) << ',' << csv_field(r.resolution)
           << '\n';
    }
    return os.str();
}

std::string to_csv(const std::vector<BCResidualReport>& rows) {
    std::ostringstream os;
    os << "condition,order,surface,field,samples,sign_sigma,max_residual,mean_residual\n";
    for (const auto& r : rows) {
        os << condition_name(r.condition) << ',' << r.order << ',' << csv_field(r.surface) << ','
           << csv_field(r.field) << ',' << r.samples << ',' << r.sign_sigma << ',' << format_real(r.max_residual)
           << ',' << format_real(r.mean_residual) << '\n';
    }
    return os.str();
}

std::string campaign_raw_csv(const CampaignResult& c) {
    std::ostringstream os;
    os << "nu,t";
    for (int o : c.error_orders) {
        os << ",err_H" << o;
    }
    os << ",grad_inf\n";
    for (const auto& row : c.raw) {
        os << format_real(row.nu) << ',' << format_real(row.t);
        for (double e : row.err) {
            os << ',' << format_real(e);
        }
        os << ',' << format_real(row.grad_inf) << '\n';
    }
    return os.str();
}

std::string campaign_rates_dat(const CampaignResult& c) {
    std::ostringstream os;
    os << "# nu";
    for (int o : c.error_orders) {
        os << " sup_err_H" << o;
    }
    for (int o : c.error_orders) {
        os << " fit_H" << o;
    }
    os << "\n";
    for (const auto& e : c.entries) {
        if (!e.completed) {
            continue;
        }
        os << format_real(e.nu);
        for (double v : e.sup_err) {
            os << ' ' << format_real(v);
        }
        for (const auto& f : c.fits) {
            os << ' ' << format_real(std::exp(f.intercept + f.slope * std::log(e.nu)));
        }
        os << '\n';
    }
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(Errc::IoError, "cannot open " + path + " for writing");
    }
    out << text;
    if (!out) {
        throw Error(Errc::IoError, "write failed for " + path);
    }
}

void write_campaign(const CampaignResult& c, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw Error(Errc::IoError, "cannot create " + dir + ": " + ec.message());
    }
    const std::filesystem::path d(dir);
    write_text((d / "raw.csv").string(), campaign_raw_csv(c));
    write_text((d / "ratefit.json").string(), to_json(c).dump(2) + "\n");
    write_text((d / "rates.dat").string(), campaign_rates_dat(c));
}

} // namespace navslip
