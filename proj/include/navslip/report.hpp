#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "navslip/boundary.hpp"
#include "navslip/experiments.hpp"
#include "navslip/identities.hpp"
#include "navslip/solver.hpp"

namespace navslip {

using Json = nlohmann::ordered_json;

enum class ReportFormat { Csv, Json };

/// Real formatted with 17 significant digits.
std::string format_real(double v);

Json to_json(const EnergyReport& r);
Json to_json(const RateFit& f);
Json to_json(const IdentityReport& r);
Json to_json(const RatioReport& r);
Json to_json(const BCResidualReport& r);
Json to_json(const EquivalenceResult& r);
Json to_json(const PersistenceVerdict& v);
Json to_json(const InequalityAudit& a);
Json to_json(const CampaignResult& c);

/// t,E0,diss,wall,Er,balance_residual
std::string to_csv(const EnergyReport& r);
/// nu,error,fitted
std::string to_csv(const RateFit& f);
/// name,lhs,rhs,abs_residual,rel_residual,resolution
std::string to_csv(const std::vector<IdentityReport>& rows);
/// condition,order,surface,field,samples,sign_sigma,max_residual,mean_residual
std::string to_csv(const std::vector<BCResidualReport>& rows);
/// nu,t,err_H<order>...,grad_inf
std::string campaign_raw_csv(const CampaignResult& c);
/// Whitespace columns for gnuplot: nu, sup error per order, fitted value per order.
std::string campaign_rates_dat(const CampaignResult& c);

/// Throws IoError.
void write_text(const std::string& path, const std::string& text);

template <class R>
void emit_report(const R& report, ReportFormat format, const std::string& path) {
    if (format == ReportFormat::Json) {
        write_text(path, to_json(report).dump(2) + "\n");
    } else {
        write_text(path, to_csv(report));
    }
}

/// raw.csv, ratefit.json and rates.dat under dir (created if needed).
void write_campaign(const CampaignResult& c, const std::string& dir);

} // namespace navslip
