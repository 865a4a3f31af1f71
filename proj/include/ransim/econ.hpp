#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ransim/scenario.hpp"

namespace ransim {

struct GlobalParams {
    int horizon_years = 10;      // N
    double discount_rate = 0.05; // d
    // Default opex rates by scenario, used when building the default catalog.
    std::array<double, kScenarioCount> opex_rate_by_scenario{0.12, 0.12, 0.13};
};

void validate(const GlobalParams& params);

/// Per-site price decomposition: what the MNO pays (P_s), the OEM's selling
/// price (P_o), both margins, and the OEM's production cost.
/// Identities P_o = P_cost + M_o and P_s = P_o + M_s hold exactly.
struct UnitEconomics {
    double oem_base_cost = 0.0; // P_cost
    double oem_margin = 0.0;    // M_o
    double oem_price = 0.0;     // P_o
    double nis_margin = 0.0;    // M_s
    double nis_price = 0.0;     // P_s
};

struct CashFlowSeries {
    std::vector<double> yearly_net; // USD, indexed t = 0..N-1
};

struct PayoffTriple {
    double mno_npv = 0.0;
    double nis_npv = 0.0;
    double oem_npv = 0.0;
};

/// NPV with the year-0 term undiscounted: cf[0] + sum cf[t]/(1+d)^t.
double npv(const CashFlowSeries& cashflows, double discount_rate);

/// MNO net cash flows: year 0 books revenue minus the full capex
/// (sites * price); later years book revenue minus opex
/// (sites * price * opex_rate).
CashFlowSeries mno_cashflows(const std::vector<double>& revenue_by_year, std::int64_t sites,
                             double price_per_site, double opex_rate, int horizon_years);

/// NIS profit NPV: the unit margin on year-0 capex plus the same margin
/// applied to the discounted opex stream.
double nis_profit_npv(std::int64_t sites, double nis_margin, double opex_rate,
                      double discount_rate, int horizon_years);

/// OEM profit: one-time year-0 margin on the fleet, undiscounted.
double oem_profit(std::int64_t sites, double oem_margin);

/// Split a catalog price into per-tier margins. Margins are fractions of
/// the tier's selling price: M_s = nis_frac * P_s, M_o = oem_frac * P_o.
/// DirectOEM has no NIS tier (P_s = P_o = catalog price, M_s = 0).
UnitEconomics decompose_price(double catalog_price, double nis_margin_frac,
                              double oem_margin_frac, Scenario scenario);

} // namespace ransim
