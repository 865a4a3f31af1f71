#pragma once

#include <optional>

namespace ransim {

enum class MarketStructure { Competitive, Oligopoly };

struct MarketParams {
    double national_arpu_usd_month = 40.0;
    double smartphone_rate = 0.89; // S_r
    double active_rate = 0.83;     // A_r
    MarketStructure structure = MarketStructure::Oligopoly;
    std::optional<double> market_share; // M_rt, required when Competitive
};

void validate(const MarketParams& params); // throws ValidationError

/// Active smartphone users in year t (t >= 1): p0 * (1+g)^(t-1) * S * A.
/// Fractional persons are allowed; g <= -1 is an error.
double active_users(double p0, double growth, int t, double smartphone_rate, double active_rate);

/// Income-adjusted ARPU: national_arpu * (mhi / nhi). nhi must be > 0.
double adjusted_arpu(double national_arpu, double mhi, double nhi);

/// Annual subscriber revenue. ARPU is monthly, so revenue is 12 * arpu *
/// users, scaled by market share under a competitive structure.
double annual_revenue(double arpu_usd_month, double users, const MarketParams& params);

/// Total data demand in bits/year: users * gb_per_user_month * 1e9 * 12 * 8.
double annual_data_demand(double users, double gb_per_user_month);

} // namespace ransim
