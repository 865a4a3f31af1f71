#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ransim/scenario.hpp"

namespace ransim {

/// Radio configuration and price bundle for one (region class, scenario)
/// pair.
struct SiteConfig {
    double bandwidth_mhz = 0.0;
    double spectral_efficiency_bps_hz = 0.0;
    int sectors = 1;
    double coverage_radius_km = 0.0;
    double interference = 0.0; // fraction in [0,1)
    double price_per_site_usd = 0.0;
    double opex_rate = 0.0; // fraction of capex per year
    std::optional<double> coverage_area_sqkm; // published value, cross-checked vs radius
};

void validate(const SiteConfig& config); // throws ValidationError

/// Site capacity in bits/year: B[Hz] * SE * sectors * 2,592,000 s/month * 12.
double site_capacity(const SiteConfig& config);
double site_capacity(double bandwidth_mhz, double spectral_efficiency, int sectors);

/// Effective coverage area per site in sq km: pi * R^2 * (1 - I).
double coverage_area(double radius_km, double interference);
double coverage_area(const SiteConfig& config);

/// Sites needed to carry `demand` bits/yr: ceiling(demand / capacity),
/// 0 when demand is 0. Guards against floating-point over-count on exact
/// multiples. capacity must be > 0.
std::int64_t sites_by_demand(double demand_bits_yr, double capacity_bits_yr);

/// Sites needed to blanket `total_area`: ceiling(total_area / area_per_site).
std::int64_t sites_by_coverage(double total_area_sqkm, double area_per_site_sqkm);

/// The binding requirement: max of the demand and coverage counts.
std::int64_t sites_required(std::int64_t by_demand, std::int64_t by_coverage);

struct SitePlan {
    std::int64_t sites_by_demand = 0;
    std::int64_t sites_by_coverage = 0;
    std::int64_t sites_required = 0;
    int year = 0;
};

SitePlan plan_sites(double demand_bits_yr, const SiteConfig& config, double total_area_sqkm,
                    int year = 0);

/// Catalog of site configurations keyed by (region class, scenario),
/// mirroring the published capacity/coverage table and the price table.
class Catalog {
  public:
    /// Built-in defaults: MRAN 60MHz/40/3 and 20MHz/10/1 configurations for
    /// Traditional and Predatory, ORAN 100MHz/50/3 and 20MHz/20/1 for
    /// DirectOEM; prices 232,823/63,237 (Traditional), 108,000/42,500
    /// (Predatory and DirectOEM); opex 12%/12%/13%.
    static Catalog builtin_default();

    static Catalog from_json(const std::string& text);
    static Catalog load(const std::string& path); // ConfigError if unreadable
    std::string to_json() const;

    const SiteConfig& at(RegionClass cls, Scenario scenario) const;
    SiteConfig& at(RegionClass cls, Scenario scenario);

    /// Alternate price entries (e.g. the FCC ORAN rural average 45,500 that
    /// differs from the parameter-table default 42,500).
    struct Alternate {
        std::string name;
        RegionClass region_class;
        Scenario scenario;
        double price_per_site_usd;
    };
    const std::vector<Alternate>& alternates() const { return alternates_; }
    void apply_alternate(const std::string& name); // swaps the price in

  private:
    SiteConfig entries_[2][kScenarioCount]{};
    std::vector<Alternate> alternates_;
};

} // namespace ransim
