#pragma once

#include <string>
#include <vector>

namespace ransim {

/// One county's demographic and network inputs. All monetary values are
/// USD per year, land area in square km, data demand in GB (1 GB = 1e9
/// bytes) per user per month.
struct CountyRecord {
    std::string fips_id;
    std::string name;
    double population = 0.0;
    double pop_growth_rate = 0.0; // fraction per year
    double land_area_sqkm = 0.0;
    double median_household_income = 0.0;
    double existing_cells = 0.0;
    double data_demand_gb_per_user_month = 0.0;

    double pop_density() const { return population / land_area_sqkm; }
    double cell_density() const { return existing_cells / land_area_sqkm; }
};

struct CountyDataset {
    std::vector<CountyRecord> records;
    double national_household_income = 0.0; // USD/yr
};

/// Throws ValidationError (message cites fips_id) if any field breaks the
/// record invariants: land_area > 0, population >= 0, MHI > 0,
/// growth > -1, non-negative cells and data demand, finite densities.
void validate_record(const CountyRecord& rec);

/// Population-weighted mean of median household income. Falls back to the
/// unweighted mean when total population is zero.
double population_weighted_mhi(const std::vector<CountyRecord>& records);

} // namespace ransim
