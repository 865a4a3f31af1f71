#pragma once

#include <array>
#include <string>

#include "ransim/county.hpp"

namespace ransim {

/// The eight region classes, ordered by strictly decreasing centroid
/// population density.
enum class RegionLabel {
    Urban = 0,
    Suburban1,
    Suburban2,
    Rural1,
    Rural2,
    Rural3,
    Rural4,
    Rural5,
};

inline constexpr int kRegionCount = 8;

const char* to_string(RegionLabel label);
RegionLabel region_label_from_string(const std::string& name); // throws ValidationError

/// Published cluster centroid for one region type (cells and persons per
/// square km, raw units).
struct RegionType {
    RegionLabel label;
    double centroid_cell_density;
    double centroid_pop_density;
};

/// The eight built-in region types with their published centroids.
const std::array<RegionType, kRegionCount>& region_types();

/// Summary profile of one region type: per-region means used to build
/// representative regions and to calibrate the synthetic county generator.
struct RegionProfile {
    RegionLabel label;
    int county_count;              // counties of this type in the reference dataset
    double mean_population;        // persons
    double mean_mhi;               // USD/yr
    double gb_per_user_month;      // per-user data demand
    double mean_cell_density;      // cells per sq km
    double pop_density_min;        // persons per sq km
    double pop_density_max;
    double pop_density_mean;
};

const std::array<RegionProfile, kRegionCount>& region_profiles();
const RegionProfile& region_profile(RegionLabel label);

/// Nearest published centroid in log10 density space (both densities are
/// floored at 1e-4 before taking logs; ties resolve to the denser label).
RegionLabel classify_by_centroid(const CountyRecord& county);
RegionLabel classify_by_centroid(double cell_density, double pop_density);

} // namespace ransim
