#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ransim/county.hpp"
#include "ransim/regions.hpp"

namespace ransim {

/// Exact CSV header expected by load_counties / produced by write_counties.
extern const char* const kCountyCsvHeader;

/// Load a county CSV. The header must match kCountyCsvHeader exactly.
/// An optional leading metadata line `# nhi=<usd/yr>` sets the national
/// household income; otherwise it defaults to the population-weighted mean
/// MHI of the file, and `nhi_override` (e.g. from config) wins over both.
///
/// Errors: ConfigError when the file cannot be opened; SchemaError for a
/// bad header or malformed field; ValidationError for row-level invariant
/// violations (message cites the fips_id) and duplicate fips_ids.
CountyDataset load_counties(const std::string& path,
                            std::optional<double> nhi_override = std::nullopt);

/// Write a dataset back to CSV, including the `# nhi=` metadata line.
/// Round-trips all field values exactly.
void write_counties(const CountyDataset& dataset, const std::string& path);

/// Deterministic synthetic counties calibrated to a region profile:
/// population density is log-uniform within the profile's min-max band,
/// land area uniform in a band centered so mean population matches the
/// profile, MHI and per-user demand uniform within +/-15% and +/-20% of the
/// profile means. Pure function of (profile, count, seed).
std::vector<CountyRecord> generate_synthetic_counties(const RegionProfile& profile, int count,
                                                      std::uint64_t seed);
std::vector<CountyRecord> generate_synthetic_counties(RegionLabel label, int count,
                                                      std::uint64_t seed);

/// The bundled reference fixture: one batch per region profile, sized by
/// the profile county counts (2074 records in total).
CountyDataset synthetic_reference_dataset(std::uint64_t seed);

} // namespace ransim
