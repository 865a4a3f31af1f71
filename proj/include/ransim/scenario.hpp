#pragma once

#include <string>

#include "ransim/regions.hpp"

namespace ransim {

/// The three procurement scenarios. Traditional and Predatory keep the NIS
/// tier; DirectOEM removes it (the MNO buys straight from the OEM).
enum class Scenario { Traditional = 0, Predatory = 1, DirectOEM = 2 };

inline constexpr int kScenarioCount = 3;

const char* to_string(Scenario s);
const char* scenario_short_id(Scenario s); // "s1", "s2", "s3"
Scenario scenario_from_string(const std::string& name); // accepts names or s1/s2/s3

inline bool has_nis_tier(Scenario s) { return s != Scenario::DirectOEM; }

/// Price/configuration tier. Urban and Suburban 1 share the high-capacity
/// tier; Suburban 2 and Rural 1-5 share the coverage-oriented tier.
enum class RegionClass { UrbanSuburban1 = 0, Suburban2RuralAll = 1 };

const char* to_string(RegionClass c);
RegionClass region_class_from_string(const std::string& name);
RegionClass region_class_of(RegionLabel label);

} // namespace ransim
