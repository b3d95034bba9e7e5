#pragma once

#include <json.hpp>

#include "permutent/entropy.hpp"
#include "permutent/gaussian.hpp"
#include "permutent/oracle.hpp"
#include "permutent/spectrum.hpp"

// JSON forms of the result types. Field names are part of the file formats
// documented in schema/.
namespace permutent {

using Json = nlohmann::ordered_json;

/// {"L": int | "inf", "d": int, "occupations" | "densities": [...]}
Json sector_to_json(const SectorConfig& cfg);
SectorConfig sector_from_json(const Json& j);

/// {"header": {...}, "entries": [{"composition", "log2_weight", "weight"?}]}
Json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const Json& j);

Json report_to_json(const EntropyReport& r);
Json report_to_json(const CorrectionReport& r);
Json model_to_json(const GaussianModel& g);
Json report_to_json(const oracle::MatchReport& r);

}  // namespace permutent
