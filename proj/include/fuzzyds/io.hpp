#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fuzzyds/bpa.hpp"
#include "fuzzyds/combine.hpp"
#include "fuzzyds/core.hpp"

// JSON wire formats:
//   fuzzy set     {"frame": [...], "grades": {"label": g, ...}}
//   bpa           {"frame": [...], "focals": [{"grades": {...}, "mass": m}, ...]}
//   relation      {"source": [...], "target": [...], "rows": {"s": {"t": g, ...}, ...}}
//   distribution  {"frame": [...], "p": {"s": p, ...}}
// Omitted labels mean 0. Unknown keys are ignored, so the output of
// combination (a bpa plus audit fields) reads back as a bpa.
namespace fuzzyds::io {

using nlohmann::json;

// Mass sums within epsilon of 1 are accepted as is. Sums off by less than
// kMassWarningBand are rescaled with a warning, or rejected when strict.
inline constexpr double kMassWarningBand = 1e-6;

struct ParseOptions {
  bool strict = false;
};

struct Diagnostics {
  std::vector<std::string> warnings;
};

json load_file(const std::filesystem::path& path);

Frame frame_from_json(const json& labels);
FuzzySet fuzzy_set_from_json(const json& doc);
Bpa bpa_from_json(const json& doc, const ParseOptions& options = {},
                  Diagnostics* diagnostics = nullptr);
CompatibilityRelation relation_from_json(const json& doc);
SourceDistribution distribution_from_json(const json& doc, const ParseOptions& options = {},
                                          Diagnostics* diagnostics = nullptr);

json to_json(const Frame& frame);
/// Grades map only (nonzero entries).
json grades_to_json(const FuzzySet& set);
json to_json(const FuzzySet& set);
json to_json(const Bpa& bpa);
json to_json(const Decomposition& decomposition);
json to_json(const CombinationReport& report);

}  // namespace fuzzyds::io
