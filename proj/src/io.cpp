#include "fuzzyds/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "fuzzyds/error.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds::io {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const json& member(const json& doc, const char* key) {
  if (!doc.is_object()) invalid("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) invalid(std::string("missing key \"") + key + "\"");
  return *it;
}

double number(const json& value, const std::string& context) {
  if (!value.is_number()) invalid(context + " must be a number");
  return value.get<double>();
}

double grade(const json& value, const std::string& context) {
  const double g = number(value, context);
  if (!(g >= 0.0 && g <= 1.0)) {
    std::ostringstream msg;
    msg << context << " is " << g << ", outside [0, 1]";
    invalid(msg.str());
  }
  return g;
}

std::vector<double> dense_grades(const Frame& frame, const json& grades, const std::string& what) {
  if (!grades.is_object()) invalid(what + " must be an object mapping labels to grades");
  std::vector<double> dense(frame.size(), 0.0);
  for (const auto& [label, value] : grades.items()) {
    dense[frame.index_of(label)] = grade(value, what + " of '" + label + "'");
  }
  return dense;
}

// Applies the mass-sum policy; returns the factor to divide masses by.
double mass_scale(double total, const char* what, const ParseOptions& options,
                  Diagnostics* diagnostics) {
  const double off = std::fabs(total - 1.0);
  if (off <= epsilon()) return 1.0;
  std::ostringstream msg;
  msg.precision(17);
  msg << what << " sum to " << total << ", not 1";
  if (off >= kMassWarningBand || options.strict) throw Error(ErrorKind::BadMass, msg.str());
  if (diagnostics) diagnostics->warnings.push_back(msg.str() + "; rescaled");
  return total;
}

}  // namespace

json load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    invalid("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

Frame frame_from_json(const json& labels) {
  if (!labels.is_array()) invalid("frame must be an array of labels");
  std::vector<std::string> out;
  for (const auto& label : labels) {
    if (!label.is_string()) invalid("frame labels must be strings");
    out.push_back(label.get<std::string>());
  }
  return Frame(std::move(out));
}

FuzzySet fuzzy_set_from_json(const json& doc) {
  Frame frame = frame_from_json(member(doc, "frame"));
  auto grades = dense_grades(frame, member(doc, "grades"), "grade");
  return FuzzySet(std::move(frame), std::move(grades));
}

Bpa bpa_from_json(const json& doc, const ParseOptions& options, Diagnostics* diagnostics) {
  Frame frame = frame_from_json(member(doc, "frame"));
  const json& focals = member(doc, "focals");
  if (!focals.is_array()) invalid("\"focals\" must be an array");
  std::vector<Focal> out;
  double total = 0.0;
  for (const auto& entry : focals) {
    FuzzySet set(frame, dense_grades(frame, member(entry, "grades"), "focal grade"));
    const double mass = number(member(entry, "mass"), "focal mass");
    total += mass;
    out.push_back(Focal{std::move(set), mass});
  }
  const double scale = mass_scale(total, "focal masses", options, diagnostics);
  if (scale != 1.0) {
    for (Focal& f : out) f.mass /= scale;
  }
  return Bpa(std::move(frame), std::move(out));
}

CompatibilityRelation relation_from_json(const json& doc) {
  Frame source = frame_from_json(member(doc, "source"));
  Frame target = frame_from_json(member(doc, "target"));
  const json& rows = member(doc, "rows");
  if (!rows.is_object()) invalid("\"rows\" must be an object keyed by source label");
  std::vector<double> matrix(source.size() * target.size(), 0.0);
  for (const auto& [label, row] : rows.items()) {
    const std::size_t s = source.index_of(label);
    auto dense = dense_grades(target, row, "possibility");
    std::copy(dense.begin(), dense.end(), matrix.begin() + static_cast<std::ptrdiff_t>(s * target.size()));
  }
  return CompatibilityRelation(std::move(source), std::move(target), std::move(matrix));
}

SourceDistribution distribution_from_json(const json& doc, const ParseOptions& options,
                                          Diagnostics* diagnostics) {
  Frame frame = frame_from_json(member(doc, "frame"));
  const json& p = member(doc, "p");
  if (!p.is_object()) invalid("\"p\" must be an object mapping labels to probabilities");
  std::vector<double> probabilities(frame.size(), 0.0);
  double total = 0.0;
  for (const auto& [label, value] : p.items()) {
    const double v = number(value, "probability of '" + label + "'");
    if (v < 0.0) invalid("probability of '" + label + "' is negative");
    probabilities[frame.index_of(label)] = v;
    total += v;
  }
  const double scale = mass_scale(total, "probabilities", options, diagnostics);
  if (scale != 1.0) {
    for (double& v : probabilities) v /= scale;
  }
  return SourceDistribution(std::move(frame), std::move(probabilities));
}

json to_json(const Frame& frame) { return json(frame.labels()); }

json grades_to_json(const FuzzySet& set) {
  json grades = json::object();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.grade(i) > 0.0) grades[set.frame().label(i)] = set.grade(i);
  }
  return grades;
}

json to_json(const FuzzySet& set) {
  return json{{"frame", to_json(set.frame())}, {"grades", grades_to_json(set)}};
}

json to_json(const Bpa& bpa) {
  json focals = json::array();
  for (const Focal& f : bpa.focals()) {
    focals.push_back(json{{"grades", grades_to_json(f.set)}, {"mass", f.mass}});
  }
  return json{{"frame", to_json(bpa.frame())}, {"focals", std::move(focals)}};
}

json to_json(const Decomposition& decomposition) {
  json levels = json::array();
  for (const Level& level : decomposition) {
    levels.push_back(json{{"alpha", level.alpha},
                          {"fraction", level.fraction},
                          {"cut", level.cut.support()}});
  }
  return json{{"levels", std::move(levels)}};
}

json to_json(const CombinationReport& report) {
  json doc = to_json(report.result);
  doc["conflict_mass"] = report.conflict_mass;
  json pairs = json::array();
  for (const PairRecord& p : report.pair_log) {
    pairs.push_back(json{{"left", p.left}, {"right", p.right}, {"peak", p.peak},
                         {"retained", p.retained}});
  }
  doc["pair_log"] = std::move(pairs);
  return doc;
}

}  // namespace fuzzyds::io
