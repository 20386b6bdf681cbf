#include "fuzzyds/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "fuzzyds/belief.hpp"
#include "fuzzyds/bpa.hpp"
#include "fuzzyds/combine.hpp"
#include "fuzzyds/error.hpp"
#include "fuzzyds/io.hpp"
#include "fuzzyds/legacy.hpp"
#include "fuzzyds/oracle.hpp"
#include "fuzzyds/tolerance.hpp"

namespace fuzzyds::cli {

namespace {

using io::json;

constexpr double kOracleTolerance = 1e-9;

struct Options {
  std::string format = "table";
  int digits = 2;
  bool strict = false;
  bool json_errors = false;
  std::string bpa;
  std::string query;
  std::string left;
  std::string right;
  std::string set;
  std::string relation;
  std::string distribution;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

class Table {
 public:
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out) const {
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t c = 0; c < row.size(); ++c) {
        line += row[c];
        if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

// Short grade: fixed rounding with trailing zeros dropped ("0.50" -> "0.5").
std::string short_grade(double value, int digits) {
  std::string s = format_fixed(value, digits);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string describe(const FuzzySet& set, int digits) {
  std::string out = "{";
  bool first = true;
  const bool crisp = set.is_crisp();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set.grade(i) <= epsilon()) continue;
    if (!first) out += ", ";
    first = false;
    if (!crisp) out += short_grade(set.grade(i), digits) + "/";
    out += set.frame().label(i);
  }
  return out + "}";
}

class Session {
 public:
  Session(const Options& options, std::ostream& out, std::ostream& err)
      : opt_(options), out_(out), err_(err) {}

  int bel_or_pls(bool lower) {
    const Bpa bpa = load_bpa(opt_.bpa);
    const FuzzySet query = load_query(bpa);
    const double value = lower ? fuzzyds::bel(bpa, query) : fuzzyds::pls(bpa, query);
    if (as_json()) {
      emit(json{{lower ? "bel" : "pls", value}});
    } else {
      out_ << fixed(value) << '\n';
    }
    return kExitOk;
  }

  int interval() {
    const Bpa bpa = load_bpa(opt_.bpa);
    const FuzzySet query = load_query(bpa);
    const BeliefInterval range = fuzzyds::interval(bpa, query);
    if (as_json()) {
      emit(json{{"bel", range.bel}, {"pls", range.pls}});
    } else {
      out_ << '[' << fixed(range.bel) << ", " << fixed(range.pls) << "]\n";
    }
    return kExitOk;
  }

  int combine() {
    const Bpa left = load_bpa(opt_.left);
    const Bpa right = load_bpa(opt_.right);
    const CombinationReport report = fuzzyds::combine(left, right);
    if (as_json()) {
      emit(io::to_json(report));
      return kExitOk;
    }
    print_bpa(report.result);
    out_ << "conflict  " << fixed(report.conflict_mass) << "\n\n";
    Table pairs;
    pairs.add({"left", "right", "peak", "retained"});
    for (const PairRecord& p : report.pair_log) {
      pairs.add({std::to_string(p.left + 1), std::to_string(p.right + 1), fixed(p.peak),
                 fixed(p.retained)});
    }
    pairs.print(out_);
    return kExitOk;
  }

  int decompose() {
    if (opt_.set.empty() == opt_.bpa.empty()) {
      throw Error(ErrorKind::InvalidInput, "decompose needs exactly one of --set or --bpa");
    }
    if (!opt_.set.empty()) {
      const FuzzySet set = io::fuzzy_set_from_json(io::load_file(opt_.set));
      const Decomposition d = fuzzyds::decompose(set);
      if (as_json()) {
        emit(io::to_json(d));
        return kExitOk;
      }
      Table table;
      table.add({"alpha", "fraction", "cut"});
      for (const Level& level : d) {
        table.add({fixed(level.alpha), fixed(level.fraction), describe(level.cut, opt_.digits)});
      }
      table.print(out_);
      return kExitOk;
    }

    const Bpa bpa = load_bpa(opt_.bpa);
    json focals = json::array();
    Table table;
    table.add({"focal", "alpha", "fraction", "mass", "cut"});
    for (std::size_t k = 0; k < bpa.size(); ++k) {
      const Focal& focal = bpa.focals()[k];
      const Decomposition d = fuzzyds::decompose(focal.set);
      json levels = io::to_json(d)["levels"];
      std::size_t row = 0;
      for (const Level& level : d) {
        levels[row++]["mass"] = level.fraction * focal.mass;
        table.add({std::to_string(k + 1), fixed(level.alpha), fixed(level.fraction),
                   fixed(level.fraction * focal.mass), describe(level.cut, opt_.digits)});
      }
      focals.push_back(json{{"mass", focal.mass}, {"levels", std::move(levels)}});
    }
    if (as_json()) {
      emit(json{{"frame", io::to_json(bpa.frame())}, {"focals", std::move(focals)}});
    } else {
      table.print(out_);
    }
    return kExitOk;
  }

  int induce() {
    const CompatibilityRelation relation = io::relation_from_json(io::load_file(opt_.relation));
    const SourceDistribution distribution =
        io::distribution_from_json(io::load_file(opt_.distribution), parse_options(), &diag_);
    flush_warnings();
    const Bpa bpa = induce_bpa(distribution, relation);
    if (as_json()) {
      emit(io::to_json(bpa));
    } else {
      print_bpa(bpa);
    }
    return kExitOk;
  }

  int compare() {
    const Bpa bpa = load_bpa(opt_.bpa);
    const FuzzySet query = load_query(bpa);
    std::vector<std::pair<std::string, double>> rows{
        {"yen", fuzzyds::bel(bpa, query)},
        {"zadeh_EC", legacy::expected_certainty(bpa, query)},
    };
    for (auto kind : {legacy::MeasureKind::Ishizuka, legacy::MeasureKind::Yager,
                      legacy::MeasureKind::Ogawa}) {
      rows.emplace_back(std::string(legacy::to_string(kind)),
                        legacy::bel_via_inclusion(kind, bpa, query));
    }
    if (as_json()) {
      json measures = json::array();
      for (const auto& [name, value] : rows) measures.push_back(json{{"measure", name}, {"bel", value}});
      emit(json{{"measures", std::move(measures)}});
      return kExitOk;
    }
    Table table;
    table.add({"measure", "bel"});
    for (const auto& [name, value] : rows) table.add({name, fixed(value)});
    table.print(out_);
    return kExitOk;
  }

  int oracle() {
    const Bpa bpa = load_bpa(opt_.bpa);
    const FuzzySet query = load_query(bpa);
    const double closed_bel = fuzzyds::bel(bpa, query);
    const double closed_pls = fuzzyds::pls(bpa, query);
    const oracle::OracleSolution solution = oracle::oracle_solve(bpa, query);
    const std::vector<double> samples = oracle::sample_feasible(bpa, query, opt_.samples, opt_.seed);

    const bool bel_agrees = std::fabs(closed_bel - solution.interval.bel) < kOracleTolerance;
    const bool pls_agrees = std::fabs(closed_pls - solution.interval.pls) < kOracleTolerance;
    const bool separable = std::fabs(solution.separable_min - solution.interval.bel) < kOracleTolerance &&
                           std::fabs(solution.separable_max - solution.interval.pls) < kOracleTolerance;
    const bool within = std::all_of(samples.begin(), samples.end(), [&](double v) {
      return v >= solution.interval.bel - epsilon() && v <= solution.interval.pls + epsilon();
    });

    if (as_json()) {
      emit(json{{"closed_form", {{"bel", closed_bel}, {"pls", closed_pls}}},
                {"oracle", {{"bel", solution.interval.bel}, {"pls", solution.interval.pls}}},
                {"separable", {{"bel", solution.separable_min}, {"pls", solution.separable_max}}},
                {"vertices", solution.vertices},
                {"agree", bel_agrees && pls_agrees},
                {"samples", samples.size()},
                {"samples_within", within}});
      return kExitOk;
    }
    Table table;
    table.add({"bound", "closed_form", "oracle", "agree"});
    table.add({"bel", fixed(closed_bel), fixed(solution.interval.bel), bel_agrees ? "yes" : "no"});
    table.add({"pls", fixed(closed_pls), fixed(solution.interval.pls), pls_agrees ? "yes" : "no"});
    table.print(out_);
    out_ << "vertices: " << solution.vertices << '\n'
         << "separable: " << (separable ? "yes" : "no") << '\n'
         << "samples: " << samples.size() << ", all within [bel, pls]: " << (within ? "yes" : "no")
         << '\n';
    return kExitOk;
  }

 private:
  bool as_json() const { return opt_.format == "json"; }
  std::string fixed(double v) const { return format_fixed(v, opt_.digits); }
  void emit(const json& doc) { out_ << doc.dump(2) << '\n'; }
  io::ParseOptions parse_options() const { return io::ParseOptions{opt_.strict}; }

  void flush_warnings() {
    for (const auto& w : diag_.warnings) {
      if (opt_.json_errors) {
        err_ << json{{"warning", w}}.dump() << '\n';
      } else {
        err_ << "warning: " << w << '\n';
      }
    }
    diag_.warnings.clear();
  }

  Bpa load_bpa(const std::string& path) {
    Bpa bpa = io::bpa_from_json(io::load_file(path), parse_options(), &diag_);
    flush_warnings();
    return bpa;
  }

  FuzzySet load_query(const Bpa& bpa) const {
    FuzzySet query = io::fuzzy_set_from_json(io::load_file(opt_.query));
    require_same_frame(bpa.frame(), query.frame());
    return query;
  }

  void print_bpa(const Bpa& bpa) {
    Table table;
    table.add({"focal", "mass"});
    for (const Focal& f : bpa.focals()) table.add({describe(f.set, opt_.digits), fixed(f.mass)});
    table.print(out_);
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  io::Diagnostics diag_;
};

void report(std::ostream& err, bool json_errors, std::string_view kind, const std::string& message,
            int code) {
  if (json_errors) {
    err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  } else {
    err << "error: " << kind << ": " << message << '\n';
  }
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TotalConflict:
    case ErrorKind::TotalIncompatibility:
      return kExitConflict;
    default:
      return kExitInvalid;
  }
}

}  // namespace

std::string format_fixed(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  double scaled = value * scale;
  scaled = std::round(scaled + std::copysign(epsilon() * scale, scaled));
  if (scaled == 0.0) scaled = 0.0;  // no "-0.00"
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, scaled / scale);
  return buffer;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Belief and plausibility of fuzzy sets under fuzzy evidence", "fuzzyds"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--digits", opt.digits, "Decimals shown in table output")
      ->check(CLI::Range(0, 15))
      ->capture_default_str();
  app.add_flag("--strict", opt.strict, "Reject mass sums that are off by more than epsilon");
  app.add_flag("--json-errors", opt.json_errors, "Emit diagnostics on stderr as JSON lines");

  auto bpa_and_query = [&](CLI::App* sub) {
    sub->add_option("--bpa", opt.bpa, "Bpa JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--query", opt.query, "Fuzzy set JSON file")->required()->check(CLI::ExistingFile);
  };

  auto* bel_cmd = app.add_subcommand("bel", "Belief of a fuzzy set");
  bpa_and_query(bel_cmd);
  auto* pls_cmd = app.add_subcommand("pls", "Plausibility of a fuzzy set");
  bpa_and_query(pls_cmd);
  auto* interval_cmd = app.add_subcommand("interval", "Belief interval [bel, pls]");
  bpa_and_query(interval_cmd);
  auto* compare_cmd = app.add_subcommand("compare", "Belief under each comparison measure");
  bpa_and_query(compare_cmd);
  auto* oracle_cmd = app.add_subcommand("oracle", "Check bel/pls against vertex enumeration");
  bpa_and_query(oracle_cmd);
  oracle_cmd->add_option("--samples", opt.samples, "Random feasible allocations")->capture_default_str();
  oracle_cmd->add_option("--seed", opt.seed, "Sampler seed")->capture_default_str();

  auto* combine_cmd = app.add_subcommand("combine", "Combine two bpa's");
  combine_cmd->add_option("--left", opt.left, "First bpa")->required()->check(CLI::ExistingFile);
  combine_cmd->add_option("--right", opt.right, "Second bpa")->required()->check(CLI::ExistingFile);

  auto* decompose_cmd = app.add_subcommand("decompose", "Alpha-level decomposition");
  decompose_cmd->add_option("--set", opt.set, "Fuzzy set JSON file")->check(CLI::ExistingFile);
  decompose_cmd->add_option("--bpa", opt.bpa, "Bpa JSON file; decomposes every focal")
      ->check(CLI::ExistingFile);

  auto* induce_cmd = app.add_subcommand("induce", "Induce a bpa from a relation and a distribution");
  induce_cmd->add_option("--relation", opt.relation, "Relation JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  induce_cmd->add_option("--distribution", opt.distribution, "Distribution JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const bool json_errors =
        std::find(args.begin(), args.end(), "--json-errors") != args.end();
    report(err, json_errors, "Usage", e.what(), kExitInvalid);
    return kExitInvalid;
  }

  if (const char* env = std::getenv("FE_EPSILON")) {
    try {
      set_epsilon(std::stod(env));
    } catch (const std::exception&) {
      report(err, opt.json_errors, "InvalidInput",
             std::string("FE_EPSILON must be a number in (0, 0.5), got '") + env + "'", kExitInvalid);
      return kExitInvalid;
    }
  }

  Session session(opt, out, err);
  try {
    if (*bel_cmd) return session.bel_or_pls(true);
    if (*pls_cmd) return session.bel_or_pls(false);
    if (*interval_cmd) return session.interval();
    if (*combine_cmd) return session.combine();
    if (*decompose_cmd) return session.decompose();
    if (*induce_cmd) return session.induce();
    if (*compare_cmd) return session.compare();
    if (*oracle_cmd) return session.oracle();
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report(err, opt.json_errors, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const io::json::exception& e) {
    report(err, opt.json_errors, "InvalidInput", e.what(), kExitInvalid);
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace fuzzyds::cli
