#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "agt/qseries.hpp"
#include "agt/sampling.hpp"

namespace agt {

// Keys keep insertion order so that reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "agt-lab/1";

// Fixes the variable order used when printing rational functions, so that
// output does not depend on which computation touched a name first.
void register_standard_variables();

std::string rational_string(const Rational& r);
Json series_to_json(const QSeries& s);
// One row per term: one column per ring variable, then the coefficient.
std::string series_to_csv(const QSeries& s);

struct SeriesDiff {
  Exponents exponent;
  RatFunc computed;
  RatFunc expected;
};

struct SeriesVerdict {
  bool pass = true;
  std::string note;  // set when the truncation orders differ
  std::vector<SeriesDiff> diffs;
};

// Exact comparison. Diffs are listed in increasing exponent order.
SeriesVerdict compare_series(const QSeries& computed, const QSeries& expected, size_t max_diffs = 8);
Json verdict_to_json(const SeriesVerdict& v, const SeriesRingPtr& ring);

struct SeriesPair {
  std::string label;
  QSeries computed;
  QSeries expected;
};

// Per-pair verdicts and an overall verdict. In sampled mode `points` lists
// the parameter values that were used, in the order of the pairs' samples.
Json agt_report(const std::vector<SeriesPair>& pairs, Mode mode, const std::vector<std::uint64_t>& seeds = {},
                const std::vector<ParamAssignment>& points = {});

Json assignment_to_json(const ParamAssignment& a);

struct VerifyConfig {
  std::uint64_t seed = 1;
  int seeds = 3;  // independent seeds seed, seed + 1, ... for sampled suites
  int jobs = 1;
};

struct SuiteResult {
  std::string name;
  int criterion = 0;
  bool pass = false;
  std::string summary;
  Json detail;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string description;
};

// Every suite, in criterion order. "determinism" is run by verify_all.
const std::vector<SuiteInfo>& suite_catalog();
bool has_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const VerifyConfig& config);

// Runs every suite; the determinism suite reruns them all with a different
// job count and compares the serialized reports.
std::vector<SuiteResult> verify_all(const VerifyConfig& config);

// Relation checks behind `fock-check`: "chevalley", "virasoro", "whittaker"
// or "primary". k = 1 selects the one-boson space where that makes sense.
// Throws std::invalid_argument for unknown names or unsupported k.
Json fock_check_report(const std::string& suite, int k, int grade, bool literal_convention, bool& pass);

Json suite_to_json(const SuiteResult& r, const VerifyConfig& config);
Json verify_report(const std::vector<SuiteResult>& results, const VerifyConfig& config);

}  // namespace agt
