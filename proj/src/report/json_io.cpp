#include <sstream>

#include "agt/report.hpp"

namespace agt {

void register_standard_variables() {
  for (const char* name : {"e1", "e2", "mu", "mu0", "mu1", "mu2", "mu3", "eta", "beta", "a", "b"}) Vars::id(name);
}

std::string rational_string(const Rational& r) { return r.get_str(); }

Json series_to_json(const QSeries& s) {
  const auto& ring = *s.ring();
  Json out;
  out["variables"] = {{"graded", ring.graded}, {"ungraded", ring.ungraded}};
  out["order"] = rational_string(s.order());
  Json terms = Json::array();
  for (const auto& [e, c] : s.terms()) {
    Json exps = Json::array();
    for (const auto& x : e) exps.push_back(rational_string(x));
    terms.push_back({{"exponent", exps}, {"coefficient", c.to_string()}});
  }
  out["terms"] = terms;
  return out;
}

std::string series_to_csv(const QSeries& s) {
  const auto& ring = *s.ring();
  std::ostringstream os;
  for (const auto& g : ring.graded) os << g << ",";
  for (const auto& u : ring.ungraded) os << u << ",";
  os << "coefficient\n";
  for (const auto& [e, c] : s.terms()) {
    for (const auto& x : e) os << rational_string(x) << ",";
    os << '"' << c.to_string() << '"' << "\n";
  }
  return os.str();
}

SeriesVerdict compare_series(const QSeries& computed, const QSeries& expected, size_t max_diffs) {
  SeriesVerdict v;
  if (!(*computed.ring() == *expected.ring())) {
    v.pass = false;
    v.note = "series live in different rings";
    return v;
  }
  if (computed.order() != expected.order()) {
    v.pass = false;
    v.note = "truncation orders differ: " + rational_string(computed.order()) + " vs " +
             rational_string(expected.order());
  }
  QSeries delta = computed - expected;
  for (const auto& [e, c] : delta.terms()) {
    v.pass = false;
    if (v.diffs.size() >= max_diffs) break;
    v.diffs.push_back({e, computed.coefficient(e), expected.coefficient(e)});
  }
  return v;
}

Json verdict_to_json(const SeriesVerdict& v, const SeriesRingPtr& ring) {
  Json out;
  out["pass"] = v.pass;
  if (!v.note.empty()) out["note"] = v.note;
  Json diffs = Json::array();
  for (const auto& d : v.diffs) {
    Json mono = Json::object();
    for (size_t i = 0; i < d.exponent.size(); ++i) {
      const std::string& name =
          i < ring->graded.size() ? ring->graded[i] : ring->ungraded[i - ring->graded.size()];
      mono[name] = rational_string(d.exponent[i]);
    }
    diffs.push_back({{"exponent", mono}, {"computed", d.computed.to_string()}, {"expected", d.expected.to_string()}});
  }
  out["diffs"] = diffs;
  return out;
}

Json assignment_to_json(const ParamAssignment& a) {
  Json out = Json::object();
  for (const auto& [name, value] : a) out[name] = rational_string(value);
  return out;
}

Json agt_report(const std::vector<SeriesPair>& pairs, Mode mode, const std::vector<std::uint64_t>& seeds,
                const std::vector<ParamAssignment>& points) {
  Json out;
  out["mode"] = mode == Mode::Symbolic ? "symbolic" : "sampled";
  if (mode == Mode::Sampled) {
    out["seeds"] = seeds;
    Json pts = Json::array();
    for (const auto& p : points) pts.push_back(assignment_to_json(p));
    out["points"] = pts;
  }
  bool pass = true;
  Json checks = Json::array();
  for (const auto& p : pairs) {
    SeriesVerdict v = compare_series(p.computed, p.expected);
    pass = pass && v.pass;
    Json c = verdict_to_json(v, p.computed.ring());
    c["label"] = p.label;
    checks.push_back(c);
  }
  out["verdict"] = pass ? "pass" : "fail";
  out["checks"] = checks;
  return out;
}

Json suite_to_json(const SuiteResult& r, const VerifyConfig& config) {
  Json out;
  out["schema"] = kSchema;
  out["suite"] = r.name;
  out["criterion"] = r.criterion;
  out["seed"] = config.seed;
  out["verdict"] = r.pass ? "pass" : "fail";
  out["summary"] = r.summary;
  out["detail"] = r.detail;
  return out;
}

Json verify_report(const std::vector<SuiteResult>& results, const VerifyConfig& config) {
  Json out;
  out["schema"] = kSchema;
  out["config"] = {{"seed", config.seed}, {"seeds", config.seeds}};
  bool pass = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    pass = pass && r.pass;
    suites.push_back(suite_to_json(r, config));
  }
  out["verdict"] = pass ? "pass" : "fail";
  out["suites"] = suites;
  return out;
}

}  // namespace agt
