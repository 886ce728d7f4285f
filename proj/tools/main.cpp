#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "agt/edges.hpp"
#include "agt/errors.hpp"
#include "agt/nekrasov_ale.hpp"
#include "agt/nekrasov_c2.hpp"
#include "agt/report.hpp"
#include "agt/symfunc.hpp"

using namespace agt;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw UsageError("not a rational number: " + text);
  if (r.get_den() == 0) throw UsageError("zero denominator in " + text);
  r.canonicalize();
  return r;
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

bool looks_numeric(const std::string& s) {
  return !s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-' || s[0] == '+');
}

// Options shared by the series commands.
struct Common {
  std::string mode = "symbolic";
  std::uint64_t seed = 1;
  int samples = 3;
  int jobs = 1;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* sub, Common& c, bool series) {
  if (series) {
    sub->add_option("--mode", c.mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
    sub->add_option("--samples", c.samples, "number of sample points in sampled mode")->check(CLI::PositiveNumber);
  }
  sub->add_option("--seed", c.seed, "seed for sampled parameters");
  sub->add_option("--jobs", c.jobs, "worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", c.out, "write the report to this file instead of stdout");
  sub->add_option("--config", "JSON file with default option values; flags override it");
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Masses given as numbers or symbol names; defaults are mu0, mu1, ...
std::vector<RatFunc> masses_at(const std::vector<std::string>& given, int count, const ParamAssignment* point) {
  if (!given.empty() && static_cast<int>(given.size()) != count)
    throw UsageError("expected " + std::to_string(count) + " masses, got " + std::to_string(given.size()));
  std::vector<RatFunc> out;
  for (int i = 0; i < count; ++i) {
    if (given.empty()) {
      out.push_back(param("mu" + std::to_string(i), point));
    } else if (looks_numeric(given[i])) {
      out.push_back(RatFunc(parse_rational(given[i])));
    } else {
      out.push_back(param(given[i], point));
    }
  }
  return out;
}

std::vector<std::string> sampled_names(const std::vector<std::string>& given, int count) {
  std::vector<std::string> names{"e1", "e2"};
  for (int i = 0; i < count; ++i) {
    if (given.empty())
      names.push_back("mu" + std::to_string(i));
    else if (!looks_numeric(given[i]))
      names.push_back(given[i]);
  }
  return names;
}

// Sampled series share exponents; CSV gets one coefficient column per sample.
std::string samples_to_csv(const std::vector<QSeries>& series) {
  if (series.empty()) return "";
  const auto& ring = *series[0].ring();
  std::map<Exponents, std::vector<std::string>> rows;
  for (size_t i = 0; i < series.size(); ++i)
    for (const auto& [e, c] : series[i].terms()) {
      auto& row = rows[e];
      row.resize(series.size(), "0");
      row[i] = c.to_string();
    }
  std::ostringstream os;
  for (const auto& g : ring.graded) os << g << ",";
  for (const auto& u : ring.ungraded) os << u << ",";
  for (size_t i = 0; i < series.size(); ++i) os << (i ? "," : "") << "sample_" << i + 1;
  os << "\n";
  for (auto& [e, row] : rows) {
    row.resize(series.size(), "0");
    for (const auto& x : e) os << x.get_str() << ",";
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << '"' << row[i] << '"';
    os << "\n";
  }
  return os.str();
}

// Runs `compute` symbolically or at sampled points and formats the result.
int series_command(const Common& c, Json header, const std::vector<std::string>& names,
                   const std::function<QSeries(const ParamAssignment*)>& compute) {
  header["mode"] = c.mode;
  if (c.mode == "symbolic") {
    QSeries s = compute(nullptr);
    if (c.format == "csv") {
      emit(c, series_to_csv(s));
    } else {
      header["series"] = series_to_json(s);
      emit(c, dump(header));
    }
    return kOk;
  }
  SamplingConfig sc;
  sc.seed = c.seed;
  sc.samples = c.samples;
  std::vector<QSeries> series;
  auto points = for_each_sample(sc, names, [&](const ParamAssignment& p) {
    series.push_back(compute(&p));
    return true;
  });
  if (c.format == "csv") {
    emit(c, samples_to_csv(series));
    return kOk;
  }
  header["seed"] = c.seed;
  Json samples = Json::array();
  for (size_t i = 0; i < series.size(); ++i)
    samples.push_back({{"point", assignment_to_json(points[i])}, {"series", series_to_json(series[i])}});
  header["samples"] = samples;
  emit(c, dump(header));
  return kOk;
}

std::string csv_escape(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

// Reads --config from argv and splices the file's entries in as flags right
// after the subcommand, so that later command-line flags take precedence.
std::vector<std::string> merge_config(const std::vector<std::string>& args, CLI::App& app) {
  std::string path;
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty() || args.size() < 2) return args;
  CLI::App* sub = nullptr;
  try {
    sub = app.get_subcommand(args[1]);
  } catch (const CLI::OptionNotFound&) {
    return args;
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read config file " + path);
  Json config;
  try {
    config = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw UsageError("config file " + path + " is not valid JSON");
  }
  if (!config.is_object()) throw UsageError("config file must hold a JSON object");
  std::vector<std::string> extra;
  for (const auto& [key, value] : config.items()) {
    std::string flag = "--" + key;
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt == nullptr || key == "config") throw UsageError("config key '" + key + "' is not an option of " + args[1]);
    if (value.is_boolean()) {
      if (value.get<bool>()) extra.push_back(flag);
      continue;
    }
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (size_t i = 0; i < value.size(); ++i)
        text += (i ? "," : "") + (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
    } else {
      text = value.dump();
    }
    extra.push_back(flag);
    extra.push_back(text);
  }
  std::vector<std::string> merged{args[0], args[1]};
  merged.insert(merged.end(), extra.begin(), extra.end());
  merged.insert(merged.end(), args.begin() + 2, args.end());
  return merged;
}

CinvIndex parse_cinv(const std::string& s) { return s == "edge" ? CinvIndex::Edge : CinvIndex::Holonomy; }

}  // namespace

int main(int argc, char** argv) {
  register_standard_variables();

  CLI::App app{"Exact checks of instanton partition functions on C^2 and ALE spaces"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  // z-c2
  Common zc;
  std::string zc_quiver = "pure";
  int zc_order = 4;
  std::string zc_masses_text;
  bool zc_check = false;
  auto* z_c2 = app.add_subcommand("z-c2", "localization sum on C^2");
  z_c2->add_option("--quiver", zc_quiver, "pure, ahat:R or a:R");
  z_c2->add_option("--order", zc_order, "total degree in the couplings")->check(CLI::NonNegativeNumber);
  z_c2->add_option("--masses", zc_masses_text, "comma-separated numbers or symbol names");
  z_c2->add_flag("--check", zc_check, "compare with the closed form; exit 1 on mismatch");
  add_common(z_c2, zc, true);

  // z-ale
  Common za;
  int za_k = 2;
  std::string za_j_text = "0", za_masses_text;
  std::string za_quiver = "pure", za_order = "2", za_dmax, za_cinv = "holonomy";
  bool za_no_edges = false, za_no_shifts = false, za_check = false;
  auto* z_ale = app.add_subcommand("z-ale", "localization sum on X_k");
  z_ale->add_option("--k", za_k, "X_k")->check(CLI::Range(2, 16));
  z_ale->add_option("--j", za_j_text, "holonomy class, or one per node separated by commas");
  z_ale->add_option("--quiver", za_quiver, "pure, ahat:R or a:R");
  z_ale->add_option("--order", za_order, "bound on the total q-degree, p/q");
  z_ale->add_option("--dmax", za_dmax, "per-node bound on the charge Delta, p/q (default: the order)");
  z_ale->add_option("--masses", za_masses_text, "comma-separated numbers or symbol names");
  z_ale->add_option("--cinv", za_cinv, "diagonal entry of C^-1 in the edge conditions")
      ->check(CLI::IsMember({"holonomy", "edge"}));
  z_ale->add_flag("--no-edge-factors", za_no_edges, "drop the edge contributions");
  z_ale->add_flag("--no-mass-shifts", za_no_shifts, "drop the charge-dependent mass shifts");
  z_ale->add_flag("--check", za_check, "compare a single-node sum with its closed form; exit 1 on mismatch");
  add_common(z_ale, za, true);

  // jack
  Common jc;
  int jack_n = 3;
  std::string jack_beta;
  auto* jack = app.add_subcommand("jack", "Jack functions J_lambda(x; 1/beta) in the monomial basis");
  jack->add_option("--n", jack_n, "degree")->check(CLI::Range(0, 12));
  jack->add_option("--beta", jack_beta, "p/q; symbolic beta when omitted");
  add_common(jack, jc, false);

  // fock-check
  Common fc;
  std::string fc_suite = "chevalley";
  int fc_k = 2, fc_grade = 2;
  std::string fc_convention = "graded";
  auto* fock = app.add_subcommand("fock-check", "relation checks on Fock spaces");
  fock->add_option("--suite", fc_suite, "chevalley, virasoro, whittaker or primary")
      ->check(CLI::IsMember({"chevalley", "virasoro", "whittaker", "primary"}));
  fock->add_option("--k", fc_k, "lattice rank + 1, or 1 for a single boson")->check(CLI::Range(1, 8));
  fock->add_option("--grade", fc_grade, "highest grade of the test states")->check(CLI::Range(0, 8));
  fock->add_option("--convention", fc_convention, "Frenkel-Kac convention")
      ->check(CLI::IsMember({"graded", "literal"}));
  add_common(fock, fc, false);

  // edges
  Common ec;
  int edge_k = 2;
  std::string edge_v, edge_mu = "mu", edge_cinv = "holonomy";
  auto* edges = app.add_subcommand("edges", "edge contributions for a charge v = C^-1 u");
  edges->add_option("--k", edge_k, "X_k")->check(CLI::Range(2, 16));
  edges->add_option("--v", edge_v, "comma-separated p/q entries")->required();
  edges->add_option("--mu", edge_mu, "mass: number or symbol name");
  edges->add_option("--cinv", edge_cinv, "diagonal entry of C^-1 in the edge conditions")
      ->check(CLI::IsMember({"holonomy", "edge"}));
  add_common(edges, ec, false);

  // verify
  Common vc;
  std::string v_suite = "all";
  int v_seeds = 3;
  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  verify->add_option("--suite", v_suite, "suite name or all");
  verify->add_option("--seeds", v_seeds, "independent seeds for sampled suites")->check(CLI::PositiveNumber);
  verify->add_flag_callback("--list", [] {
    for (const auto& s : suite_catalog()) std::cout << s.name << "  (" << s.criterion << ") " << s.description << "\n";
    throw CLI::Success();
  });
  add_common(verify, vc, false);

  // report
  Common rc;
  std::string r_in;
  auto* report = app.add_subcommand("report", "summarize a verify report");
  report->add_option("input", r_in, "JSON written by verify")->required();
  report->add_option("--format", rc.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  report->add_option("--out", rc.out, "write the summary to this file");
  rc.format = "text";

  std::vector<std::string> args(argv, argv + argc);
  try {
    args = merge_config(args, app);
    std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (z_c2->parsed()) {
      QuiverSpec spec = QuiverSpec::parse(zc_quiver);
      auto zc_masses = split(zc_masses_text);
      int count = spec.kind == QuiverKind::Pure ? 0 : spec.mass_count();
      Json header;
      header["schema"] = kSchema;
      header["command"] = "z-c2";
      header["quiver"] = spec.name();
      header["order"] = zc_order;
      bool all_pass = true;
      Json checks = Json::array();
      int code = series_command(zc, header, sampled_names(zc_masses, count), [&](const ParamAssignment* p) {
        RatFunc e1 = param("e1", p), e2 = param("e2", p);
        auto m = masses_at(zc_masses, count, p);
        QSeries z = z_quiver_c2(spec, zc_order, m, e1, e2, zc.jobs);
        if (zc_check) {
          SeriesVerdict v = compare_series(z, closed_form_c2(spec, zc_order, m, e1, e2));
          all_pass = all_pass && v.pass;
          checks.push_back(verdict_to_json(v, z.ring()));
        }
        return z;
      });
      if (zc_check) {
        std::cerr << "closed form: " << (all_pass ? "pass" : "fail") << "\n";
        if (!all_pass) {
          Json diff{{"schema", kSchema}, {"closed_form", checks}};
          std::cerr << dump(diff);
          return kFailed;
        }
      }
      return code;
    }

    if (z_ale->parsed()) {
      AleQuiverSpec spec;
      spec.quiver = QuiverSpec::parse(za_quiver);
      spec.k = za_k;
      auto za_masses = split(za_masses_text);
      std::vector<int> za_j;
      for (const auto& t : split(za_j_text)) {
        Rational j = parse_rational(t);
        if (j.get_den() != 1) throw UsageError("holonomy classes are integers");
        za_j.push_back(static_cast<int>(j.get_num().get_si()));
      }
      if (za_j.size() != 1 && static_cast<int>(za_j.size()) != spec.quiver.nodes())
        throw UsageError("give one holonomy class, or one per node");
      spec.j = za_j;
      for (int j : za_j)
        if (j < 0 || j >= za_k) throw UsageError("holonomy classes must lie in 0..k-1");
      if (static_cast<int>(za_j.size()) == 1 && spec.quiver.nodes() > 1) spec.j.assign(spec.quiver.nodes(), za_j[0]);
      spec.order = parse_rational(za_order);
      if (!za_dmax.empty()) spec.delta_max = parse_rational(za_dmax);
      spec.cinv = parse_cinv(za_cinv);
      spec.edge_factors = !za_no_edges;
      spec.mass_shifts = !za_no_shifts;
      int count = spec.quiver.kind == QuiverKind::Pure ? 0 : spec.quiver.mass_count();
      Json header;
      header["schema"] = kSchema;
      header["command"] = "z-ale";
      header["quiver"] = spec.quiver.name();
      header["k"] = spec.k;
      header["j"] = spec.j;
      header["order"] = rational_string(spec.order);
      header["dmax"] = rational_string(spec.effective_delta_max());
      header["cinv"] = za_cinv;
      header["edge_factors"] = spec.edge_factors;
      header["mass_shifts"] = spec.mass_shifts;
      std::vector<std::string> warnings;
      bool all_pass = true;
      Json checks = Json::array();
      if (za_check && spec.quiver.nodes() != 1) throw UsageError("--check needs a single-node quiver");
      // Warnings are known before the sum is formed.
      if (spec.effective_delta_max() < spec.order)
        header["warnings"] = {"delta_max below the q-order: lattice terms may be missing"};
      int code = series_command(za, header, sampled_names(za_masses, count), [&](const ParamAssignment* p) {
        RatFunc e1 = param("e1", p), e2 = param("e2", p);
        auto m = masses_at(za_masses, count, p);
        AleSeries z = z_quiver_ale(spec, m, e1, e2, za.jobs);
        if (za_check) {
          AleClosedForm kind = spec.quiver.kind == QuiverKind::Pure   ? AleClosedForm::Pure
                               : spec.quiver.kind == QuiverKind::AHat ? AleClosedForm::AHat0
                                                                      : AleClosedForm::A0;
          SeriesVerdict v = compare_series(z.series, closed_forms_ale(kind, spec.k, spec.j[0], spec.order, m, e1, e2));
          all_pass = all_pass && v.pass;
          checks.push_back(verdict_to_json(v, z.series.ring()));
        }
        return z.series;
      });
      if (za_check) {
        std::cerr << "closed form: " << (all_pass ? "pass" : "fail") << "\n";
        if (!all_pass) {
          std::cerr << dump(Json{{"schema", kSchema}, {"closed_form", checks}});
          return kFailed;
        }
      }
      return code;
    }

    if (jack->parsed()) {
      RatFunc beta = jack_beta.empty() ? RatFunc::var("beta") : RatFunc(parse_rational(jack_beta));
      JackTable table(jack_n, beta);
      bool ok = true;
      Json list = Json::array();
      std::ostringstream csv;
      csv << "partition,monomial,coefficient\n";
      for (const auto& l : partitions_of(jack_n)) {
        Json mono = Json::object();
        for (const auto& [m, c] : table.expansion(l)) {
          mono[m.to_string()] = c.to_string();
          csv << csv_escape(l.to_string()) << "," << csv_escape(m.to_string()) << "," << csv_escape(c.to_string())
              << "\n";
        }
        bool matches = table.norm(l) == jack_norm_formula(l, beta);
        ok = ok && matches;
        list.push_back({{"partition", l.to_string()},
                        {"monomials", mono},
                        {"norm", table.norm(l).to_string()},
                        {"norm_matches_product", matches}});
      }
      if (jc.format == "csv") {
        emit(jc, csv.str());
      } else {
        Json out{{"schema", kSchema},
                 {"command", "jack"},
                 {"n", jack_n},
                 {"beta", beta.to_string()},
                 {"verdict", ok ? "pass" : "fail"},
                 {"jacks", list}};
        emit(jc, dump(out));
      }
      return ok ? kOk : kFailed;
    }

    if (fock->parsed()) {
      bool pass = false;
      Json out = fock_check_report(fc_suite, fc_k, fc_grade, fc_convention == "literal", pass);
      if (fc.format == "csv") {
        const Json& r = out["result"];
        emit(fc, "suite,k,grade,relations,state_checks,failed_relations,verdict\n" + fc_suite + "," +
                     std::to_string(fc_k) + "," + std::to_string(fc_grade) + "," + r["relations"].dump() + "," +
                     r["state_checks"].dump() + "," + r["failed_relations"].dump() + "," +
                     out["verdict"].get<std::string>() + "\n");
      } else {
        emit(fc, dump(out));
      }
      return pass ? kOk : kFailed;
    }

    if (edges->parsed()) {
      std::vector<Rational> v;
      for (const auto& s : split(edge_v)) v.push_back(parse_rational(s));
      if (static_cast<int>(v.size()) != edge_k - 1) throw UsageError("--v needs k-1 entries");
      RatFunc e1 = RatFunc::var("e1"), e2 = RatFunc::var("e2");
      RatFunc mu = looks_numeric(edge_mu) ? RatFunc(parse_rational(edge_mu)) : RatFunc::var(edge_mu);
      EdgeData d = edge_chern(v, edge_k, parse_cinv(edge_cinv));
      EdgeFactor total = edge_factor(d, e1, e2, mu);
      Json per = Json::array();
      std::ostringstream csv;
      csv << "n,sign,a,b\n";
      for (int n = 1; n < edge_k; ++n) {
        PatchWeights w = patch_weights(edge_k, n, e1, e2);
        Json monos = Json::array();
        for (const auto& m : d.monomials[n - 1]) {
          monos.push_back({{"sign", m.sign}, {"a", m.a}, {"b", m.b}});
          csv << n << "," << m.sign << "," << m.a << "," << m.b << "\n";
        }
        per.push_back({{"n", n}, {"monomials", monos}, {"ell", ell_from_monomials(d.monomials[n - 1], w.e1, w.e2, mu).to_string()}});
      }
      if (ec.format == "csv") {
        emit(ec, csv.str());
      } else {
        Json vs = Json::array();
        for (const auto& x : v) vs.push_back(rational_string(x));
        Json out{{"schema", kSchema}, {"command", "edges"}, {"k", edge_k},  {"v", vs},
                 {"j", d.j},          {"cinv", edge_cinv}, {"edges", per}, {"ell", total.ell.to_string()},
                 {"signed_count", total.signed_count}};
        emit(ec, dump(out));
      }
      return kOk;
    }

    if (verify->parsed()) {
      VerifyConfig config;
      config.seed = vc.seed;
      config.seeds = v_seeds;
      config.jobs = vc.jobs;
      std::vector<SuiteResult> results;
      if (v_suite == "all") {
        results = verify_all(config);
      } else {
        for (const auto& name : split(v_suite)) {
          if (!has_suite(name)) throw UsageError("unknown suite " + name + " (see verify --list)");
          results.push_back(run_suite(name, config));
        }
      }
      bool pass = true;
      for (const auto& r : results) pass = pass && r.pass;
      if (vc.format == "csv") {
        std::string text = "suite,criterion,verdict,summary\n";
        for (const auto& r : results)
          text += r.name + "," + std::to_string(r.criterion) + "," + (r.pass ? "pass" : "fail") + "," +
                  csv_escape(r.summary) + "\n";
        emit(vc, text);
      } else {
        Json out = results.size() == 1 && v_suite != "all" ? suite_to_json(results[0], config)
                                                           : verify_report(results, config);
        emit(vc, dump(out));
      }
      for (const auto& r : results)
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.summary << "\n";
      return pass ? kOk : kFailed;
    }

    if (report->parsed()) {
      std::ifstream f(r_in);
      if (!f) throw UsageError("cannot read " + r_in);
      Json in;
      try {
        in = Json::parse(f);
      } catch (const Json::parse_error&) {
        throw UsageError(r_in + " is not valid JSON");
      }
      if (!in.contains("schema") || in["schema"] != kSchema) throw UsageError(r_in + " is not an agt-lab/1 report");
      Json suites = in.contains("suites") ? in["suites"] : Json::array({in});
      bool pass = true;
      Json rows = Json::array();
      for (const auto& s : suites) {
        bool ok = s.value("verdict", "fail") == "pass";
        pass = pass && ok;
        rows.push_back({{"suite", s.value("suite", "")},
                        {"criterion", s.value("criterion", 0)},
                        {"verdict", ok ? "pass" : "fail"},
                        {"summary", s.value("summary", "")}});
      }
      std::ostringstream os;
      if (rc.format == "json") {
        os << dump(Json{{"schema", kSchema}, {"verdict", pass ? "pass" : "fail"}, {"suites", rows}});
      } else if (rc.format == "csv") {
        os << "suite,criterion,verdict,summary\n";
        for (const auto& r : rows)
          os << r["suite"].get<std::string>() << "," << r["criterion"].get<int>() << ","
             << r["verdict"].get<std::string>() << "," << csv_escape(r["summary"].get<std::string>()) << "\n";
      } else {
        int passed = 0;
        for (const auto& r : rows) {
          bool ok = r["verdict"] == "pass";
          passed += ok;
          os << (ok ? "PASS " : "FAIL ") << "[" << r["criterion"].get<int>() << "] " << r["suite"].get<std::string>()
             << ": " << r["summary"].get<std::string>() << "\n";
        }
        os << passed << "/" << rows.size() << " suites pass\n";
      }
      emit(rc, os.str());
      return pass ? kOk : kFailed;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
