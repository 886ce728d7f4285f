#include <chrono>
#include <functional>
#include <stdexcept>

#include "agt/ale.hpp"
#include "agt/edges.hpp"
#include "agt/errors.hpp"
#include "agt/fock_checks.hpp"
#include "agt/nekrasov_ale.hpp"
#include "agt/nekrasov_c2.hpp"
#include "agt/report.hpp"
#include "agt/symfunc.hpp"

namespace agt {

namespace {

using R = RatFunc;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::uint64_t> seed_list(const VerifyConfig& config) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < config.seeds; ++i) out.push_back(config.seed + static_cast<std::uint64_t>(i));
  return out;
}

// Draws one point per seed and collects the series pairs produced there.
Json sampled_series(const VerifyConfig& config, const std::vector<std::string>& names,
                    const std::function<std::vector<SeriesPair>(const ParamAssignment&)>& body, bool& pass) {
  std::vector<SeriesPair> pairs;
  std::vector<ParamAssignment> points;
  auto seeds = seed_list(config);
  for (auto seed : seeds) {
    SamplingConfig sc;
    sc.seed = seed;
    sc.samples = 1;
    auto used = for_each_sample(sc, names, [&](const ParamAssignment& p) {
      for (auto& pair : body(p)) {
        pair.label += " @seed " + std::to_string(seed);
        pairs.push_back(std::move(pair));
      }
      return true;
    });
    points.insert(points.end(), used.begin(), used.end());
  }
  Json report = agt_report(pairs, Mode::Sampled, seeds, points);
  pass = report["verdict"] == "pass";
  return report;
}

Json symbolic_series(const std::vector<SeriesPair>& pairs, bool& pass) {
  Json report = agt_report(pairs, Mode::Symbolic);
  pass = report["verdict"] == "pass";
  return report;
}

std::vector<R> mass_params(int count, const ParamAssignment* point) {
  std::vector<R> out;
  for (int i = 0; i < count; ++i) out.push_back(param("mu" + std::to_string(i), point));
  return out;
}

std::vector<std::string> mass_names(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back("mu" + std::to_string(i));
  return out;
}

// Aggregates many relation checks into one family entry.
struct Family {
  explicit Family(std::string n) : name(std::move(n)) {}

  std::string name;
  int relations = 0;
  int states = 0;
  std::vector<CheckResult> failures;

  void add(const CheckResult& r) {
    ++relations;
    states += r.checked;
    if (!r.ok && failures.size() < 5) failures.push_back(r);
    if (!r.ok) ++failed;
  }
  bool ok() const { return failed == 0; }
  Json to_json() const {
    Json out;
    out["family"] = name;
    out["pass"] = ok();
    out["relations"] = relations;
    out["state_checks"] = states;
    out["failed_relations"] = failed;
    Json f = Json::array();
    for (const auto& r : failures) f.push_back({{"relation", r.relation}, {"state", r.state}, {"residual", r.residual}});
    out["first_failures"] = f;
    return out;
  }
  int failed = 0;
};

// ---- criteria 1-4: C^2 partition functions ----

SuiteResult suite_pure_c2(const VerifyConfig&) {
  SuiteResult r{"pure-c2", 1, false, "", {}};
  auto t0 = Clock::now();
  auto spec = QuiverSpec::parse("pure");
  R e1 = R::var("e1"), e2 = R::var("e2");
  bool ok = false;
  r.detail = symbolic_series({{"pure through q^8", z_quiver_c2(spec, 8, {}, e1, e2), closed_form_c2(spec, 8, {}, e1, e2)}},
                             ok);
  bool fast = seconds_since(t0) <= 60;
  r.detail["runtime_within_1_min"] = fast;
  r.pass = ok && fast;
  r.summary = "sum over partitions = exp(q/e1e2) through q^8, symbolic";
  return r;
}

SuiteResult suite_ahat0_c2(const VerifyConfig& config) {
  SuiteResult r{"ahat0-c2", 2, false, "", {}};
  auto spec = QuiverSpec::parse("ahat:0");
  r.detail = sampled_series(
      config, {"e1", "e2", "mu0"},
      [&](const ParamAssignment& p) {
        R e1 = param("e1", &p), e2 = param("e2", &p);
        auto m = mass_params(1, &p);
        return std::vector<SeriesPair>{
            {"ahat:0 through q^6", z_quiver_c2(spec, 6, m, e1, e2), closed_form_c2(spec, 6, m, e1, e2)}};
      },
      r.pass);
  r.summary = "N=2* sum = (q^{-1/24} eta)^{-mu(mu+e1+e2)/e1e2 - 1} through q^6, " + std::to_string(config.seeds) +
              " seeds";
  return r;
}

SuiteResult suite_a0_c2(const VerifyConfig&) {
  SuiteResult r{"a0-c2", 3, false, "", {}};
  auto spec = QuiverSpec::parse("a:0");
  R e1 = R::var("e1"), e2 = R::var("e2");
  auto m = mass_params(2, nullptr);
  r.detail = symbolic_series({{"a:0 through q^6", z_quiver_c2(spec, 6, m, e1, e2), closed_form_c2(spec, 6, m, e1, e2)}},
                             r.pass);
  r.summary = "two fundamentals: sum = (1-q)^{-mu1(mu0+e1+e2)/e1e2} through q^6, symbolic";
  return r;
}

SuiteResult suite_quivers_c2(const VerifyConfig& config) {
  SuiteResult r{"quivers-c2", 4, false, "", {}};
  std::vector<std::string> names{"ahat:1", "ahat:2", "a:1"};
  Json per = Json::object();
  bool all = true;
  std::vector<std::string> failing;
  bool traces_ok = true;
  for (const auto& name : names) {
    auto spec = QuiverSpec::parse(name);
    std::vector<std::string> params{"e1", "e2"};
    for (auto& m : mass_names(spec.mass_count())) params.push_back(m);
    bool ok = false;
    Json closed = sampled_series(
        config, params,
        [&](const ParamAssignment& p) {
          R e1 = param("e1", &p), e2 = param("e2", &p);
          auto m = mass_params(spec.mass_count(), &p);
          return std::vector<SeriesPair>{{name + " sum vs printed product, total order 5", z_quiver_c2(spec, 5, m, e1, e2),
                                          closed_form_c2(spec, 5, m, e1, e2)}};
        },
        ok);
    Json entry;
    entry["closed_form"] = closed;
    if (spec.kind == QuiverKind::AHat) {
      bool trace_ok = false;
      entry["trace_oracle"] = sampled_series(
          config, params,
          [&](const ParamAssignment& p) {
            R e1 = param("e1", &p), e2 = param("e2", &p);
            auto m = mass_params(spec.mass_count(), &p);
            return std::vector<SeriesPair>{{name + " sum vs free-boson trace, total order 5",
                                            z_quiver_c2(spec, 5, m, e1, e2), trace_form_c2(spec, 5, m, e1, e2)}};
          },
          trace_ok);
      entry["trace_oracle_pass"] = trace_ok;
      traces_ok = traces_ok && trace_ok;
    }
    entry["pass"] = ok;
    per[name] = entry;
    all = all && ok;
    if (!ok) failing.push_back(name);
  }
  r.detail = per;
  r.pass = all;
  r.summary = "ahat:1, ahat:2, a:1 against the printed closed forms through total order 5";
  if (!failing.empty()) {
    r.summary += "; printed form fails for";
    for (const auto& f : failing) r.summary += " " + f;
    r.summary += traces_ok ? " (sums agree with the free-boson trace oracle)" : " (trace oracle also disagrees)";
  }
  return r;
}

// ---- criteria 5-7: symmetric functions and the C^2 Fock space ----

SuiteResult suite_jack(const VerifyConfig&) {
  SuiteResult r{"jack", 5, false, "", {}};
  R beta = R::var("beta");
  JackTable table(6, beta);
  int ortho_checked = 0, ortho_bad = 0, norm_bad = 0, lemma_bad = 0;
  Json bad = Json::array();
  for (int n = 0; n <= 6; ++n) {
    auto parts = partitions_of(n);
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = a; b < parts.size(); ++b) {
        R ip = inner_product(table.jack(parts[a]), table.jack(parts[b]), beta, &table);
        ++ortho_checked;
        if (a == b) {
          if (ip != jack_norm_formula(parts[a], beta)) {
            ++norm_bad;
            bad.push_back("norm " + parts[a].to_string());
          }
        } else if (!ip.is_zero()) {
          ++ortho_bad;
          bad.push_back("orthogonality " + parts[a].to_string() + " " + parts[b].to_string());
        }
      }
  }
  for (int n = 1; n <= 6; ++n) {
    auto lhs = basis_convert(p1_power(n, 6), Basis::Monomial);
    auto rhs = basis_convert(p1_power_in_jack(n, beta, 6), Basis::Monomial, &table);
    if (!(lhs == rhs)) {
      ++lemma_bad;
      bad.push_back("p1^" + std::to_string(n));
    }
  }
  r.detail = {{"pairs_checked", ortho_checked},
              {"orthogonality_failures", ortho_bad},
              {"norm_failures", norm_bad},
              {"p1_power_failures", lemma_bad},
              {"failures", bad}};
  r.pass = ortho_bad == 0 && norm_bad == 0 && lemma_bad == 0;
  r.summary = "Jack orthogonality and norms for |lambda| <= 6; (p_1)^n expansion for n <= 6; symbolic beta";
  return r;
}

SuiteResult suite_carlsson_okounkov(const VerifyConfig&) {
  SuiteResult r{"carlsson-okounkov", 6, false, "", {}};
  R e1 = R::var("e1"), e2 = R::var("e2"), mu = R::var("mu");
  R beta = -(e1 / e2);
  JackTable table(4, beta);
  SignCalibration cal = calibrate_co_sign(e1, e2, mu, table);
  R alpha = -(mu / e2), beta_exp = (mu + e1 + e2) / e2;
  int checked = 0, bad = 0;
  Json failures = Json::array();
  for (int n1 = 0; n1 <= 4; ++n1)
    for (const auto& l1 : partitions_of(n1))
      for (int n2 = 0; n2 <= 4; ++n2)
        for (const auto& l2 : partitions_of(n2)) {
          ++checked;
          R fock = co_matrix_element(alpha, beta_exp, l1, l2, table, e1, e2) * R(cal.sign(l1, l2));
          R comb = m_bifund(l1, l2, mu, e1, e2) * R(n2 % 2 == 0 ? 1 : -1);
          if (fock != comb) {
            ++bad;
            if (failures.size() < 5) failures.push_back(l1.to_string() + " " + l2.to_string());
          }
        }
  r.detail = {{"calibration", cal.to_string()}, {"pairs_checked", checked}, {"failures", bad}, {"first_failures", failures}};
  r.pass = bad == 0;
  r.summary = "Fock-side vertex matrix elements = (-1)^{|l2|} m_{l1,l2}(mu) for |l1|,|l2| <= 4 after calibration " +
              cal.to_string();
  return r;
}

SuiteResult suite_integrals(const VerifyConfig&) {
  SuiteResult r{"integrals", 7, false, "", {}};
  R e1 = R::var("e1"), e2 = R::var("e2");
  R beta = -(e1 / e2);
  JackTable table(5, beta);
  FockSpace space = heisenberg_space(beta.inverse());
  int checked = 0, bad = 0;
  Json failures = Json::array();
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions_of(n)) {
      FockVector j = jack_fock_vector(table, l);
      R colength;
      for (const auto& c : l.cells()) colength -= R(c.row - 1) * e1 + R(c.col - 1) * e2;
      checked += 2;
      if (apply(space, integral_I1(beta), j) != j.scaled(R(n))) {
        ++bad;
        failures.push_back("I1 " + l.to_string());
      }
      if (apply(space, integral_I2(beta, e1), j) != j.scaled(colength)) {
        ++bad;
        failures.push_back("I2 " + l.to_string());
      }
    }
  r.detail = {{"eigenvector_checks", checked}, {"failures", bad}, {"first_failures", failures}};
  r.pass = bad == 0;
  r.summary = "I1 J = |lambda| J and I2 J = -sum (L'e1 + A'e2) J for |lambda| <= 5";
  return r;
}

// ---- criterion 8: Frenkel-Kac, Virasoro, primary fields ----

std::vector<FockState> sector_states(const FockSpace& space, int k, int grade) {
  std::vector<FockState> out;
  for (int j = 0; j < k; ++j) {
    auto w = fundamental_weight(k, j);
    std::vector<std::vector<Rational>> labels{w};
    for (int i = 0; i < k - 1; ++i)
      for (int s : {1, -1}) {
        auto l = w;
        l[i] += s;
        labels.push_back(l);
      }
    for (const auto& l : labels)
      for (auto& st : space.states_up_to(grade, l)) out.push_back(std::move(st));
  }
  return out;
}

void chevalley_family(Family& fam, const FockSpace& space, int k, const std::vector<FockState>& states,
                      FKConvention conv) {
  auto tag = [&](const std::string& s) { return "k=" + std::to_string(k) + " " + s; };
  std::vector<OperatorExpr> e, f, h;
  for (int a = 0; a < k; ++a) {
    e.push_back(chevalley_e(space, a, conv));
    f.push_back(chevalley_f(space, a, conv));
    h.push_back(chevalley_h(space, a));
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      std::string ab = std::to_string(a) + "," + std::to_string(b);
      fam.add(commutator_check(space, tag("[e" + ab + "f]"), e[a], f[b], a == b ? h[a] : OperatorExpr(), states));
      fam.add(commutator_check(space, tag("[h" + ab + "e]"), h[a], e[b], e[b].scaled(R(affine_cartan(k, a, b))),
                               states));
      fam.add(commutator_check(space, tag("[h" + ab + "f]"), h[a], f[b], f[b].scaled(R(-affine_cartan(k, a, b))),
                               states));
      if (a < b) fam.add(commutator_check(space, tag("[h" + ab + "h]"), h[a], h[b], OperatorExpr(), states));
      if (a != b) {
        int times = 1 - affine_cartan(k, a, b);
        OperatorExpr se = e[b], sf = f[b];
        for (int t = 0; t < times; ++t) {
          se = commutator(e[a], se);
          sf = commutator(f[a], sf);
        }
        fam.add(identity_check(space, tag("serre e" + ab), se, OperatorExpr(), states));
        fam.add(identity_check(space, tag("serre f" + ab), sf, OperatorExpr(), states));
      }
    }
  OperatorExpr central;
  for (int a = 0; a < k; ++a) central += h[a];
  fam.add(identity_check(space, tag("level one"), central, OperatorExpr::identity(), states));
}

void virasoro_family(Family& fam, const FockSpace& space, const std::string& tag,
                     const std::function<OperatorExpr(int)>& L, const std::vector<FockState>& states, int range) {
  for (int m = -range; m <= range; ++m)
    for (int n = -range; n <= range; ++n) {
      if (m < n) continue;  // antisymmetric
      OperatorExpr expected = L(m + n).scaled(R(m - n));
      if (m + n == 0) expected += OperatorExpr::identity(R(ratio((m * m * m - m) * space.colors, 12)));
      fam.add(commutator_check(space, tag + " [L" + std::to_string(m) + ",L" + std::to_string(n) + "]", L(m), L(n),
                               expected, states));
    }
}

SuiteResult suite_frenkel_kac(const VerifyConfig&) {
  SuiteResult r{"frenkel-kac", 8, false, "", {}};
  auto t0 = Clock::now();
  std::vector<Family> families;
  Json expected_failures = Json::array();

  Family chev("chevalley relations, graded convention");
  Family literal("chevalley relations, literal convention (expected to fail)");
  for (int k : {2, 3}) {
    FockSpace space = lattice_space(k);
    auto states = sector_states(space, k, 3);
    chevalley_family(chev, space, k, states, FKConvention::Graded);
    chevalley_family(literal, space, k, sector_states(space, k, 1), FKConvention::Literal);
  }
  families.push_back(chev);

  Family vir("virasoro brackets");
  {
    R e1 = R::var("e1"), e2 = R::var("e2");
    R beta = -(e1 / e2);
    FockSpace space = heisenberg_space(beta.inverse());
    auto states = space.states_up_to(3);
    virasoro_family(vir, space, "heisenberg", [&](int n) { return virasoro_gram(space, {0}, n); }, states, 3);
  }
  Family agree("gram and orthogonal constructions agree");
  for (int k : {2, 3})
    for (bool extra : {false, true}) {
      FockSpace space = lattice_space(k, extra);
      std::vector<int> colors;
      for (int c = 0; c < space.colors; ++c) colors.push_back(c);
      auto basis = orthogonal_basis(space, colors);
      auto states = sector_states(space, k, 3);
      std::string tag = "k=" + std::to_string(k) + (extra ? " with gl boson" : "");
      virasoro_family(vir, space, tag, [&](int n) { return virasoro_gram(space, colors, n); }, states, 2);
      for (int n = -2; n <= 2; ++n)
        agree.add(identity_check(space, tag + " L" + std::to_string(n), virasoro_gram(space, colors, n),
                                 virasoro_orthogonal(space, basis, n), states));
    }
  families.push_back(vir);
  families.push_back(agree);

  Family c2prim("C^2 primary-field commutators");
  bool remark_holds = true;
  {
    R a = R::var("a"), b = R::var("b");
    FockSpace space = heisenberg_space(R(1));
    auto states = space.states_up_to(3);
    FieldVector v{R(1)};
    R delta = -(a * b) / R(2);
    auto V = [&](int p) { return vertex(v, a, b, Rational(p)); };
    for (int n = -2; n <= 2; ++n)
      for (int p = -4; p <= 4; ++p) {
        OperatorExpr lhs = commutator(virasoro_gram(space, {0}, n), V(p));
        OperatorExpr rhs;
        if (n > 0) {
          rhs = V(p - n).scaled(R(p - n) + R(2 * n) * delta - a * a * R(ratio(n - 1, 2))) + (mode(v, n) * V(p)).scaled(b);
          for (int m = 1; m < n; ++m) rhs += (mode(v, n - m) * V(p - m)).scaled(a + b);
        } else if (n < 0) {
          rhs = V(p - n).scaled(R(p - n) + b * b * R(ratio(n + 1, 2))) - (mode(v, n) * V(p)).scaled(a);
          for (int m = 1; m < -n; ++m) rhs -= (mode(v, m + n) * V(p + m)).scaled(a + b);
        } else {
          rhs = V(p).scaled(R(p));
        }
        std::string tag = "n=" + std::to_string(n) + " p=" + std::to_string(p);
        c2prim.add(identity_check(space, tag, lhs, rhs, states));
        OperatorExpr remark = V(p - n).scaled(R(p - n) + delta * R(n + 1));
        if (!identity_check(space, tag, lhs, remark, states).ok) remark_holds = false;
      }
  }
  families.push_back(c2prim);
  expected_failures.push_back({{"relation", "[L_n, V] = z^n (z d/dz + Delta (n+1)) V with Delta = -alpha beta / 2"},
                               {"holds", remark_holds}});

  Family lattice_prim("lattice primary fields, k=2");
  bool minus_sign_holds = true;
  {
    int k = 2;
    FockSpace space = lattice_space(k);
    std::vector<FockState> states;
    for (int j = 0; j < k; ++j) {
      auto w = fundamental_weight(k, j);
      for (auto& s : space.states_up_to(3, w)) states.push_back(s);
      w[0] -= 1;
      for (auto& s : space.states_up_to(3, w)) states.push_back(s);
    }
    for (Rational v : {Rational(1), ratio(1, 2), ratio(-3, 2)}) {
      FieldVector g{R(v)};
      std::vector<Rational> shift{v};
      Rational delta = v * v;  // v.Cv / 2 with C = (2)
      auto W = [&](const Rational& p) { return vertex(g, R(1), R(-1), p); };
      auto Vbar = [&](const Rational& p) { return vertex(g, R(1), R(-1), p, shift); };
      for (int n = -2; n <= 2; ++n)
        for (int p = -4; p <= 4; ++p) {
          std::string tag = "v=" + v.get_str() + " n=" + std::to_string(n) + " p=" + std::to_string(p);
          OperatorExpr lhs = commutator(virasoro_gram(space, {0}, n), W(Rational(p)));
          OperatorExpr base = W(Rational(p - n)).scaled(R(Rational(p - n) + delta * (n + 1)));
          OperatorExpr zero_modes = mode(g, 0) * W(Rational(p - n)) - mode(g, n) * W(Rational(p));
          if (n == 0) {
            lattice_prim.add(identity_check(space, "lemma " + tag, lhs, W(Rational(p)).scaled(R(p)), states));
          } else {
            lattice_prim.add(identity_check(space, "lemma " + tag, lhs, base + zero_modes, states));
            if (!identity_check(space, tag, lhs, base - zero_modes, states).ok) minus_sign_holds = false;
          }
          for (int eighth = 0; eighth < 8; ++eighth) {
            Rational q = Rational(p) + ratio(eighth, 8);
            lattice_prim.add(identity_check(space, "vbar " + tag + "+" + ratio(eighth, 8).get_str(),
                                            commutator(virasoro_gram(space, {0}, n), Vbar(q)),
                                            Vbar(q - n).scaled(R(q - n + delta * n)), states));
          }
        }
    }
  }
  families.push_back(lattice_prim);
  expected_failures.push_back({{"relation", "lattice lemma with the zero-mode term subtracted"}, {"holds", minus_sign_holds}});
  expected_failures.push_back({{"relation", literal.name}, {"holds", literal.ok()}, {"detail", literal.to_json()}});

  bool all = true;
  Json fams = Json::array();
  for (const auto& f : families) {
    all = all && f.ok();
    fams.push_back(f.to_json());
  }
  bool fast = seconds_since(t0) <= 300;
  r.detail = {{"families", fams}, {"expected_failures", expected_failures}, {"runtime_within_5_min", fast}};
  r.pass = all && fast && !remark_holds && !minus_sign_holds && !literal.ok();
  r.summary = "Chevalley relations (k=2,3, all sectors, grade <= 3), Virasoro brackets, primary fields (k=2)";
  return r;
}

// ---- criteria 9-11: X_k ----

SuiteResult suite_pure_ale(int k, const VerifyConfig& config) {
  SuiteResult r{"pure-ale-k" + std::to_string(k), 9, false, "", {}};
  Rational order = 3;
  auto pairs_at = [&](const ParamAssignment* p) {
    R e1 = param("e1", p), e2 = param("e2", p);
    std::vector<SeriesPair> pairs;
    for (int j = 0; j < k; ++j) {
      QSeries closed = closed_forms_ale(AleClosedForm::Pure, k, j, order, {}, e1, e2);
      pairs.push_back({"k=" + std::to_string(k) + " j=" + std::to_string(j) + " factorized sum",
                       z_pure_ale(k, j, order, order, e1, e2, config.jobs).series, closed});
      AleQuiverSpec spec;
      spec.k = k;
      spec.j = {j};
      spec.order = order;
      pairs.push_back({"k=" + std::to_string(k) + " j=" + std::to_string(j) + " fixed-point sum",
                       z_quiver_ale(spec, {}, e1, e2, config.jobs).series, closed});
    }
    return pairs;
  };
  if (k == 2) {
    r.detail = symbolic_series(pairs_at(nullptr), r.pass);
    r.summary = "k=2, all j: sum = eta chi exp(q/2e1e2) through q^3, symbolic";
  } else {
    r.detail = sampled_series(config, {"e1", "e2"}, [&](const ParamAssignment& p) { return pairs_at(&p); }, r.pass);
    r.summary = "k=" + std::to_string(k) + ", all j: sum = eta^{k-1} chi exp(q/k e1e2) through q^3, sampled";
  }
  return r;
}

struct EdgeSweep {
  int k2_checked = 0, k2_bad = 0;
  int rank_checked = 0, rank_bad = 0;
  int conf_checked = 0, conf_bad = 0;
  Json failures = Json::array();

  bool ok() const { return k2_bad == 0 && rank_bad == 0 && conf_bad == 0; }
  Json to_json() const {
    return {{"pass", ok()},
            {"k2_oracle", {{"checked", k2_checked}, {"failures", k2_bad}}},
            {"rank_identity", {{"checked", rank_checked}, {"failures", rank_bad}}},
            {"conformal_triviality", {{"checked", conf_checked}, {"failures", conf_bad}}},
            {"first_failures", failures}};
  }
  void note(const std::string& s) {
    if (failures.size() < 5) failures.push_back(s);
  }
};

std::string vec_string(const std::vector<Rational>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + ")";
}

EdgeSweep edge_sweep(CinvIndex c) {
  EdgeSweep out;
  R e1 = R::var("e1"), e2 = R::var("e2"), mu = R::var("mu");
  for (int t = -6; t <= 6; ++t) {
    Rational v = ratio(t, 2);
    ++out.k2_checked;
    EdgeData d = edge_chern({v}, 2, c);
    if (ell_from_monomials(d.monomials[0], e1, e2, mu) != blowup_oracle_k2(v, e1, e2, mu)) {
      ++out.k2_bad;
      out.note("k=2 oracle v=" + v.get_str());
    }
  }
  for (int k = 2; k <= 4; ++k) {
    std::vector<Rational> v(k - 1);
    std::function<void(int)> rec = [&](int i) {
      if (i == k - 1) {
        int j = 0;
        try {
          j = holonomy_of(v, k);
        } catch (const InconsistentCharge&) {
          return;
        }
        ++out.rank_checked;
        EdgeFactor f = edge_factor(edge_chern(v, k, c), e1, e2, mu);
        Rational want = quadratic_C(k, v, v) / 2 - ratio(j * (k - j), 2 * k);
        if (Rational(f.signed_count) != want) {
          ++out.rank_bad;
          out.note("rank k=" + std::to_string(k) + " v=" + vec_string(v));
        }
        return;
      }
      for (int a = -3 * k; a <= 3 * k; ++a) {
        v[i] = ratio(a, k);
        rec(i + 1);
      }
    };
    rec(0);
    for (int j = 0; j < k; ++j)
      for (const auto& ch : enumerate_charges(k, j, Rational(8), true)) {
        ++out.conf_checked;
        EdgeFactor f = edge_factor(edge_chern(ch.v, k, c), e1, e2, mu);
        if (f.signed_count != 0 || f.ell != R(1)) {
          ++out.conf_bad;
          out.note("conformal k=" + std::to_string(k) + " u=" + ch.to_string() + " count " +
                   std::to_string(f.signed_count));
        }
      }
  }
  return out;
}

SuiteResult suite_edges(const VerifyConfig&) {
  SuiteResult r{"edges", 10, false, "", {}};
  EdgeSweep holonomy = edge_sweep(CinvIndex::Holonomy);
  EdgeSweep edge = edge_sweep(CinvIndex::Edge);
  r.detail = {{"cinv_index_holonomy", holonomy.to_json()}, {"cinv_index_edge", edge.to_json()}};
  r.pass = holonomy.ok();
  r.summary = "k=2 blowup oracle (2v in [-6,6]), rank identity and conformal l = 1 for k <= 4 with (C^-1)^{jj}";
  if (!edge.ok()) {
    r.summary += "; the (C^-1)^{nn} reading fails";
    if (!edge.failures.empty()) r.summary += " at " + edge.failures[0].get<std::string>();
  }
  return r;
}

SuiteResult suite_ale_matter(const VerifyConfig& config) {
  SuiteResult r{"ale-matter", 11, false, "", {}};
  Rational order = 2;
  bool corrected_ok = false;
  Json corrected;
  auto run = [&](bool printed) {
    return [&, printed](const ParamAssignment& p) {
      R e1 = param("e1", &p), e2 = param("e2", &p);
      auto m = mass_params(2, &p);
      std::vector<SeriesPair> pairs;
      for (int k : {2, 3})
        for (int j = 0; j < k; ++j) {
          std::string tag = "k=" + std::to_string(k) + " j=" + std::to_string(j);
          AleQuiverSpec spec;
          spec.k = k;
          spec.j = {j};
          spec.order = order;
          if (printed) {
            spec.quiver = QuiverSpec::parse("ahat:0");
            pairs.push_back({"ahat:0 " + tag, z_quiver_ale(spec, {m[0]}, e1, e2, config.jobs).series,
                             closed_forms_ale(AleClosedForm::AHat0, k, j, order, {m[0]}, e1, e2)});
          }
          spec.quiver = QuiverSpec::parse("a:0");
          QSeries closed = closed_forms_ale(AleClosedForm::A0, k, j, order, m, e1, e2);
          if (!printed) {
            auto ring = closed.ring();
            Exponents q1(ring->size(), Rational(0));
            q1[0] = 1;
            QSeries base =
                QSeries::constant(ring, order, R(1)) - QSeries::monomial(ring, order, q1, R(1));
            closed = (closed * series_pow(base, R(-ratio(j * (k - j), k)))).truncated(order);
          }
          pairs.push_back({std::string(printed ? "a:0 " : "a:0 with (1-q)^{-j(k-j)/k} ") + tag,
                           z_quiver_ale(spec, m, e1, e2, config.jobs).series, closed});
        }
      return pairs;
    };
  };
  std::vector<std::string> names{"e1", "e2", "mu0", "mu1"};
  r.detail["printed_closed_forms"] = sampled_series(config, names, run(true), r.pass);
  corrected = sampled_series(config, names, run(false), corrected_ok);
  r.detail["a0_with_lattice_contraction"] = corrected;
  r.summary = "ahat:0 and a:0 on X_k, k=2,3, all j, through q^2 against the printed closed forms";
  if (!r.pass) {
    r.summary += "; a:0 with j != 0 differs by (1-q)^{-j(k-j)/k}";
    r.summary += corrected_ok ? " (corrected form matches)" : " (corrected form also fails)";
  }
  return r;
}

// ---- criterion 12: Gaiotto state ----

SuiteResult suite_gaiotto(const VerifyConfig&) {
  SuiteResult r{"gaiotto", 12, false, "", {}};
  R e1 = R::var("e1"), e2 = R::var("e2"), eta = R::var("eta");
  R beta = -(e1 / e2);
  Json detail;
  bool all = true;

  FockSpace space = heisenberg_space(beta.inverse());
  JackTable table(5, beta);
  FockVector g = gaiotto_vector(space, {eta}, 5);
  Json grades = Json::array();
  for (int n = 0; n <= 5; ++n) {
    FockVector gn;
    for (const auto& [s, c] : g.terms())
      if (s.grade() == n) gn.add(s, c);
    bool ok = gn == hilbert_class(table, n, e1, e2).scaled(pow(eta * e2, n));
    all = all && ok;
    grades.push_back({{"grade", n}, {"pass", ok}});
  }
  detail["gaiotto_equals_hilbert_classes"] = grades;

  CheckResult w = whittaker_check(space, {eta}, 5);
  detail["whittaker_c2"] = {{"pass", w.ok}, {"checked", w.checked}, {"state", w.state}};
  all = all && w.ok;
  FockSpace patches = patch_space(2, e1, e2);
  CheckResult wx = whittaker_check(patches, {eta, eta}, 3);
  detail["whittaker_x2"] = {{"pass", wx.ok}, {"checked", wx.checked}, {"state", wx.state}};
  all = all && wx.ok;

  // Weighted norm sum_n (-q)^n <[Hilb^n], [Hilb^n]>.
  auto norm_series = [&](const R& a, const R& b, int order, const SeriesRingPtr& ring) {
    R bt = -(a / b);
    FockSpace sp = heisenberg_space(bt.inverse());
    JackTable t(order, bt);
    QSeries out(ring, Rational(order));
    for (int n = 0; n <= order; ++n) {
      FockVector h = hilbert_class(t, n, a, b);
      Exponents e(ring->size(), Rational(0));
      e[0] = n;
      out.add_term(e, fock_pairing(sp, h, h) * R(n % 2 == 0 ? 1 : -1));
    }
    return out;
  };
  auto pure = QuiverSpec::parse("pure");
  auto c2ring = quiver_ring(pure);
  std::vector<SeriesPair> pairs{{"C^2 norm through q^5", norm_series(e1, e2, 5, c2ring),
                                 closed_form_c2(pure, 5, {}, e1, e2)}};
  auto ring2 = ale_ring(2);
  QSeries patch_norms = QSeries::constant(ring2, Rational(3), R(1));
  for (int i = 1; i <= 2; ++i) {
    PatchWeights pw = patch_weights(2, i, e1, e2);
    patch_norms = (patch_norms * norm_series(pw.e1, pw.e2, 3, ring2)).truncated(Rational(3));
  }
  for (int j = 0; j < 2; ++j) {
    QSeries theta(ring2, Rational(3));
    for (const auto& c : enumerate_charges(2, j, Rational(3))) theta.add_term({c.delta, c.v[0]}, R(1));
    pairs.push_back({"X_2 j=" + std::to_string(j) + " norm through q^3", (theta * patch_norms).truncated(Rational(3)),
                     z_pure_ale(2, j, Rational(3), Rational(3), e1, e2).series});
  }
  bool norms_ok = false;
  detail["weighted_norms"] = symbolic_series(pairs, norms_ok);
  all = all && norms_ok;

  r.detail = detail;
  r.pass = all;
  r.summary = "G(eta) = sum (eta e2)^n [Hilb^n] through grade 5; Whittaker relations (C^2, X_2); weighted norms";
  return r;
}

const std::vector<SuiteInfo> kCatalog = {
    {"pure-c2", 1, "pure U(1) on C^2 through q^8, symbolic"},
    {"ahat0-c2", 2, "ahat:0 on C^2 through q^6, sampled"},
    {"a0-c2", 3, "a:0 on C^2 through q^6, symbolic"},
    {"quivers-c2", 4, "ahat:1, ahat:2, a:1 on C^2 through total order 5, sampled"},
    {"jack", 5, "Jack orthogonality, norms and the (p_1)^n expansion"},
    {"carlsson-okounkov", 6, "vertex-operator matrix elements in the fixed-point basis"},
    {"integrals", 7, "integrals of motion on Jack functions"},
    {"frenkel-kac", 8, "Frenkel-Kac, Virasoro and primary-field relations"},
    {"pure-ale-k2", 9, "pure U(1) on X_2, symbolic"},
    {"pure-ale-k3", 9, "pure U(1) on X_3, sampled"},
    {"edges", 10, "edge contributions"},
    {"ale-matter", 11, "ahat:0 and a:0 on X_k, sampled"},
    {"gaiotto", 12, "Gaiotto state, Whittaker relations, weighted norms"},
    {"determinism", 13, "byte-identical reruns and runtime"},
};

}  // namespace

Json fock_check_report(const std::string& suite, int k, int grade, bool literal_convention, bool& pass) {
  register_standard_variables();
  if (k < 1 || grade < 0) throw std::invalid_argument("k must be positive and the grade non-negative");
  R e1 = R::var("e1"), e2 = R::var("e2");
  R beta = -(e1 / e2);
  Family fam(suite);
  if (suite == "chevalley") {
    if (k < 2) throw std::invalid_argument("chevalley needs k >= 2");
    FockSpace space = lattice_space(k);
    chevalley_family(fam, space, k, sector_states(space, k, grade),
                     literal_convention ? FKConvention::Literal : FKConvention::Graded);
  } else if (suite == "virasoro") {
    if (k == 1) {
      FockSpace space = heisenberg_space(beta.inverse());
      virasoro_family(fam, space, "heisenberg", [&](int n) { return virasoro_gram(space, {0}, n); },
                      space.states_up_to(grade), 3);
    } else {
      FockSpace space = lattice_space(k);
      std::vector<int> colors;
      for (int c = 0; c < space.colors; ++c) colors.push_back(c);
      virasoro_family(fam, space, "k=" + std::to_string(k), [&](int n) { return virasoro_gram(space, colors, n); },
                      sector_states(space, k, grade), 2);
    }
  } else if (suite == "whittaker") {
    R eta = R::var("eta");
    if (k == 1) {
      fam.add(whittaker_check(heisenberg_space(beta.inverse()), {eta}, grade));
    } else {
      fam.add(whittaker_check(patch_space(k, e1, e2), std::vector<R>(k, eta), grade));
    }
  } else if (suite == "primary") {
    if (k != 1) throw std::invalid_argument("primary is available for k = 1 only");
    R a = R::var("a"), b = R::var("b");
    FockSpace space = heisenberg_space(R(1));
    auto states = space.states_up_to(grade);
    FieldVector v{R(1)};
    auto V = [&](int p) { return vertex(v, a, b, Rational(p)); };
    for (int n = -2; n <= 2; ++n)
      for (int p = -4; p <= 4; ++p) {
        OperatorExpr rhs;
        if (n > 0) {
          rhs = V(p - n).scaled(R(p - n) - R(n) * a * b - a * a * R(ratio(n - 1, 2))) + (mode(v, n) * V(p)).scaled(b);
          for (int m = 1; m < n; ++m) rhs += (mode(v, n - m) * V(p - m)).scaled(a + b);
        } else if (n < 0) {
          rhs = V(p - n).scaled(R(p - n) + b * b * R(ratio(n + 1, 2))) - (mode(v, n) * V(p)).scaled(a);
          for (int m = 1; m < -n; ++m) rhs -= (mode(v, m + n) * V(p + m)).scaled(a + b);
        } else {
          rhs = V(p).scaled(R(p));
        }
        fam.add(identity_check(space, "n=" + std::to_string(n) + " p=" + std::to_string(p),
                               commutator(virasoro_gram(space, {0}, n), V(p)), rhs, states));
      }
  } else {
    throw std::invalid_argument("unknown fock-check suite " + suite);
  }
  pass = fam.ok();
  Json out;
  out["schema"] = kSchema;
  out["suite"] = suite;
  out["k"] = k;
  out["grade"] = grade;
  if (suite == "chevalley") out["convention"] = literal_convention ? "literal" : "graded";
  out["verdict"] = pass ? "pass" : "fail";
  out["result"] = fam.to_json();
  return out;
}

const std::vector<SuiteInfo>& suite_catalog() { return kCatalog; }

bool has_suite(const std::string& name) {
  for (const auto& s : kCatalog)
    if (s.name == name) return true;
  return false;
}

std::vector<SuiteResult> run_all_but_determinism(const VerifyConfig& config);

SuiteResult run_suite(const std::string& name, const VerifyConfig& config) {
  register_standard_variables();
  if (name == "pure-c2") return suite_pure_c2(config);
  if (name == "ahat0-c2") return suite_ahat0_c2(config);
  if (name == "a0-c2") return suite_a0_c2(config);
  if (name == "quivers-c2") return suite_quivers_c2(config);
  if (name == "jack") return suite_jack(config);
  if (name == "carlsson-okounkov") return suite_carlsson_okounkov(config);
  if (name == "integrals") return suite_integrals(config);
  if (name == "frenkel-kac") return suite_frenkel_kac(config);
  if (name == "pure-ale-k2") return suite_pure_ale(2, config);
  if (name == "pure-ale-k3") return suite_pure_ale(3, config);
  if (name == "edges") return suite_edges(config);
  if (name == "ale-matter") return suite_ale_matter(config);
  if (name == "gaiotto") return suite_gaiotto(config);
  if (name == "determinism") {
    auto t0 = Clock::now();
    VerifyConfig other = config;
    other.jobs = config.jobs > 1 ? 1 : 2;
    std::string first = verify_report(run_all_but_determinism(config), config).dump(2);
    std::string second = verify_report(run_all_but_determinism(other), config).dump(2);
    bool fast = seconds_since(t0) <= 1800;
    SuiteResult r{"determinism", 13, first == second && fast, "", {}};
    r.detail = {{"identical_reports", first == second}, {"runtime_within_30_min", fast}};
    r.summary = "two runs of every suite with the same seed and different job counts give identical reports";
    return r;
  }
  throw std::invalid_argument("unknown suite " + name);
}

std::vector<SuiteResult> run_all_but_determinism(const VerifyConfig& config) {
  std::vector<SuiteResult> out;
  for (const auto& s : kCatalog)
    if (s.name != "determinism") out.push_back(run_suite(s.name, config));
  return out;
}

std::vector<SuiteResult> verify_all(const VerifyConfig& config) {
  auto t0 = Clock::now();
  VerifyConfig other = config;
  other.jobs = config.jobs > 1 ? 1 : 2;
  auto first = run_all_but_determinism(config);
  std::string a = verify_report(first, config).dump(2);
  std::string b = verify_report(run_all_but_determinism(other), config).dump(2);
  bool fast = seconds_since(t0) <= 1800;
  SuiteResult det{"determinism", 13, a == b && fast, "", {}};
  det.detail = {{"identical_reports", a == b}, {"runtime_within_30_min", fast}};
  det.summary = "two runs of every suite with the same seed and different job counts give identical reports";
  first.push_back(det);
  return first;
}

}  // namespace agt
