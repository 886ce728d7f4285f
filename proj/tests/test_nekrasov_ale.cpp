#include "doctest.h"

#include "agt/nekrasov_ale.hpp"
#include "agt/sampling.hpp"

using namespace agt;
using R = RatFunc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

R e1() { return R::var("e1"); }
R e2() { return R::var("e2"); }
R mu(int i) { return R::var("mu" + std::to_string(i)); }

Exponents ex(std::initializer_list<Rational> xs) { return Exponents(xs); }

QSeries one_minus_q_power(const SeriesRingPtr& ring, const Rational& order, const R& a) {
  Exponents q1(ring->size(), Rational(0));
  q1[0] = 1;
  return series_pow(QSeries::constant(ring, order, R(1)) - QSeries::monomial(ring, order, q1, R(1)), a);
}

// eta^{k-1} chi in the ALE ring, with the conformal restriction if asked.
QSeries eta_chi(int k, int j, const Rational& order, bool conformal) {
  auto ring = ale_ring(k);
  Exponents q1(ring->size(), Rational(0));
  q1[0] = 1;
  Exponents s(ring->size(), Rational(0));
  s[0] = ratio(k - 1, 24);
  QSeries euler = euler_power(ring, order + 1, q1, R(k - 1)).shifted(s);
  return (euler * character_chi(k, j, order + 1, conformal)).truncated(order);
}

// Lifts a series in q alone into the ALE ring.
QSeries lift(const QSeries& z, const SeriesRingPtr& ring, const Rational& order) {
  QSeries out(ring, order);
  for (const auto& [e, c] : z.terms()) {
    Exponents x(ring->size(), Rational(0));
    x[0] = e[0];
    out.add_term(x, c);
  }
  return out;
}

}  // namespace

TEST_CASE("matrix elements between fixed points") {
  AleState vac = ale_vacuum(2);
  AleMatrixElement v = matrix_element_ale(vac, vac, R::var("mu"), e1(), e2());
  CHECK(v.value == R(1));
  CHECK(v.z_power == 0);

  AleState box{{P({1}), Partition()}, make_charge({0}, 2)};
  AleMatrixElement b = matrix_element_ale(box, box, R(0), e1(), e2());
  CHECK(b.value == R(2) * e1() * (e2() - e1()));

  // Empty diagrams with a charge change give the edge contribution alone.
  AleState shifted{{Partition(), Partition()}, make_charge({2}, 2)};
  AleMatrixElement c = matrix_element_ale(vac, shifted, R::var("mu"), e1(), e2());
  EdgeFactor f = edge_factor(edge_chern(shifted.charge.v, 2), e1(), e2(), R::var("mu"));
  CHECK(c.value == f.ell);
  CHECK(c.value == R::var("mu"));
  CHECK(c.z_power == 1);
  CHECK(c.x_power == std::vector<Rational>{Rational(1)});
}

TEST_CASE("pure theory on X_2") {
  AleSeries z0 = z_pure_ale(2, 0, 2, 2, e1(), e2());
  CHECK(z0.warnings.empty());
  CHECK(z0.series.coefficient(ex({0, 0})) == R(1));
  CHECK(z0.series.coefficient(ex({1, 0})) == (R(2) * e1() * e2()).inverse());
  CHECK(z0.series.coefficient(ex({1, 1})) == R(1));
  CHECK(z0.series.coefficient(ex({1, -1})) == R(1));
  CHECK(z0.series == closed_forms_ale(AleClosedForm::Pure, 2, 0, 2, {}, e1(), e2()));

  AleSeries z1 = z_pure_ale(2, 1, ratio(9, 4), ratio(9, 4), e1(), e2());
  CHECK(z1.series == closed_forms_ale(AleClosedForm::Pure, 2, 1, ratio(9, 4), {}, e1(), e2()));
}

TEST_CASE("pure theory as a one-node quiver") {
  AleQuiverSpec spec;
  spec.quiver = QuiverSpec::parse("pure");
  spec.k = 3;
  spec.j = {1};
  spec.order = ratio(5, 3);
  CHECK(z_quiver_ale(spec, {}, e1(), e2()).series == z_pure_ale(3, 1, spec.order, spec.order, e1(), e2()).series);
}

TEST_CASE("adjoint matter at zero mass") {
  for (int j = 0; j < 2; ++j) {
    AleQuiverSpec spec;
    spec.quiver = QuiverSpec::parse("ahat:0");
    spec.k = 2;
    spec.j = {j};
    spec.order = 2;
    QSeries z = z_quiver_ale(spec, {R(0)}, e1(), e2()).series;
    // Every diagram term is one, leaving theta times two partition generating functions.
    auto ring = z.ring();
    Exponents q1(ring->size(), Rational(0));
    q1[0] = 1;
    QSeries theta(ring, 2);
    for (const auto& c : enumerate_charges(2, j, 2)) theta.add_term(ex({c.delta, c.v[0]}), R(1));
    QSeries expected = (theta * euler_power(ring, 2, q1, R(-2))).truncated(2);
    CHECK(z == expected);
    CHECK(z == closed_forms_ale(AleClosedForm::AHat0, 2, j, 2, {R(0)}, e1(), e2()));
  }
}

TEST_CASE("adjoint matter closed form") {
  for (int j = 0; j < 2; ++j) {
    AleQuiverSpec spec;
    spec.quiver = QuiverSpec::parse("ahat:0");
    spec.k = 2;
    spec.j = {j};
    spec.order = 2;
    CHECK(z_quiver_ale(spec, {mu(0)}, e1(), e2()).series ==
          closed_forms_ale(AleClosedForm::AHat0, 2, j, 2, {mu(0)}, e1(), e2()));
    CHECK(z_quiver_ale(spec, {-e1()}, e1(), e2()).series ==
          closed_forms_ale(AleClosedForm::AHat0, 2, j, 2, {-e1()}, e1(), e2()));
  }
}

TEST_CASE("without edge factors and mass shifts the adjoint sum factorizes over patches") {
  const int k = 2;
  const Rational order = 2;
  AleQuiverSpec spec;
  spec.quiver = QuiverSpec::parse("ahat:0");
  spec.k = k;
  spec.j = {0};
  spec.order = order;
  spec.edge_factors = false;
  spec.mass_shifts = false;
  QSeries z = z_quiver_ale(spec, {mu(0)}, e1(), e2()).series;

  auto ring = z.ring();
  QSeries expected(ring, order);
  for (const auto& c : enumerate_charges(k, 0, order)) expected.add_term(ex({c.delta, c.v[0]}), R(1));
  for (int i = 1; i <= k; ++i) {
    PatchWeights w = patch_weights(k, i, e1(), e2());
    expected = (expected * lift(z_quiver_c2(QuiverSpec::parse("ahat:0"), 2, {mu(0)}, w.e1, w.e2), ring, order))
                   .truncated(order);
  }
  CHECK(z == expected);
}

TEST_CASE("two fundamentals on X_k") {
  const Rational order = 2;
  std::vector<R> m{mu(0), mu(1)};
  for (int k = 2; k <= 3; ++k)
    for (int j = 0; j < k; ++j) {
      AleQuiverSpec spec;
      spec.quiver = QuiverSpec::parse("a:0");
      spec.k = k;
      spec.j = {j};
      spec.order = order;
      QSeries printed = closed_forms_ale(AleClosedForm::A0, k, j, order, m, e1(), e2());
      QSeries z = z_quiver_ale(spec, m, e1(), e2()).series;
      QSeries corrected = (printed * one_minus_q_power(printed.ring(), order, R(-ratio(j * (k - j), k)))).truncated(order);
      CHECK(z == corrected);
      CHECK((z == printed) == (j == 0));

      spec.mass_shifts = false;
      CHECK(z_quiver_ale(spec, m, e1(), e2()).series == printed);

      // At mu1 = 0 the mass exponent vanishes.
      CHECK(closed_forms_ale(AleClosedForm::A0, k, j, order, {mu(0), R(0)}, e1(), e2()) == eta_chi(k, j, order, true));
    }
  AleQuiverSpec spec;
  spec.quiver = QuiverSpec::parse("a:0");
  spec.k = 2;
  spec.j = {0};
  spec.order = order;
  CHECK(z_quiver_ale(spec, {mu(0), R(0)}, e1(), e2()).series == eta_chi(2, 0, order, true));
}

TEST_CASE("frozen values for two-node quivers on X_2") {
  R x1(ratio(1, 3)), x2(ratio(-2, 5));
  AleQuiverSpec spec;
  spec.k = 2;
  spec.j = {0, 0};
  spec.order = 2;

  spec.quiver = QuiverSpec::parse("a:1");
  QSeries a1 = z_quiver_ale(spec, {R(ratio(1, 2)), R(ratio(1, 7)), R(ratio(-3, 4))}, x1, x2).series;
  QSeries a1_expected(a1.ring(), 2);
  a1_expected.add_term(ex({0, 0, 0, 0}), R(1));
  a1_expected.add_term(ex({0, 1, 0, 0}), R(ratio(3, 14)));
  a1_expected.add_term(ex({0, 2, 0, 0}), R(ratio(51, 392)));
  a1_expected.add_term(ex({1, 0, 0, 0}), R(ratio(-13, 56)));
  a1_expected.add_term(ex({1, 1, 0, 0}), R(ratio(1833, 1568)));
  a1_expected.add_term(ex({2, 0, 0, 0}), R(ratio(-559, 6272)));
  CHECK(a1 == a1_expected);

  spec.quiver = QuiverSpec::parse("ahat:1");
  QSeries n1 = z_quiver_ale(spec, {R(ratio(1, 2)), R(ratio(1, 7))}, x1, x2).series;
  QSeries n1_expected(n1.ring(), 2);
  n1_expected.add_term(ex({0, 0, 0, 0}), R(1));
  n1_expected.add_term(ex({0, 1, 0, 0}), R(ratio(-1, 7)));
  n1_expected.add_term(ex({0, 2, 0, 0}), R(ratio(-3, 49)));
  n1_expected.add_term(ex({1, 0, 0, 0}), R(ratio(-13, 56)));
  n1_expected.add_term(ex({1, 1, -1, -1}), R(1));
  n1_expected.add_term(ex({1, 1, 0, 0}), R(ratio(925, 784)));
  n1_expected.add_term(ex({1, 1, 1, 1}), R(1));
  n1_expected.add_term(ex({2, 0, 0, 0}), R(ratio(-559, 6272)));
  CHECK(n1 == n1_expected);

  // Mixed holonomies admit no conformal charge tuples.
  spec.j = {0, 1};
  CHECK(z_quiver_ale(spec, {R(ratio(1, 2)), R(ratio(1, 7))}, x1, x2).series.is_zero());
}

TEST_CASE("charge bound below the order warns") {
  AleSeries z = z_pure_ale(2, 0, 2, 1, e1(), e2());
  CHECK(z.warnings.size() == 1);
  AleQuiverSpec spec;
  spec.quiver = QuiverSpec::parse("ahat:0");
  spec.j = {0};
  spec.order = 2;
  spec.delta_max = 1;
  CHECK(z_quiver_ale(spec, {mu(0)}, e1(), e2()).warnings.size() == 1);
}

TEST_CASE("results do not depend on the number of workers") {
  AleQuiverSpec spec;
  spec.quiver = QuiverSpec::parse("ahat:1");
  spec.k = 3;
  spec.j = {1, 1};
  spec.order = ratio(5, 3);
  std::vector<R> m{R(ratio(2, 9)), R(ratio(-5, 3))};
  R x1(ratio(3, 7)), x2(ratio(-1, 4));
  CHECK(z_quiver_ale(spec, m, x1, x2, 1).series == z_quiver_ale(spec, m, x1, x2, 4).series);
  CHECK(z_pure_ale(3, 2, 2, 2, x1, x2, 1).series == z_pure_ale(3, 2, 2, 2, x1, x2, 3).series);
}
