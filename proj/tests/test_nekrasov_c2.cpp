#include "doctest.h"

#include "agt/nekrasov_c2.hpp"
#include "agt/sampling.hpp"

using namespace agt;
using R = RatFunc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

R e1() { return R::var("e1"); }
R e2() { return R::var("e2"); }
R mu(int i) { return R::var("mu" + std::to_string(i)); }

// Arm and leg read off the rows and columns directly.
int arm(const Partition& y, int a, int b) { return (a <= y.length() ? y.parts()[a - 1] : 0) - b; }
int leg(const Partition& y, int a, int b) {
  int height = 0;
  for (int p : y.parts())
    if (p >= b) ++height;
  return height - a;
}

R m_literal(const Partition& y1, const Partition& y2, const R& a, const R& x1, const R& x2) {
  R out(1);
  for (const auto& c : y1.cells())
    out *= a - R(leg(y2, c.row, c.col)) * x1 + R(arm(y1, c.row, c.col) + 1) * x2;
  for (const auto& c : y2.cells())
    out *= a + R(leg(y1, c.row, c.col) + 1) * x1 - R(arm(y2, c.row, c.col)) * x2;
  return out;
}

R q_coefficient(const QSeries& s, std::vector<Rational> e) { return s.coefficient(e); }

}  // namespace

TEST_CASE("bifundamental factor") {
  R a = R::var("mu");
  CHECK(m_bifund(Partition(), Partition(), a, e1(), e2()) == R(1));
  CHECK(m_bifund(Partition(), P({1}), a, e1(), e2()) == a);
  CHECK(m_bifund(P({1}), P({1}), R(0), e1(), e2()) == e1() * e2());
  for (int n1 = 0; n1 <= 3; ++n1)
    for (const auto& y1 : partitions_of(n1))
      for (int n2 = 0; n2 <= 3; ++n2)
        for (const auto& y2 : partitions_of(n2)) CHECK(m_bifund(y1, y2, a, e1(), e2()) == m_literal(y1, y2, a, e1(), e2()));
}

TEST_CASE("fundamental factor") {
  R a = R::var("mu");
  CHECK(m_fund(Partition(), a, e1(), e2()) == R(1));
  CHECK(m_fund(P({1}), a, e1(), e2()) == a);
  CHECK(m_fund(P({2, 1}), a, e1(), e2()) == a * (a - e2()) * (a - e1()));
}

TEST_CASE("pure theory") {
  auto pure = QuiverSpec::parse("pure");
  QSeries z = z_quiver_c2(pure, 2, {}, e1(), e2());
  CHECK(q_coefficient(z, {1}) == R(1) / (e1() * e2()));
  CHECK(q_coefficient(z, {2}) == R(1) / (R(2) * e1() * e1() * e2() * e2()));
  CHECK(z == closed_form_c2(pure, 2, {}, e1(), e2()));
  CHECK(z_quiver_c2(pure, 5, {}, e1(), e2()) == closed_form_c2(pure, 5, {}, e1(), e2()));
}

TEST_CASE("N=2* at zero mass counts partitions") {
  auto spec = QuiverSpec::parse("ahat:0");
  QSeries z = z_quiver_c2(spec, 6, {R(0)}, e1(), e2());
  const long p[] = {1, 1, 2, 3, 5, 7, 11};
  for (int n = 0; n <= 6; ++n) CHECK(q_coefficient(z, {n}) == R(p[n]));
}

TEST_CASE("N=2* at mu = -e1 is trivial") {
  auto spec = QuiverSpec::parse("ahat:0");
  QSeries z = z_quiver_c2(spec, 3, {-e1()}, e1(), e2());
  CHECK(z.terms().size() == 1);
  CHECK(q_coefficient(z, {0}) == R(1));
  CHECK(z == closed_form_c2(spec, 3, {-e1()}, e1(), e2()));
}

TEST_CASE("two fundamentals") {
  auto spec = QuiverSpec::parse("a:0");
  std::vector<R> m{mu(0), mu(1)};
  QSeries z = z_quiver_c2(spec, 1, m, e1(), e2());
  R expected = mu(1) * (mu(0) + e1() + e2()) / (e1() * e2());
  CHECK(q_coefficient(z, {1}) == expected);
  CHECK(q_coefficient(closed_form_c2(spec, 1, m, e1(), e2()), {1}) == expected);
  CHECK(z_quiver_c2(spec, 4, m, e1(), e2()) == closed_form_c2(spec, 4, m, e1(), e2()));
}

TEST_CASE("necklace quiver with two nodes") {
  auto spec = QuiverSpec::parse("ahat:1");
  std::vector<R> m{mu(0), mu(1)};
  QSeries z = z_quiver_c2(spec, 1, m, e1(), e2());
  CHECK(q_coefficient(z, {0, 1}) == mu(0) * (mu(1) + e1() + e2()) / (e1() * e2()));
  // The printed eta product predicts mu1(mu1 + e1 + e2) here.
  QSeries printed = closed_form_c2(spec, 1, m, e1(), e2());
  CHECK(q_coefficient(printed, {0, 1}) == mu(1) * (mu(1) + e1() + e2()) / (e1() * e2()));
  CHECK(z != printed);
  CHECK(z == trace_form_c2(spec, 1, m, e1(), e2()));
}

TEST_CASE("trace oracle matches the necklace sums at sample points") {
  for (const char* name : {"ahat:1", "ahat:2"}) {
    auto spec = QuiverSpec::parse(name);
    SamplingConfig sc;
    sc.seed = 5;
    sc.samples = 1;
    std::vector<std::string> names{"e1", "e2"};
    for (int i = 0; i < spec.mass_count(); ++i) names.push_back("mu" + std::to_string(i));
    for_each_sample(sc, names, [&](const ParamAssignment& p) {
      std::vector<R> m;
      for (int i = 0; i < spec.mass_count(); ++i) m.push_back(param("mu" + std::to_string(i), &p));
      R x1 = param("e1", &p), x2 = param("e2", &p);
      CHECK(z_quiver_c2(spec, 3, m, x1, x2) == trace_form_c2(spec, 3, m, x1, x2));
      return true;
    });
  }
}

TEST_CASE("linear quiver closed form at sample points") {
  auto spec = QuiverSpec::parse("a:1");
  REQUIRE(spec.mass_count() == 3);
  SamplingConfig sc;
  sc.seed = 9;
  sc.samples = 2;
  for_each_sample(sc, {"e1", "e2", "mu0", "mu1", "mu2"}, [&](const ParamAssignment& p) {
    std::vector<R> m{param("mu0", &p), param("mu1", &p), param("mu2", &p)};
    R x1 = param("e1", &p), x2 = param("e2", &p);
    CHECK(z_quiver_c2(spec, 4, m, x1, x2) == closed_form_c2(spec, 4, m, x1, x2));
    return true;
  });
}

TEST_CASE("results do not depend on the number of workers") {
  auto spec = QuiverSpec::parse("ahat:1");
  std::vector<R> m{R(ratio(1, 3)), R(ratio(-2, 7))};
  R x1(ratio(3, 5)), x2(ratio(-4, 11));
  CHECK(z_quiver_c2(spec, 4, m, x1, x2, 1) == z_quiver_c2(spec, 4, m, x1, x2, 3));
}

TEST_CASE("quiver parsing") {
  CHECK(QuiverSpec::parse("pure").nodes() == 1);
  CHECK(QuiverSpec::parse("ahat:2").nodes() == 3);
  CHECK(QuiverSpec::parse("ahat:2").mass_count() == 3);
  CHECK(QuiverSpec::parse("a:1").mass_count() == 3);
  CHECK(QuiverSpec::parse("a:1").name() == "a:1");
  CHECK_THROWS_AS(QuiverSpec::parse("b:1"), std::invalid_argument);
  CHECK_THROWS_AS(QuiverSpec::parse("ahat:-1"), std::invalid_argument);
  CHECK_THROWS_AS(z_quiver_c2(QuiverSpec::parse("a:0"), 2, {mu(0)}, e1(), e2()), std::invalid_argument);
}
