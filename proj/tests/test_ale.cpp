#include "doctest.h"

#include <map>

#include "agt/ale.hpp"
#include "agt/errors.hpp"

using namespace agt;
using R = RatFunc;

namespace {

R e1() { return R::var("e1"); }
R e2() { return R::var("e2"); }

std::vector<Rational> rv(std::initializer_list<Rational> xs) { return std::vector<Rational>(xs); }

}  // namespace

TEST_CASE("charges") {
  Charge a = make_charge({1}, 2);
  CHECK(a.j == 1);
  CHECK(a.v == rv({ratio(1, 2)}));
  CHECK(a.delta == ratio(1, 4));

  Charge b = make_charge({1, 1}, 3);
  CHECK(b.j == 0);
  CHECK(b.v == rv({1, 1}));
  CHECK(b.delta == 1);

  Charge z = make_charge({0}, 2);
  CHECK(z.j == 0);
  CHECK(z.delta == 0);
}

TEST_CASE("Cartan matrix and its inverse") {
  for (int k = 2; k <= 6; ++k)
    for (int i = 1; i < k; ++i)
      for (int j = 1; j < k; ++j) {
        Rational s = 0;
        for (int l = 1; l < k; ++l) s += cartan(k, i, l) * cartan_inverse(k, l, j);
        CHECK(s == (i == j ? 1 : 0));
        CHECK(cartan_inverse(k, i, j) == ratio(std::min(i, j) * (k - std::max(i, j)), k));
      }
  CHECK(cartan(3, 0, 1) == 0);
  CHECK(cartan_inverse(3, 3, 1) == 0);
}

TEST_CASE("charge enumeration") {
  auto zero = enumerate_charges(2, 0, 1);
  REQUIRE(zero.size() == 3);
  CHECK(zero[0].u == std::vector<long>{0});
  CHECK(zero[1].delta == 1);
  CHECK(zero[2].delta == 1);
  CHECK(std::abs(zero[1].u[0]) == 2);
  CHECK(std::abs(zero[2].u[0]) == 2);

  auto conf = enumerate_charges(2, 1, 4, true);
  REQUIRE(conf.size() == 2);
  for (const auto& c : conf) CHECK(std::abs(c.u[0]) == 1);

  auto k3 = enumerate_charges(3, 0, 0);
  REQUIRE(k3.size() == 1);
  CHECK(k3[0].u == std::vector<long>{0, 0});
}

TEST_CASE("enumeration agrees with a brute-force lattice scan") {
  for (int k = 2; k <= 4; ++k)
    for (int j = 0; j < k; ++j) {
      const Rational dmax = 3;
      std::map<std::vector<long>, Rational> brute;
      std::vector<long> u(k - 1);
      std::function<void(int)> rec = [&](int i) {
        if (i == k - 1) {
          long s = 0;
          for (int l = 0; l < k - 1; ++l) s += (l + 1) * u[l];
          if (((s % k) + k) % k != j) return;
          Rational d = quadratic_Cinv(k, u, u) / 2;
          if (d <= dmax) brute[u] = d;
          return;
        }
        for (long x = -6; x <= 6; ++x) {
          u[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
      auto listed = enumerate_charges(k, j, dmax);
      CHECK(listed.size() == brute.size());
      for (const auto& c : listed) {
        REQUIRE(brute.count(c.u) == 1);
        CHECK(brute[c.u] == c.delta);
        CHECK(c.j == j);
        CHECK(charge_from_v(c.v, k) == c.u);
        CHECK(holonomy_of(c.v, k) == j);
      }
      auto conf = enumerate_charges(k, j, dmax, true);
      for (const auto& c : conf) CHECK(quadratic_Cinv(k, c.u, c.u) == ratio(j * (k - j), k));
    }
}

TEST_CASE("holonomy of inconsistent charges") {
  CHECK_THROWS_AS(holonomy_of(rv({ratio(1, 3), 0}), 3), InconsistentCharge);
  CHECK_THROWS_AS(charge_from_v(rv({ratio(1, 3)}), 2), InconsistentCharge);
  CHECK(holonomy_of(rv({ratio(2, 3), ratio(1, 3)}), 3) == 1);
}

TEST_CASE("patch weights") {
  for (int k = 2; k <= 5; ++k) {
    R inverse_sum, linear, quadratic;
    std::vector<Rational> v(k - 1);
    for (int i = 0; i < k - 1; ++i) v[i] = ratio(i + 1, k) - i;
    for (int i = 1; i <= k; ++i) {
      PatchWeights w = patch_weights(k, i, e1(), e2());
      R euler = w.e1 * w.e2;
      inverse_sum += euler.inverse();
      R shift = (i <= k - 1 ? R(v[i - 1]) * w.e1 : R(0)) + (i >= 2 ? R(v[i - 2]) * w.e2 : R(0));
      linear += shift / euler;
      quadratic += shift * shift / euler;
    }
    CHECK(inverse_sum == (R(k) * e1() * e2()).inverse());
    CHECK(linear.is_zero());
    CHECK(quadratic == R(-quadratic_C(k, v, v)));
  }
  PatchWeights w1 = patch_weights(2, 1, e1(), e2());
  CHECK(w1.e1 * w1.e2 == R(2) * e1() * (e2() - e1()));
}

TEST_CASE("characters") {
  for (int k = 2; k <= 4; ++k) {
    QSeries chi = character_chi(k, 0, 2);
    Exponents lead(chi.ring()->size(), Rational(0));
    lead[0] = -ratio(k - 1, 24);
    CHECK(chi.coefficient(lead) == R(1));
    CHECK(chi.min_degree() == lead[0]);
  }
  // eta chi for k = 2, j = 0 is the theta series sum over even u of q^{u^2/4} xi^{u/2}.
  QSeries chi = character_chi(2, 0, 4);
  QSeries eta = euler_power(chi.ring(), 5, {Rational(1), Rational(0)}, R(1)).shifted({ratio(1, 24), Rational(0)});
  QSeries theta = (eta * chi).truncated(4);
  for (const auto& [e, c] : theta.terms()) {
    REQUIRE(e[0].get_den() == 1);
    CHECK(c == R(1));
    CHECK(e[0] == e[1] * e[1]);
  }
  CHECK(theta.terms().size() == 5);
}

TEST_CASE("conformal degree") {
  // A0 with two fundamentals reduces to u.C^-1 u = j(k-j)/k.
  for (int k = 2; k <= 4; ++k)
    for (int j = 0; j < k; ++j)
      for (const auto& c : enumerate_charges(k, j, 3)) {
        bool conformal = conformal_degree(k, c.v, {}, {}) == 0;
        CHECK(conformal == (quadratic_Cinv(k, c.u, c.u) == ratio(j * (k - j), k)));
      }
  // The necklace with one node is always conformal.
  for (const auto& c : enumerate_charges(3, 1, 3)) CHECK(conformal_degree(3, c.v, {c.v}, {c.v}) == 0);
}
