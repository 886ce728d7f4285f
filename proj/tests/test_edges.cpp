#include "doctest.h"

#include <functional>

#include "agt/ale.hpp"
#include "agt/edges.hpp"
#include "agt/errors.hpp"

using namespace agt;
using R = RatFunc;

namespace {

R e1() { return R::var("e1"); }
R e2() { return R::var("e2"); }
R mu() { return R::var("mu"); }

// prod_{i=0}^{v-1} prod_{j=0}^{2i} (mu + i e1 + j e2) for integers v >= 0.
R integer_blowup(long v) {
  R out(1);
  for (long i = 0; i < v; ++i)
    for (long j = 0; j <= 2 * i; ++j) out *= mu() + R(i) * e1() + R(j) * e2();
  return out;
}

}  // namespace

TEST_CASE("zero charge has no edge contribution") {
  for (int k = 2; k <= 5; ++k) {
    EdgeData d = edge_chern(std::vector<Rational>(k - 1, Rational(0)), k);
    for (const auto& list : d.monomials) CHECK(list.empty());
    EdgeFactor f = edge_factor(d, e1(), e2(), mu());
    CHECK(f.ell == R(1));
    CHECK(f.c1.is_zero());
    CHECK(f.signed_count == 0);
  }
}

TEST_CASE("k = 2 blowup factors") {
  CHECK(blowup_oracle_k2(0, e1(), e2(), mu()) == R(1));
  CHECK(blowup_oracle_k2(1, e1(), e2(), mu()) == mu());
  CHECK(blowup_oracle_k2(2, e1(), e2(), mu()) ==
        mu() * (mu() + e1()) * (mu() + e1() + e2()) * (mu() + e1() + R(2) * e2()));
  for (long v = 0; v <= 4; ++v) CHECK(blowup_oracle_k2(v, e1(), e2(), mu()) == integer_blowup(v));
  CHECK_THROWS_AS(blowup_oracle_k2(ratio(1, 3), e1(), e2(), mu()), InconsistentCharge);

  EdgeData one = edge_chern({Rational(1)}, 2);
  REQUIRE(one.monomials.size() == 1);
  REQUIRE(one.monomials[0].size() == 1);
  CHECK(one.monomials[0][0] == EdgeMonomial{1, 0, 0});
  CHECK(ell_from_monomials(one.monomials[0], e1(), e2(), mu()) == mu());

  for (int t = -6; t <= 6; ++t) {
    Rational v = ratio(t, 2);
    EdgeData d = edge_chern({v}, 2);
    CHECK(ell_from_monomials(d.monomials[0], e1(), e2(), mu()) == blowup_oracle_k2(v, e1(), e2(), mu()));
  }
}

TEST_CASE("number of factors is the conformal weight above the holonomy ground state") {
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
        EdgeFactor f = edge_factor(edge_chern(v, k), e1(), e2(), mu());
        CHECK(Rational(f.signed_count) == quadratic_C(k, v, v) / 2 - ratio(j * (k - j), 2 * k));
        return;
      }
      for (int a = -2 * k; a <= 2 * k; ++a) {
        v[i] = ratio(a, k);
        rec(i + 1);
      }
    };
    rec(0);
  }
}

TEST_CASE("conformal charges carry trivial edge factors with the holonomy index") {
  for (int k = 2; k <= 4; ++k)
    for (int j = 0; j < k; ++j)
      for (const auto& c : enumerate_charges(k, j, 6, true)) {
        EdgeFactor f = edge_factor(edge_chern(c.v, k), e1(), e2(), mu());
        CHECK(f.signed_count == 0);
        CHECK(f.ell == R(1));
      }
}

TEST_CASE("the edge-index reading breaks conformal triviality at k = 4") {
  Charge c = make_charge({0, -1, 0}, 4);
  REQUIRE(c.delta == ratio(1, 2));
  EdgeFactor holonomy = edge_factor(edge_chern(c.v, 4, CinvIndex::Holonomy), e1(), e2(), mu());
  EdgeFactor edge = edge_factor(edge_chern(c.v, 4, CinvIndex::Edge), e1(), e2(), mu());
  CHECK(holonomy.ell == R(1));
  CHECK(edge.signed_count == 0);
  CHECK(edge.ell != R(1));
}

TEST_CASE("edge data records holonomy and the shifted charge") {
  EdgeData d = edge_chern({ratio(1, 2)}, 2);
  CHECK(d.j == 1);
  CHECK(d.k == 2);
  EdgeData z = edge_chern({Rational(2)}, 2);
  CHECK(z.j == 0);
  CHECK(z.s == std::vector<long>{2});
  CHECK_THROWS_AS(edge_chern({ratio(1, 3), Rational(0)}, 3), InconsistentCharge);
}
