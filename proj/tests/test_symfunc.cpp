#include "doctest.h"

#include <string>
#include <vector>

#include "agt/errors.hpp"
#include "agt/symfunc.hpp"

using namespace agt;
using R = RatFunc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Coefficient of x1^l1 x2^l2 ... in p_mu(x1..xn), expanded as an explicit polynomial.
Rational power_sum_coefficient(const Partition& mu, const Partition& lambda, int n) {
  std::vector<Poly> x;
  for (int i = 1; i <= n; ++i) x.push_back(Poly::var("x" + std::to_string(i)));
  Poly prod(1);
  for (int part : mu.parts()) {
    Poly p;
    for (const auto& xi : x) p += pow(xi, static_cast<unsigned>(part));
    prod *= p;
  }
  Poly target(1);
  for (int i = 0; i < lambda.length(); ++i) target *= pow(x[i], static_cast<unsigned>(lambda.parts()[i]));
  for (const auto& [m, c] : prod.terms())
    if (Poly::from_terms({{m, Rational(1)}}) == target) return c;
  return 0;
}

SymVector single(int n, Basis b, const Partition& l) { return SymVector::single(n, b, l); }

}  // namespace

TEST_CASE("power sums in the monomial basis") {
  CHECK(basis_convert(single(1, Basis::PowerSum, P({1})), Basis::Monomial) == single(1, Basis::Monomial, P({1})));

  SymVector p11 = basis_convert(single(2, Basis::PowerSum, P({1, 1})), Basis::Monomial);
  CHECK(p11.coefficient(P({2})) == R(1));
  CHECK(p11.coefficient(P({1, 1})) == R(2));

  CHECK(basis_convert(single(2, Basis::Monomial, P({2})), Basis::PowerSum) == single(2, Basis::PowerSum, P({2})));
  SymVector m11 = basis_convert(single(2, Basis::Monomial, P({1, 1})), Basis::PowerSum);
  CHECK(m11.coefficient(P({1, 1})) == R(ratio(1, 2)));
  CHECK(m11.coefficient(P({2})) == R(ratio(-1, 2)));
}

TEST_CASE("transition matrix agrees with explicit polynomial expansion") {
  for (int n = 1; n <= 5; ++n) {
    auto parts = partitions_of(n);
    const auto& M = power_to_monomial_matrix(n);
    const auto& Minv = monomial_to_power_matrix(n);
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = 0; b < parts.size(); ++b) {
        Rational expected = power_sum_coefficient(parts[a], parts[b], n);
        CHECK(M[a][b] == expected);
        Rational id = 0;
        for (size_t c = 0; c < parts.size(); ++c) id += M[a][c] * Minv[c][b];
        CHECK(id == (a == b ? 1 : 0));
      }
  }
}

TEST_CASE("Jack functions at beta = 1 are Schur functions") {
  JackTable t(4, R(1));
  // Kostka numbers K_{lambda, mu} for |lambda| = 4.
  std::map<std::string, std::map<std::string, int>> kostka = {
      {"(4)", {{"(4)", 1}, {"(3,1)", 1}, {"(2,2)", 1}, {"(2,1,1)", 1}, {"(1,1,1,1)", 1}}},
      {"(3,1)", {{"(3,1)", 1}, {"(2,2)", 1}, {"(2,1,1)", 2}, {"(1,1,1,1)", 3}}},
      {"(2,2)", {{"(2,2)", 1}, {"(2,1,1)", 1}, {"(1,1,1,1)", 2}}},
      {"(2,1,1)", {{"(2,1,1)", 1}, {"(1,1,1,1)", 3}}},
      {"(1,1,1,1)", {{"(1,1,1,1)", 1}}},
  };
  for (const auto& l : partitions_of(4)) {
    const auto& row = kostka.at(l.to_string());
    for (const auto& m : partitions_of(4)) {
      auto it = row.find(m.to_string());
      R expected(it == row.end() ? 0 : it->second);
      auto e = t.expansion(l).find(m);
      R got = e == t.expansion(l).end() ? R(0) : e->second;
      CHECK(got == expected);
    }
  }
}

TEST_CASE("Jack functions in degree two and three") {
  R beta = R::var("beta");
  JackTable t(3, beta);
  CHECK(t.expansion(P({2})).at(P({1, 1})) == R(2) * beta / (beta + R(1)));

  SymVector p1sq = p1_power_in_jack(2, beta, 3);
  CHECK(p1sq.basis == Basis::Jack);
  CHECK(p1sq.coefficient(P({2})) == R(1));
  CHECK(p1sq.coefficient(P({1, 1})) == R(2) / (beta + R(1)));

  CHECK(p1_power_in_jack(1, beta, 3) == single(3, Basis::Jack, P({1})));

  SymVector cube = p1_power_in_jack(3, beta, 3);
  CHECK(cube.coefficient(P({3})) == R(1));
  CHECK(basis_convert(cube, Basis::Monomial, &t) == basis_convert(p1_power(3, 3), Basis::Monomial));
}

TEST_CASE("Jack orthogonality and norms through degree 5") {
  R beta = R::var("beta");
  JackTable t(5, beta);
  for (int n = 0; n <= 5; ++n) {
    auto parts = partitions_of(n);
    for (const auto& a : parts)
      for (const auto& b : parts) {
        R ip = inner_product(t.jack(a), t.jack(b), beta, &t);
        if (a == b) {
          CHECK(ip == jack_norm_formula(a, beta));
          CHECK(t.norm(a) == ip);
        } else {
          CHECK(ip.is_zero());
        }
      }
  }
}

TEST_CASE("power-sum pairing") {
  R beta = R::var("beta");
  SymVector p21 = single(3, Basis::PowerSum, P({2, 1}));
  CHECK(inner_product(p21, p21, beta) == R(2) / (beta * beta));
  CHECK(inner_product(p21, single(3, Basis::PowerSum, P({3})), beta).is_zero());
}

TEST_CASE("Jack conversions need a table of sufficient degree") {
  SymVector v = single(3, Basis::Monomial, P({3}));
  CHECK_THROWS_AS(basis_convert(v, Basis::Jack), std::invalid_argument);
  JackTable small(2, R(1));
  CHECK_THROWS_AS(basis_convert(v, Basis::Jack, &small), DegreeOverflow);
}
