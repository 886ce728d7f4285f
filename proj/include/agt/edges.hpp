#pragma once

#include <string>
#include <vector>

#include "agt/ratfunc.hpp"

namespace agt {

// sign * (chi_1)^a (chi_2)^b, i.e. weight a e1^(n) + b e2^(n).
struct EdgeMonomial {
  int sign = 1;
  long a = 0, b = 0;
  friend bool operator==(const EdgeMonomial& x, const EdgeMonomial& y) {
    return x.sign == y.sign && x.a == y.a && x.b == y.b;
  }
};

// Which diagonal entry of C^{-1} enters the quadratic conditions defining
// S_n^+ and S_n^-: the current edge index n, or the holonomy class j
// (with (C^{-1})^{00} = 0).
enum class CinvIndex { Edge, Holonomy };

struct EdgeData {
  int k = 2;
  int j = 0;
  std::vector<Rational> v;
  std::vector<long> s;  // C^{-1}(u - e_j), or v when j = 0
  std::vector<long> d;  // d_n^+ or d_n^- according to the sign of s_n
  int m = 1;            // lists vanish for n > m
  // Per n = 1..k-1. The sign is the exponent each factor carries in the
  // edge factor, which is minus the coefficient in the Chern character list.
  std::vector<std::vector<EdgeMonomial>> monomials;
};

EdgeData edge_chern(const std::vector<Rational>& v, int k, CinvIndex c = CinvIndex::Holonomy);

struct EdgeFactor {
  RatFunc ell;         // prod_n prod (mu + sigma)^sign
  RatFunc c1;          // degree-one part of the Chern character list
  long signed_count = 0;
};

// Uses the patch weights e^(n) of X_k built from (e1, e2).
EdgeFactor edge_factor(const EdgeData& data, const RatFunc& e1, const RatFunc& e2, const RatFunc& mu);
// prod (mu + a e1 + b e2)^sign over one list, with the weights given directly.
RatFunc ell_from_monomials(const std::vector<EdgeMonomial>& list, const RatFunc& e1, const RatFunc& e2,
                           const RatFunc& mu);

// Closed k = 2 double product in terms of floor(v) and {v} in {0, 1/2}.
RatFunc blowup_oracle_k2(const Rational& v, const RatFunc& e1, const RatFunc& e2, const RatFunc& mu);

}  // namespace agt
