#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agt/qseries.hpp"
#include "agt/ratfunc.hpp"

namespace agt {

// Cartan matrix of A_{k-1} and its inverse, indices 1..k-1. Out-of-range
// indices (0 or k) give 0.
Rational cartan(int k, int i, int j);
Rational cartan_inverse(int k, int i, int j);

// Equivariant weights on the i-th toric patch of X_k, i = 1..k.
struct PatchWeights {
  RatFunc e1, e2;
  RatFunc beta() const { return -(e1 / e2); }
};
PatchWeights patch_weights(int k, int i, const RatFunc& e1, const RatFunc& e2);

// u in Z^{k-1}, holonomy j, v = C^{-1} u, Delta = u.C^{-1}u / 2.
struct Charge {
  int k = 2;
  std::vector<long> u;
  int j = 0;
  std::vector<Rational> v;
  Rational delta;
  // Root-lattice part gamma_u = v - omega_j in simple-root coordinates.
  std::vector<Rational> gamma;

  std::string to_string() const;
  friend bool operator==(const Charge& a, const Charge& b) { return a.k == b.k && a.u == b.u; }
};

Charge make_charge(const std::vector<long>& u, int k);
// j for a vector v in (1/k)Z^{k-1}: the class of k v_{k-1} mod k, after
// checking k v_l = -l j (mod k) for every l. Throws InconsistentCharge.
int holonomy_of(const std::vector<Rational>& v, int k);
// u = C v, validated to be integral.
std::vector<long> charge_from_v(const std::vector<Rational>& v, int k);

Rational quadratic_C(int k, const std::vector<Rational>& a, const std::vector<Rational>& b);
Rational quadratic_Cinv(int k, const std::vector<long>& a, const std::vector<long>& b);

// All u in U_j with Delta_u <= delta_max, sorted by (Delta, u). With
// conformal set, only the A_0 conformal charges u.C^{-1}u = j(k-j)/k.
std::vector<Charge> enumerate_charges(int k, int j, const Rational& delta_max, bool conformal = false);

// Degree of the Euler class at a quiver vertex; the theory is conformal at the
// vertex when this vanishes. `out` lists charges v at heads of edges leaving
// the vertex, `in` the charges at tails of edges entering it.
Rational conformal_degree(int k, const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& out,
                          const std::vector<std::vector<Rational>>& in);

// Series ring with graded q and ungraded xi_1..xi_{k-1}.
SeriesRingPtr ale_ring(int k, const std::string& q = "q");

// eta^{1-k} sum_{u in U_j} q^{Delta_u} xi^{C^{-1} u}, truncated at q-exponent <= order.
QSeries character_chi(int k, int j, const Rational& order, bool conformal = false);

}  // namespace agt
