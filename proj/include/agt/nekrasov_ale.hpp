#pragma once

#include <string>
#include <vector>

#include "agt/ale.hpp"
#include "agt/edges.hpp"
#include "agt/nekrasov_c2.hpp"

namespace agt {

// A fixed point of the moduli space on X_k: one partition per patch plus the
// first Chern class.
struct AleState {
  PartitionTuple y;
  Charge charge;
};

// The vacuum [empty, 0] of W_0.
AleState ale_vacuum(int k);

struct AleMatrixElement {
  RatFunc value;
  Rational z_power;
  std::vector<Rational> x_power;  // v_21
};

// <V_mu [Y1, u1], [Y2, u2]> without the (-1)^{|Y2|} sign:
// prod_i m_{Y1^i, Y2^i}(e^(i), mu - (v21)_i e1^(i) - (v21)_{i-1} e2^(i)) prod_n l^(n)_{v21}.
AleMatrixElement matrix_element_ale(const AleState& s1, const AleState& s2, const RatFunc& mu, const RatFunc& e1,
                                    const RatFunc& e2, CinvIndex c = CinvIndex::Holonomy);

struct AleQuiverSpec {
  QuiverSpec quiver;
  int k = 2;
  std::vector<int> j;          // holonomy per node
  Rational order = 2;          // bound on the total q-degree
  Rational delta_max = -1;     // per-node charge bound; negative means order
  CinvIndex cinv = CinvIndex::Holonomy;
  // Structural switches: with both off the sum factorizes over patches.
  bool edge_factors = true;
  bool mass_shifts = true;

  Rational effective_delta_max() const { return delta_max < 0 ? order : delta_max; }
};

// q, or q0..qr, graded; xi1..xi{k-1}, or xi{v}_{i}, ungraded.
SeriesRingPtr ale_quiver_ring(const QuiverSpec& quiver, int k);

struct AleSeries {
  QSeries series;
  std::vector<std::string> warnings;
};

// sum_{u in U_j} q^{Delta_u} xi^{C^{-1}u} prod_i Z_C2(e^(i); q).
AleSeries z_pure_ale(int k, int j, const Rational& order, const Rational& delta_max, const RatFunc& e1,
                     const RatFunc& e2, int jobs = 1);

// Localization sum over conformal charges and diagram tuples, with the
// bifundamental matrix elements along the arrows (the fundamentals of A(r)
// pair against the vacuum) divided by the tangent weights at each node.
AleSeries z_quiver_ale(const AleQuiverSpec& spec, const std::vector<RatFunc>& masses, const RatFunc& e1,
                       const RatFunc& e2, int jobs = 1);

enum class AleClosedForm { Pure, AHat0, A0 };

// pure: eta^{k-1} chi exp(q / k e1 e2)
// AHat0: q^{k/24} eta^{-1} chi (q^{-1/24} eta)^{-mu(mu+e1+e2)/k e1 e2}
// A0: eta^{k-1} chi_conf (1 - q)^{-mu1(mu0+e1+e2)/k e1 e2}
QSeries closed_forms_ale(AleClosedForm kind, int k, int j, const Rational& order, const std::vector<RatFunc>& masses,
                         const RatFunc& e1, const RatFunc& e2);

}  // namespace agt
