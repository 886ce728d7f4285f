#pragma once

#include <string>
#include <vector>

#include "agt/fock.hpp"
#include "agt/symfunc.hpp"

namespace agt {

struct CheckResult {
  std::string relation;
  bool ok = true;
  int checked = 0;
  // First failure, if any.
  std::string state;
  std::string residual;
};

// Verifies (lhs - rhs) s = 0 on every state.
CheckResult identity_check(const FockSpace& space, const std::string& relation, const OperatorExpr& lhs,
                           const OperatorExpr& rhs, const std::vector<FockState>& states);
// Verifies (AB - BA - expected) s = 0 on every state.
CheckResult commutator_check(const FockSpace& space, const std::string& relation, const OperatorExpr& a,
                             const OperatorExpr& b, const OperatorExpr& expected, const std::vector<FockState>& states);

// Bilinear form with <prod a^c_{-lambda^c}|0>, same> = prod_c z_{lambda^c} g_cc^{l(lambda^c)};
// requires a diagonal Gram matrix. Labels must agree.
RatFunc fock_pairing(const FockSpace& space, const FockVector& a, const FockVector& b);

// eu_+(lambda) = prod ((L+1) e1 - A e2), eu_-(lambda) = prod (L e1 - (A+1) e2).
RatFunc eu_plus(const Partition& lambda, const RatFunc& e1, const RatFunc& e2);
RatFunc eu_minus(const Partition& lambda, const RatFunc& e1, const RatFunc& e2);

// J_lambda as a vector of the one-boson Fock space (p_{-mu}|0> for p_mu).
FockVector jack_fock_vector(const JackTable& table, const Partition& lambda);
// Fixed-point class [lambda] = eu_+(lambda) J_lambda.
FockVector fixed_point_class(const JackTable& table, const Partition& lambda, const RatFunc& e1, const RatFunc& e2);

// <V_{alpha,beta}(z)[lambda1], [lambda2]> at z^{|lambda2|-|lambda1|}, computed on the Fock side.
RatFunc co_matrix_element(const RatFunc& alpha, const RatFunc& beta_exp, const Partition& lambda1,
                          const Partition& lambda2, const JackTable& table, const RatFunc& e1, const RatFunc& e2);

// Global sign (-1)^{a|lambda1| + b|lambda2|} relating the Fock pairing to (-1)^{|lambda2|} m_{lambda1,lambda2}.
struct SignCalibration {
  bool by_first = false;
  bool by_second = false;
  int sign(const Partition& l1, const Partition& l2) const;
  std::string to_string() const;
};
// Fixes the calibration from the pairs of grade <= 1. Throws std::runtime_error
// when no choice fits.
SignCalibration calibrate_co_sign(const RatFunc& e1, const RatFunc& e2, const RatFunc& mu, const JackTable& table);

// exp(sum_c eta_c a^c_{-1}) applied to the vacuum, truncated at the grade bound.
FockVector gaiotto_vector(const FockSpace& space, const std::vector<RatFunc>& eta, int grade,
                          const std::vector<Rational>& label = {});
// a^c_1 G = eta_c g_cc G and a^c_m G = 0 for 2 <= m <= grade, compared below the bound.
CheckResult whittaker_check(const FockSpace& space, const std::vector<RatFunc>& eta, int grade,
                            const std::vector<Rational>& label = {});
// Sum_{|lambda| = n} (-1)^n J_lambda / eu_-(lambda) as a Fock vector.
FockVector hilbert_class(const JackTable& table, int n, const RatFunc& e1, const RatFunc& e2);

}  // namespace agt
