#pragma once

#include <map>
#include <vector>

#include "agt/partition.hpp"
#include "agt/ratfunc.hpp"

namespace agt {

enum class Basis { Monomial, PowerSum, Jack };

const char* basis_name(Basis b);

// Symmetric function truncated at degree N, written in one basis.
struct SymVector {
  int N = 0;
  Basis basis = Basis::Monomial;
  std::map<Partition, RatFunc> coeffs;

  SymVector() = default;
  SymVector(int n, Basis b) : N(n), basis(b) {}
  static SymVector single(int n, Basis b, const Partition& lambda, const RatFunc& c = RatFunc(1));

  RatFunc coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const RatFunc& c);
  bool is_zero() const { return coeffs.empty(); }

  SymVector& operator+=(const SymVector& o);
  SymVector& operator-=(const SymVector& o);
  SymVector scaled(const RatFunc& c) const;
  friend bool operator==(const SymVector& a, const SymVector& b) {
    return a.basis == b.basis && a.coeffs == b.coeffs;
  }
};

// Coefficient of m_lambda in p_mu for |lambda| = |mu| = n, as an integer matrix
// indexed by partitions_of(n), rows by mu. Cached and thread-safe.
const std::vector<std::vector<Rational>>& power_to_monomial_matrix(int n);
const std::vector<std::vector<Rational>>& monomial_to_power_matrix(int n);

// Jack functions J_lambda(x; 1/beta) in the monomial basis, with norms.
class JackTable {
 public:
  JackTable(int N, RatFunc beta);

  int N() const { return N_; }
  const RatFunc& beta() const { return beta_; }
  // Expansion of J_lambda in the monomial basis.
  const std::map<Partition, RatFunc>& expansion(const Partition& lambda) const;
  const RatFunc& norm(const Partition& lambda) const;
  SymVector jack(const Partition& lambda) const;

 private:
  int N_;
  RatFunc beta_;
  std::map<Partition, std::map<Partition, RatFunc>> expansion_;
  std::map<Partition, RatFunc> norm_;
};

// Re-expresses v in the target basis. Conversions to or from the Jack basis
// need a table of sufficient degree.
SymVector basis_convert(const SymVector& v, Basis target, const JackTable* table = nullptr);

// <p_lambda, p_mu> = delta z_lambda beta^{-l(lambda)}, extended bilinearly.
RatFunc inner_product(const SymVector& f, const SymVector& g, const RatFunc& beta, const JackTable* table = nullptr);

// prod_s (beta L + A + 1) / (beta (L + 1) + A)
RatFunc jack_norm_formula(const Partition& lambda, const RatFunc& beta);

// (p_1)^n = n! sum_{|lambda| = n} prod_s (beta L + A + 1)^{-1} J_lambda
SymVector p1_power_in_jack(int n, const RatFunc& beta, int N);

// Literal (p_1)^n in the power-sum basis.
SymVector p1_power(int n, int N);

}  // namespace agt
