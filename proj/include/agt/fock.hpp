#pragma once

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "agt/ale.hpp"
#include "agt/partition.hpp"
#include "agt/ratfunc.hpp"

namespace agt {

// Basis state prod_c a^c_{-lambda^c} |0>, optionally tensored with a lattice
// label. The label stores beta + omega_j in simple-root coordinates.
struct FockState {
  std::vector<Partition> modes;
  std::vector<Rational> label;

  int grade() const;
  std::string to_string() const;
  friend bool operator==(const FockState& a, const FockState& b) {
    return a.modes == b.modes && a.label == b.label;
  }
  friend bool operator<(const FockState& a, const FockState& b);
};

class FockVector {
 public:
  using Map = std::map<FockState, RatFunc>;

  FockVector() = default;
  static FockVector basis(const FockState& s, const RatFunc& c = RatFunc(1));

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFunc coefficient(const FockState& s) const;
  int max_grade() const;
  void add(const FockState& s, const RatFunc& c);

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  FockVector scaled(const RatFunc& c) const;
  // Keeps only the states of grade <= g.
  FockVector truncated(int g) const;
  FockVector map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const;

  friend bool operator==(const FockVector& a, const FockVector& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

 private:
  Map terms_;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);

using FieldVector = std::vector<RatFunc>;

// Heisenberg algebra [a^c_m, a^d_n] = m delta_{m+n,0} gram[c][d] acting on
// partitions per color. Colors listed in lattice_root carry the zero mode
// <gamma_i, beta + omega_j> of the A_{k-1} root lattice.
struct FockSpace {
  int colors = 1;
  std::vector<std::vector<RatFunc>> gram;
  int k = 1;                       // lattice of type A_{k-1}; k = 1 means no lattice
  std::vector<int> lattice_root;   // per color: simple root index 0..k-2, or -1
  int working_bound = 64;

  bool has_lattice() const { return k >= 2; }
  FockState vacuum(const std::vector<Rational>& label = {}) const;
  std::vector<FockState> states(int grade, const std::vector<Rational>& label = {}) const;
  std::vector<FockState> states_up_to(int grade, const std::vector<Rational>& label = {}) const;
  FieldVector unit(int c) const;
};

// One free boson with [a_m, a_n] = m delta gram.
FockSpace heisenberg_space(const RatFunc& gram);
// k patch bosons p^i with [p^i_m, p^j_n] = m delta_ij / beta_i.
FockSpace patch_space(int k, const RatFunc& e1, const RatFunc& e2);
// Lattice bosons q^i (Gram = Cartan matrix of A_{k-1}), optionally with an
// extra unit-normalized boson carrying no lattice charge.
FockSpace lattice_space(int k, bool extra_boson = false);

// Holonomy class j with label - omega_j in the root lattice.
int label_sector(int k, const std::vector<Rational>& label);
std::vector<Rational> fundamental_weight(int k, int j);
// epsilon(a, b) for root-lattice vectors in simple-root coordinates.
int cocycle(const std::vector<Rational>& a, const std::vector<Rational>& b);

// ---- operator words ----

// a^v_m = sum_c v_c a^c_m
struct ModeLetter {
  FieldVector v;
  int m = 0;
};

// 1/2 sum_pieces w sum_m :a^u_{-m} a^v_{m+n}:, zero modes included.
struct BilinearLetter {
  struct Piece {
    RatFunc w;
    FieldVector u, v;
  };
  std::vector<Piece> pieces;
  int n = 0;
};

// Coefficient of z^power in
//   exp(alpha sum z^m/m a^v_{-m}) exp(beta sum z^{-m}/m a^v_m) [e^shift z^{|shift|^2/2 + <shift, label>}].
// With sector_delta = i >= 1 the power is shifted by sector_sign * delta_{i, j(label)}.
struct VertexLetter {
  FieldVector v;
  RatFunc alpha, beta;
  std::vector<Rational> shift;
  Rational power;
  int sector_delta = -1;
  int sector_sign = 1;
};

// Multiplies by epsilon(gamma, beta) (gamma_first) or epsilon(beta, gamma),
// beta being the root-lattice part of the label.
struct CocycleLetter {
  std::vector<Rational> gamma;
  bool gamma_first = true;
};

// eps1 (beta/2 sum (a_{-m} a_{-n} a_{m+n} + a_{-m-n} a_n a_m) - (beta-1)/2 sum (m-1) a_{-m} a_m) on color 0.
struct CubicLetter {
  RatFunc beta, eps1;
};

using Letter = std::variant<ModeLetter, BilinearLetter, VertexLetter, CocycleLetter, CubicLetter>;

// Linear combination of words; a word acts right to left (last letter first).
class OperatorExpr {
 public:
  struct Term {
    RatFunc coeff;
    std::vector<Letter> word;
  };

  OperatorExpr() = default;
  static OperatorExpr identity(const RatFunc& c = RatFunc(1));
  static OperatorExpr of(Letter l, const RatFunc& c = RatFunc(1));

  const std::vector<Term>& terms() const { return terms_; }
  OperatorExpr& operator+=(const OperatorExpr& o);
  OperatorExpr& operator-=(const OperatorExpr& o);
  OperatorExpr scaled(const RatFunc& c) const;
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

 private:
  std::vector<Term> terms_;
};

OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b);
OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

FockVector apply(const FockSpace& space, const OperatorExpr& op, const FockVector& v);
FockVector apply(const FockSpace& space, const Letter& letter, const FockVector& v);

// ---- generator families ----

OperatorExpr mode(const FieldVector& v, int m);
// L_n = 1/2 sum_{c,d} K_cd :a^c a^d: with K the inverse of the Gram matrix on the given colors.
OperatorExpr virasoro_gram(const FockSpace& space, const std::vector<int>& colors, int n);
// L_n = 1/2 sum_i |b_i|^{-2} :a^{b_i} a^{b_i}: for a pairwise orthogonal basis b_i.
OperatorExpr virasoro_orthogonal(const FockSpace& space, const std::vector<FieldVector>& basis, int n);
// Rational Gram-Schmidt of the given colors' unit vectors, in the given order.
std::vector<FieldVector> orthogonal_basis(const FockSpace& space, const std::vector<int>& colors);
RatFunc pairing(const FockSpace& space, const FieldVector& u, const FieldVector& v);

enum class FKConvention {
  Graded,   // E_i t^m -> epsilon(gamma_i, beta) V_{-m}(gamma_i), F_i t^m -> -epsilon(gamma_i, beta) V_{m}(-gamma_i)
  Literal,  // E_i t^m -> epsilon(gamma_i, beta) V_{m + delta_ij}(gamma_i), F_i t^m -> epsilon(beta, gamma_i) V_{-m - delta_ij}(-gamma_i)
};

// Frenkel-Kac operators on lattice_space(k); i = 1..k-1.
OperatorExpr fk_E(const FockSpace& space, int i, int m, FKConvention conv = FKConvention::Graded);
OperatorExpr fk_F(const FockSpace& space, int i, int m, FKConvention conv = FKConvention::Graded);
OperatorExpr fk_H(const FockSpace& space, int i, int m);
// Chevalley generators of affine sl_k, i = 0..k-1.
OperatorExpr chevalley_e(const FockSpace& space, int i, FKConvention conv = FKConvention::Graded);
OperatorExpr chevalley_f(const FockSpace& space, int i, FKConvention conv = FKConvention::Graded);
OperatorExpr chevalley_h(const FockSpace& space, int i);
// Affine Cartan matrix of sl_k, indices 0..k-1.
int affine_cartan(int k, int i, int j);

OperatorExpr vertex(const FieldVector& v, const RatFunc& alpha, const RatFunc& beta, const Rational& power,
                    const std::vector<Rational>& shift = {});

// Integrals of motion on heisenberg_space(1/beta).
OperatorExpr integral_I1(const RatFunc& beta);
OperatorExpr integral_I2(const RatFunc& beta, const RatFunc& eps1);

}  // namespace agt
