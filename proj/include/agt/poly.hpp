#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agt {

using Rational = mpq_class;

// n/d in canonical form; mpq_class(n, d) alone does not reduce.
inline Rational ratio(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Process-wide ordered variable table. Ids are assigned on first use and
// never change, which fixes the variable order of every polynomial.
class Vars {
 public:
  static int id(std::string_view name);
  static std::string name(int id);
  static int count();
};

// Exponent vector indexed by variable id, trailing zeros trimmed.
using Monomial = std::vector<int>;

int degree_of(const Monomial& m, int var);
bool mono_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// decreasing lexicographic order (variable 0 most significant).
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly var(std::string_view name);
  static Poly var(int id, int power = 1);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  Rational constant_value() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }

  int degree_in(int var) const;
  int total_degree() const;
  std::vector<int> variables() const;
  bool has_var(int var) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c) const;

  // Coefficients with respect to one variable, indexed by degree.
  std::map<int, Poly> coeffs_in(int var) const;
  static Poly from_coeffs(int var, const std::map<int, Poly>& c);

  Rational evaluate(const std::map<int, Rational>& values) const;
  // Substitutes a polynomial for one variable.
  Poly substitute(int var, const Poly& value) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly pow(const Poly& a, unsigned n);

// Exact division; throws std::domain_error when b does not divide a.
Poly divexact(const Poly& a, const Poly& b);
// Returns true and sets q when b divides a.
bool try_divide(const Poly& a, const Poly& b, Poly& q);

// Greatest common divisor over Q, normalized to leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);
// Scales p so that its leading coefficient is 1.
Poly monic(const Poly& p);

}  // namespace agt
