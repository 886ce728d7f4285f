#pragma once

#include <map>
#include <string>
#include <string_view>

#include "agt/poly.hpp"

namespace agt {

using ParamAssignment = std::map<std::string, Rational>;

// Rational function over Q, kept in lowest terms with a monic denominator.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc var(std::string_view name) { return RatFunc(Poly::var(name)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  bool depends_on(int var) const { return num_.has_var(var) || den_.has_var(var); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc inverse() const;

  // Throws ZeroDenominator when the denominator vanishes.
  Rational evaluate(const ParamAssignment& a) const;
  // Partial substitution of rational values.
  RatFunc substitute(const ParamAssignment& a) const;
  RatFunc substitute(int var, const RatFunc& value) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc make_reduced(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

RatFunc operator+(RatFunc a, const RatFunc& b);
RatFunc operator-(RatFunc a, const RatFunc& b);
RatFunc operator*(RatFunc a, const RatFunc& b);
RatFunc operator/(RatFunc a, const RatFunc& b);
RatFunc pow(const RatFunc& a, int n);

}  // namespace agt
