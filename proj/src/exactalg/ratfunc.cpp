#include "agt/ratfunc.hpp"

#include "agt/errors.hpp"

namespace agt {

namespace {

std::map<int, Rational> to_ids(const ParamAssignment& a) {
  std::map<int, Rational> out;
  for (const auto& [name, value] : a) out.emplace(Vars::id(name), value);
  return out;
}

}  // namespace

RatFunc RatFunc::make_reduced(Poly num, Poly den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  Rational lc = den.leading().second;
  if (lc != 1) {
    Rational inv = 1 / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatFunc(std::move(num), std::move(den), Reduced{});
}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  Poly g = gcd(num, den);
  if (g.is_constant()) {
    *this = make_reduced(num, den);
  } else {
    *this = make_reduced(divexact(num, g), divexact(den, g));
  }
}

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.constant_value();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    // Both denominators are 1 after normalization.
    num_ += o.num_;
    if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  if (den_ == o.den_) {
    Poly n = num_ + o.num_;
    if (n.is_zero()) return *this = RatFunc();
    Poly g = gcd(n, den_);
    if (g.is_constant()) return *this = make_reduced(std::move(n), den_);
    return *this = make_reduced(divexact(n, g), divexact(den_, g));
  }
  // Henrici: only factors of gcd(den, o.den) can cancel.
  Poly g = gcd(den_, o.den_);
  if (g.is_constant()) {
    Poly n = num_ * o.den_ + o.num_ * den_;
    return *this = make_reduced(std::move(n), den_ * o.den_);
  }
  Poly d1 = divexact(den_, g);
  Poly d2 = divexact(o.den_, g);
  Poly n = num_ * d2 + o.num_ * d1;
  if (n.is_zero()) return *this = RatFunc();
  Poly h = gcd(n, g);
  if (!h.is_constant()) {
    n = divexact(n, h);
    g = divexact(g, h);
  }
  return *this = make_reduced(std::move(n), d1 * d2 * g);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (o.is_constant()) {
    num_ = num_.scaled(o.constant_value());
    return *this;
  }
  if (is_constant()) {
    Rational c = constant_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  Poly g1 = gcd(num_, o.den_);
  Poly g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_constant() ? num_ : divexact(num_, g1);
  Poly d2 = g1.is_constant() ? o.den_ : divexact(o.den_, g1);
  Poly n2 = g2.is_constant() ? o.num_ : divexact(o.num_, g2);
  Poly d1 = g2.is_constant() ? den_ : divexact(den_, g2);
  return *this = make_reduced(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  return make_reduced(den_, num_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

Rational RatFunc::evaluate(const ParamAssignment& a) const {
  auto ids = to_ids(a);
  Rational d = den_.evaluate(ids);
  if (sgn(d) == 0) throw ZeroDenominator("denominator " + den_.to_string() + " vanishes at the sample point");
  return num_.evaluate(ids) / d;
}

RatFunc RatFunc::substitute(const ParamAssignment& a) const {
  RatFunc r = *this;
  for (const auto& [name, value] : a) r = r.substitute(Vars::id(name), RatFunc(value));
  return r;
}

RatFunc RatFunc::substitute(int var, const RatFunc& value) const {
  if (!depends_on(var)) return *this;
  auto sub = [&](const Poly& p) {
    auto c = p.coeffs_in(var);
    RatFunc acc;
    for (const auto& [d, coeff] : c) acc += RatFunc(coeff) * pow(value, d);
    return acc;
  };
  RatFunc n = sub(num_);
  RatFunc d = sub(den_);
  if (d.is_zero()) throw ZeroDenominator("denominator vanishes after substitution");
  return n / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  std::string n = num_.to_string(), d = den_.to_string();
  if (num_.terms().size() > 1 || n.find('/') != std::string::npos) n = "(" + n + ")";
  if (den_.terms().size() > 1 || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

RatFunc pow(const RatFunc& a, int n) {
  if (n < 0) return pow(a.inverse(), -n);
  RatFunc result(1);
  RatFunc base = a;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

}  // namespace agt
