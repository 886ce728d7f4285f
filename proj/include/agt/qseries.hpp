#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "agt/ratfunc.hpp"

namespace agt {

// Exponents of a series monomial: graded variables first, then ungraded ones.
using Exponents = std::vector<Rational>;

// Variable layout of a series ring. Truncation counts the total exponent of
// the graded variables only (e.g. q or q_0..q_r); ungraded variables such as
// the fugacities xi_i carry arbitrary rational exponents.
struct SeriesRing {
  std::vector<std::string> graded;
  std::vector<std::string> ungraded;

  size_t size() const { return graded.size() + ungraded.size(); }
  int index(const std::string& name) const;
  friend bool operator==(const SeriesRing& a, const SeriesRing& b) {
    return a.graded == b.graded && a.ungraded == b.ungraded;
  }
};

using SeriesRingPtr = std::shared_ptr<const SeriesRing>;

SeriesRingPtr make_ring(std::vector<std::string> graded, std::vector<std::string> ungraded = {});

// Truncated series with exact rational exponents and RatFunc coefficients.
// Every stored exponent has graded degree at most order(); coefficients below
// that bound are exact.
class QSeries {
 public:
  using TermMap = std::map<Exponents, RatFunc>;

  QSeries(SeriesRingPtr ring, Rational order);
  static QSeries constant(SeriesRingPtr ring, Rational order, const RatFunc& c);
  static QSeries monomial(SeriesRingPtr ring, Rational order, const Exponents& e, const RatFunc& c);

  const SeriesRingPtr& ring() const { return ring_; }
  const Rational& order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational degree(const Exponents& e) const;
  // Smallest graded degree present; order() for the zero series.
  Rational min_degree() const;
  RatFunc coefficient(const Exponents& e) const;
  // Adds c * x^e, dropping it when beyond the truncation order.
  void add_term(const Exponents& e, const RatFunc& c);

  QSeries truncated(const Rational& order) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries scaled(const RatFunc& c) const;
  // Multiplies by the monomial x^e.
  QSeries shifted(const Exponents& e) const;
  // Applies f to every coefficient.
  template <class F>
  QSeries map_coefficients(F&& f) const {
    QSeries out(ring_, order_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }
  QSeries evaluate(const ParamAssignment& a) const;

  friend bool operator==(const QSeries& a, const QSeries& b);
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

 private:
  SeriesRingPtr ring_;
  Rational order_;
  TermMap terms_;
};

QSeries operator+(QSeries a, const QSeries& b);
QSeries operator-(QSeries a, const QSeries& b);
QSeries operator*(const QSeries& a, const QSeries& b);

enum class ComposeKind { Exp, Log, Pow };

// exp requires a strictly positive minimal degree; log and pow require a
// constant term equal to 1. Violations raise BadLeadingTerm.
QSeries series_exp(const QSeries& f);
QSeries series_log(const QSeries& f);
QSeries series_pow(const QSeries& f, const RatFunc& a);
QSeries series_compose(const QSeries& f, ComposeKind kind, const RatFunc& a = RatFunc(1));

// q^{1/24} prod_{n>=1} (1 - q^n) in the single graded variable `var`.
QSeries eta_series(const Rational& order, const std::string& var = "q");
// prod_{n>=1} (1 - x^{n e})^{a} where x^e is a graded monomial of the ring.
QSeries euler_power(SeriesRingPtr ring, const Rational& order, const Exponents& e, const RatFunc& a);

}  // namespace agt
