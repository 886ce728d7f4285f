#include "agt/qseries.hpp"

#include <algorithm>
#include <stdexcept>

#include "agt/errors.hpp"

namespace agt {

int SeriesRing::index(const std::string& name) const {
  for (size_t i = 0; i < graded.size(); ++i)
    if (graded[i] == name) return static_cast<int>(i);
  for (size_t i = 0; i < ungraded.size(); ++i)
    if (ungraded[i] == name) return static_cast<int>(graded.size() + i);
  throw std::invalid_argument("series variable " + name + " not in ring");
}

SeriesRingPtr make_ring(std::vector<std::string> graded, std::vector<std::string> ungraded) {
  return std::make_shared<const SeriesRing>(SeriesRing{std::move(graded), std::move(ungraded)});
}

QSeries::QSeries(SeriesRingPtr ring, Rational order) : ring_(std::move(ring)), order_(std::move(order)) {}

QSeries QSeries::constant(SeriesRingPtr ring, Rational order, const RatFunc& c) {
  Exponents zero(ring->size(), Rational(0));
  return monomial(std::move(ring), std::move(order), zero, c);
}

QSeries QSeries::monomial(SeriesRingPtr ring, Rational order, const Exponents& e, const RatFunc& c) {
  QSeries s(std::move(ring), std::move(order));
  if (e.size() != s.ring_->size()) throw std::invalid_argument("exponent vector does not match the series ring");
  s.add_term(e, c);
  return s;
}

Rational QSeries::degree(const Exponents& e) const {
  Rational d = 0;
  for (size_t i = 0; i < ring_->graded.size(); ++i) d += e[i];
  return d;
}

Rational QSeries::min_degree() const {
  if (terms_.empty()) return order_;
  Rational m = degree(terms_.begin()->first);
  for (const auto& kv : terms_) m = std::min(m, degree(kv.first));
  return m;
}

RatFunc QSeries::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatFunc() : it->second;
}

void QSeries::add_term(const Exponents& e, const RatFunc& c) {
  if (c.is_zero() || degree(e) > order_) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QSeries QSeries::truncated(const Rational& order) const {
  QSeries out(ring_, std::min(order, order_));
  for (const auto& [e, c] : terms_)
    if (degree(e) <= out.order_) out.terms_.emplace(e, c);
  return out;
}

QSeries QSeries::operator-() const {
  QSeries out(ring_, order_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("series over different rings");
  if (o.order_ < order_) *this = truncated(o.order_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::scaled(const RatFunc& c) const {
  QSeries out(ring_, order_);
  if (c.is_zero()) return out;
  for (const auto& [e, x] : terms_) out.terms_.emplace(e, x * c);
  return out;
}

QSeries QSeries::shifted(const Exponents& s) const {
  Rational ds = degree(s);
  QSeries out(ring_, order_ + ds);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

QSeries QSeries::evaluate(const ParamAssignment& a) const {
  QSeries out(ring_, order_);
  for (const auto& [e, c] : terms_) out.add_term(e, RatFunc(c.evaluate(a)));
  return out;
}

bool operator==(const QSeries& a, const QSeries& b) {
  return *a.ring_ == *b.ring_ && a.order_ == b.order_ && a.terms_ == b.terms_;
}

QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
  if (!(*a.ring() == *b.ring())) throw std::invalid_argument("series over different rings");
  Rational ma = a.min_degree();
  Rational mb = b.min_degree();
  Rational order = std::min(a.order() + mb, b.order() + ma);
  QSeries out(a.ring(), order);
  std::map<Exponents, RatFunc> acc;
  for (const auto& [ea, ca] : a.terms()) {
    Rational da = a.degree(ea);
    if (da + mb > order) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + b.degree(eb) > order) continue;
      Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

namespace {

Exponents zero_exponents(const QSeries& f) { return Exponents(f.ring()->size(), Rational(0)); }

// Splits f = 1 + g, requiring the constant term to be exactly 1 and every
// other term to have positive graded degree.
QSeries unit_tail(const QSeries& f) {
  Exponents z = zero_exponents(f);
  if (f.coefficient(z) != RatFunc(1)) throw BadLeadingTerm("series must have constant term 1");
  QSeries g = f - QSeries::constant(f.ring(), f.order(), RatFunc(1));
  if (!g.is_zero() && g.min_degree() <= 0) throw BadLeadingTerm("series has non-constant terms of degree <= 0");
  return g;
}

// sum_n c_n g^n for a tail g of positive minimal degree.
template <class Coef>
QSeries power_sum(const QSeries& g, Coef coef, int first) {
  QSeries result(g.ring(), g.order());
  if (g.is_zero()) {
    if (first == 0) result.add_term(zero_exponents(g), coef(0));
    return result;
  }
  Rational m = g.min_degree();
  QSeries power = QSeries::constant(g.ring(), g.order(), RatFunc(1));
  for (int n = 0;; ++n) {
    if (n > 0) power = (power * g).truncated(g.order());
    if (n * m > g.order()) break;
    if (n >= first) {
      RatFunc c = coef(n);
      if (!c.is_zero()) result += power.scaled(c);
    }
  }
  return result;
}

}  // namespace

QSeries series_exp(const QSeries& f) {
  if (!f.is_zero() && f.min_degree() <= 0) throw BadLeadingTerm("exp requires a strictly positive minimal exponent");
  Rational fact = 1;
  std::vector<Rational> inv_fact{Rational(1)};
  return power_sum(
      f,
      [&](int n) {
        while (static_cast<int>(inv_fact.size()) <= n) {
          fact *= static_cast<long>(inv_fact.size());
          inv_fact.push_back(1 / fact);
        }
        return RatFunc(inv_fact[n]);
      },
      0);
}

QSeries series_log(const QSeries& f) {
  QSeries g = unit_tail(f);
  return power_sum(
      g,
      [](int n) {
        if (n == 0) return RatFunc();
        return RatFunc(ratio((n % 2 == 1) ? 1 : -1, n));
      },
      1);
}

QSeries series_pow(const QSeries& f, const RatFunc& a) {
  QSeries g = unit_tail(f);
  RatFunc binom(1);
  int computed = 0;
  return power_sum(
      g,
      [&](int n) {
        while (computed < n) {
          binom = binom * (a - RatFunc(computed)) * RatFunc(ratio(1, computed + 1));
          ++computed;
        }
        return binom;
      },
      0);
}

QSeries series_compose(const QSeries& f, ComposeKind kind, const RatFunc& a) {
  switch (kind) {
    case ComposeKind::Exp:
      return series_exp(f);
    case ComposeKind::Log:
      return series_log(f);
    case ComposeKind::Pow:
      return series_pow(f, a);
  }
  throw std::invalid_argument("unknown composition");
}

QSeries eta_series(const Rational& order, const std::string& var) {
  auto ring = make_ring({var});
  QSeries out(ring, order);
  Rational shift = ratio(1, 24);
  // Euler's pentagonal number theorem.
  for (long k = 0; shift + ratio(k * (3 * k - 1), 2) <= order; ++k) {
    RatFunc sign(k % 2 == 0 ? 1 : -1);
    out.add_term({shift + ratio(k * (3 * k - 1), 2)}, sign);
    if (k > 0) out.add_term({shift + ratio(k * (3 * k + 1), 2)}, sign);
  }
  return out;
}

QSeries euler_power(SeriesRingPtr ring, const Rational& order, const Exponents& e, const RatFunc& a) {
  QSeries log_sum(ring, order);
  QSeries probe(ring, order);
  Rational d = probe.degree(e);
  if (d <= 0) throw BadLeadingTerm("euler_power needs a monomial of positive degree");
  for (long n = 1; d * n <= order; ++n) {
    long sigma = 0;
    for (long m = 1; m <= n; ++m)
      if (n % m == 0) sigma += m;
    Exponents en = e;
    for (auto& x : en) x *= n;
    log_sum.add_term(en, RatFunc(ratio(-sigma, n)) * a);
  }
  return series_exp(log_sum);
}

}  // namespace agt
