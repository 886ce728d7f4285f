#include "agt/poly.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace agt {

namespace {

struct VarTable {
  std::shared_mutex mu;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
};

VarTable& table() {
  static VarTable t;
  return t;
}

void trim(Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
  if (d.size() > m.size()) return false;
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r = m;
  for (size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  trim(r);
  return r;
}

bool mono_greater(const Monomial& a, const Monomial& b) { return mono_less(b, a); }

void canonicalize(std::vector<Poly::Term>& t) {
  std::sort(t.begin(), t.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return mono_greater(x.first, y.first); });
  std::vector<Poly::Term> out;
  out.reserve(t.size());
  for (auto& term : t) {
    if (!out.empty() && out.back().first == term.first) {
      out.back().second += term.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  t = std::move(out);
}

}  // namespace

int Vars::id(std::string_view name) {
  auto& t = table();
  {
    std::shared_lock lock(t.mu);
    auto it = t.ids.find(std::string(name));
    if (it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mu);
  auto it = t.ids.find(std::string(name));
  if (it != t.ids.end()) return it->second;
  int id = static_cast<int>(t.names.size());
  t.names.emplace_back(name);
  t.ids.emplace(std::string(name), id);
  return id;
}

std::string Vars::name(int id) {
  auto& t = table();
  std::shared_lock lock(t.mu);
  if (id < 0 || id >= static_cast<int>(t.names.size())) throw std::out_of_range("unknown variable id");
  return t.names[id];
}

int Vars::count() {
  auto& t = table();
  std::shared_lock lock(t.mu);
  return static_cast<int>(t.names.size());
}

int degree_of(const Monomial& m, int var) {
  return var < static_cast<int>(m.size()) ? m[var] : 0;
}

bool mono_less(const Monomial& a, const Monomial& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x < y;
  }
  return false;
}

Poly::Poly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::var(std::string_view name) { return var(Vars::id(name)); }

Poly Poly::var(int id, int power) {
  Poly p;
  Monomial m(id + 1, 0);
  m[id] = power;
  trim(m);
  p.terms_.emplace_back(std::move(m), Rational(1));
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) trim(t.first);
  canonicalize(terms);
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty());
}

Rational Poly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].second;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, degree_of(t.first, var));
  return d;
}

int Poly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (int e : t.first) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::vector<int> Poly::variables() const {
  std::vector<int> present;
  for (const auto& t : terms_) {
    if (t.first.size() > present.size()) present.resize(t.first.size(), 0);
    for (size_t i = 0; i < t.first.size(); ++i)
      if (t.first[i] != 0) present[i] = 1;
  }
  std::vector<int> out;
  for (size_t i = 0; i < present.size(); ++i)
    if (present[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool Poly::has_var(int var) const {
  for (const auto& t : terms_)
    if (degree_of(t.first, var) > 0) return true;
  return false;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && mono_greater(terms_[i].first, o.terms_[j].first))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || mono_greater(o.terms_[j].first, terms_[i].first)) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (sgn(c) != 0) out.emplace_back(std::move(terms_[i].first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return {};
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(mono_mul(t.first, m), t.second * c);
  for (auto& t : r.terms_) trim(t.first);
  return r;  // multiplication by a monomial preserves the order
}

std::map<int, Poly> Poly::coeffs_in(int var) const {
  std::map<int, std::vector<Term>> parts;
  for (const auto& t : terms_) {
    int d = degree_of(t.first, var);
    Monomial m = t.first;
    if (d > 0) {
      m[var] = 0;
      trim(m);
    }
    parts[d].emplace_back(std::move(m), t.second);
  }
  std::map<int, Poly> out;
  for (auto& [d, ts] : parts) out.emplace(d, Poly::from_terms(std::move(ts)));
  return out;
}

Poly Poly::from_coeffs(int var, const std::map<int, Poly>& c) {
  std::vector<Term> ts;
  for (const auto& [d, p] : c) {
    for (const auto& t : p.terms_) {
      Monomial m = t.first;
      if (d > 0) {
        if (static_cast<int>(m.size()) <= var) m.resize(var + 1, 0);
        m[var] += d;
      }
      ts.emplace_back(std::move(m), t.second);
    }
  }
  return from_terms(std::move(ts));
}

Rational Poly::evaluate(const std::map<int, Rational>& values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.second;
    for (size_t i = 0; i < t.first.size(); ++i) {
      if (t.first[i] == 0) continue;
      auto it = values.find(static_cast<int>(i));
      if (it == values.end()) throw std::invalid_argument("unassigned variable " + Vars::name(static_cast<int>(i)));
      Rational p = 1;
      for (int e = 0; e < t.first[i]; ++e) p *= it->second;
      v *= p;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::substitute(int var, const Poly& value) const {
  auto c = coeffs_in(var);
  Poly result;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    // Horner over the sparse degree list.
    auto next = std::next(it);
    result += it->second;
    int gap = it->first - (next == c.rend() ? 0 : next->first);
    result = result * pow(value, static_cast<unsigned>(gap));
  }
  return result;
}

bool operator<(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first) return mono_less(a.terms_[i].first, b.terms_[i].first);
    if (a.terms_[i].second != b.terms_[i].second) return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1) && !m.empty();
    if (!unit) os << a.get_str();
    bool star = !unit;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (star) os << "*";
      os << Vars::name(static_cast<int>(i));
      if (m[i] != 1) os << "^" << m[i];
      star = true;
    }
  }
  return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.constant_value());
  if (b.is_constant()) return a.scaled(b.constant_value());
  if (b.is_monomial()) return a.times_monomial(b.leading().first, b.leading().second);
  if (a.is_monomial()) return b.times_monomial(a.leading().first, a.leading().second);
  std::vector<Poly::Term> ts;
  ts.reserve(a.terms().size() * b.terms().size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) ts.emplace_back(mono_mul(x.first, y.first), x.second * y.second);
  return Poly::from_terms(std::move(ts));
}

Poly pow(const Poly& a, unsigned n) {
  Poly result(1);
  Poly base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool try_divide(const Poly& a, const Poly& b, Poly& q) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) {
    q = a.scaled(1 / b.constant_value());
    return true;
  }
  std::vector<Poly::Term> quot;
  Poly r = a;
  const auto& [lm, lc] = b.leading();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading();
    if (!mono_divides(lm, rm)) return false;
    Monomial m = mono_div(rm, lm);
    Rational c = rc / lc;
    quot.emplace_back(m, c);
    r -= b.times_monomial(m, c);
  }
  q = Poly::from_terms(std::move(quot));
  return true;
}

Poly divexact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(1 / p.leading().second);
}

namespace {

Poly gcd_rec(const Poly& a, const Poly& b);

Poly monomial_gcd(const Poly& mono, const Poly& other) {
  Monomial g = mono.leading().first;
  for (const auto& t : other.terms()) {
    if (g.size() > t.first.size()) g.resize(t.first.size());
    for (size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], t.first[i]);
  }
  trim(g);
  return Poly::from_terms({{g, Rational(1)}});
}

// gcd of the coefficients of p viewed as a polynomial in var.
Poly content_in(const Poly& p, int var) {
  auto c = p.coeffs_in(var);
  // Start from the sparsest coefficient to reach 1 early.
  std::vector<const Poly*> cs;
  for (const auto& kv : c) cs.push_back(&kv.second);
  std::sort(cs.begin(), cs.end(), [](const Poly* x, const Poly* y) { return x->terms().size() < y->terms().size(); });
  Poly g = monic(*cs[0]);
  for (size_t i = 1; i < cs.size() && !g.is_constant(); ++i) g = gcd_rec(g, *cs[i]);
  if (g.is_constant()) return Poly(1);
  return g;
}

Poly lead_coeff_in(const Poly& p, int var) { return p.coeffs_in(var).rbegin()->second; }

Poly pseudo_remainder(const Poly& a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lcb = lead_coeff_in(b, var);
  Poly r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(var);
    if (dr < db) break;
    Poly lcr = lead_coeff_in(r, var);
    Poly shift = lcr * Poly::var(var, dr - db);
    r = lcb * r - shift * b;
  }
  return r;
}

Poly primitive_part(const Poly& p, int var) {
  Poly c = content_in(p, var);
  Poly r = c.is_constant() ? p : divexact(p, c);
  return monic(r);
}

Poly gcd_rec(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a == b) return monic(a);

  auto va = a.variables();
  auto vb = b.variables();
  for (int v : va)
    if (!std::binary_search(vb.begin(), vb.end(), v)) return gcd_rec(content_in(a, v), b);
  for (int v : vb)
    if (!std::binary_search(va.begin(), va.end(), v)) return gcd_rec(a, content_in(b, v));

  Poly q;
  if (a.terms().size() >= b.terms().size()) {
    if (try_divide(a, b, q)) return monic(b);
  } else {
    if (try_divide(b, a, q)) return monic(a);
  }

  // Main variable: the shared variable of smallest degree.
  int var = va[0];
  int best = std::max(a.degree_in(var), b.degree_in(var));
  for (int v : va) {
    int d = std::max(a.degree_in(v), b.degree_in(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  Poly ca = content_in(a, var);
  Poly cb = content_in(b, var);
  Poly g_content = gcd_rec(ca, cb);
  Poly r0 = ca.is_constant() ? a : divexact(a, ca);
  Poly r1 = cb.is_constant() ? b : divexact(b, cb);
  if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
  r0 = monic(r0);
  r1 = monic(r1);
  while (true) {
    Poly r = pseudo_remainder(r0, r1, var);
    if (r.is_zero()) break;
    if (r.degree_in(var) == 0) {
      r1 = Poly(1);
      break;
    }
    r0 = std::move(r1);
    r1 = primitive_part(r, var);
  }
  Poly g = r1.is_constant() ? Poly(1) : primitive_part(r1, var);
  return monic(g_content * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) { return gcd_rec(a, b); }

}  // namespace agt
