#include "agt/ale.hpp"

#include <algorithm>
#include <functional>

#include "agt/errors.hpp"

namespace agt {

Rational cartan(int k, int i, int j) {
  if (i < 1 || j < 1 || i > k - 1 || j > k - 1) return 0;
  if (i == j) return 2;
  if (i - j == 1 || j - i == 1) return -1;
  return 0;
}

Rational cartan_inverse(int k, int i, int j) {
  if (i < 1 || j < 1 || i > k - 1 || j > k - 1) return 0;
  if (i > j) std::swap(i, j);
  return ratio(i * (k - j), k);
}

PatchWeights patch_weights(int k, int i, const RatFunc& e1, const RatFunc& e2) {
  if (i < 1 || i > k) throw std::out_of_range("patch index out of range");
  return {RatFunc(k - i + 1) * e1 - RatFunc(i - 1) * e2, RatFunc(-(k - i)) * e1 + RatFunc(i) * e2};
}

std::string Charge::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s + ")";
}

Charge make_charge(const std::vector<long>& u, int k) {
  if (k < 2 || static_cast<int>(u.size()) != k - 1) throw std::invalid_argument("charge needs k-1 components");
  Charge c;
  c.k = k;
  c.u = u;
  long s = 0;
  for (int i = 1; i < k; ++i) s += i * u[i - 1];
  c.j = static_cast<int>(((s % k) + k) % k);
  c.v.assign(k - 1, Rational(0));
  for (int i = 1; i < k; ++i)
    for (int l = 1; l < k; ++l) c.v[i - 1] += cartan_inverse(k, i, l) * u[l - 1];
  c.delta = quadratic_Cinv(k, u, u) / 2;
  c.gamma = c.v;
  for (int i = 1; i < k; ++i) c.gamma[i - 1] -= cartan_inverse(k, i, c.j);
  for (const auto& g : c.gamma)
    if (g.get_den() != 1) throw InconsistentCharge("charge root-lattice part is not integral");
  return c;
}

int holonomy_of(const std::vector<Rational>& v, int k) {
  if (static_cast<int>(v.size()) != k - 1) throw InconsistentCharge("wrong number of components");
  for (const auto& x : v)
    if (k % x.get_den() != 0) throw InconsistentCharge("component not in (1/k)Z");
  auto kv = [&](int l) {
    Rational t = v[l - 1] * k;
    return t.get_num().get_si();
  };
  int j = static_cast<int>(((kv(k - 1) % k) + k) % k);
  for (int l = 1; l < k; ++l) {
    long lhs = ((kv(l) % k) + k) % k;
    long rhs = (((-static_cast<long>(l) * j) % k) + k) % k;
    if (lhs != rhs) throw InconsistentCharge("k v_l != -l j mod k");
  }
  return j;
}

std::vector<long> charge_from_v(const std::vector<Rational>& v, int k) {
  std::vector<long> u(k - 1, 0);
  for (int i = 1; i < k; ++i) {
    Rational s = 0;
    for (int l = 1; l < k; ++l) s += cartan(k, i, l) * v[l - 1];
    if (s.get_den() != 1) throw InconsistentCharge("C v is not integral");
    u[i - 1] = s.get_num().get_si();
  }
  return u;
}

Rational quadratic_C(int k, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (int i = 1; i < k; ++i)
    for (int l = 1; l < k; ++l) {
      Rational c = cartan(k, i, l);
      if (c != 0) s += a[i - 1] * c * b[l - 1];
    }
  return s;
}

Rational quadratic_Cinv(int k, const std::vector<long>& a, const std::vector<long>& b) {
  Rational s = 0;
  for (int i = 1; i < k; ++i)
    for (int l = 1; l < k; ++l) s += cartan_inverse(k, i, l) * a[i - 1] * b[l - 1];
  return s;
}

std::vector<Charge> enumerate_charges(int k, int j, const Rational& delta_max, bool conformal) {
  std::vector<Charge> out;
  if (delta_max < 0) return out;
  // The largest eigenvalue of C is below 4, so u.C^{-1}u >= |u|^2/4 and
  // every component satisfies u_i^2 <= 8 delta_max.
  Rational bound2 = delta_max * 8;
  mpz_class fl = bound2.get_num() / bound2.get_den();
  long b = static_cast<long>(mpz_class(sqrt(fl)).get_si());
  std::vector<long> u(k - 1, -b);
  Rational target = ratio(j * (k - j), k);
  std::function<void(int)> rec = [&](int i) {
    if (i == k - 1) {
      Charge c = make_charge(u, k);
      if (c.j != j || c.delta > delta_max) return;
      if (conformal && c.delta * 2 != target) return;
      out.push_back(std::move(c));
      return;
    }
    for (long x = -b; x <= b; ++x) {
      u[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const Charge& a, const Charge& c) {
    if (a.delta != c.delta) return a.delta < c.delta;
    return a.u < c.u;
  });
  return out;
}

Rational conformal_degree(int k, const std::vector<Rational>& v, const std::vector<std::vector<Rational>>& out,
                          const std::vector<std::vector<Rational>>& in) {
  auto jk = [&](const std::vector<Rational>& w) {
    int jj = holonomy_of(w, k);
    return Rational(jj * (k - jj));
  };
  auto diff = [](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
  };
  long valence = static_cast<long>(out.size() + in.size());
  Rational d = jk(v) * (2 - valence) / (2 * k);
  Rational edges = 0;
  for (const auto& w : out) edges += jk(diff(w, v));
  for (const auto& w : in) edges += jk(diff(v, w));
  d += edges / (4 * k);
  d -= quadratic_C(k, v, v);
  for (const auto& w : out) d += quadratic_C(k, v, w) / 2;
  for (const auto& w : in) d += quadratic_C(k, v, w) / 2;
  return d;
}

SeriesRingPtr ale_ring(int k, const std::string& q) {
  std::vector<std::string> xi;
  for (int i = 1; i < k; ++i) xi.push_back("xi" + std::to_string(i));
  return make_ring({q}, xi);
}

QSeries character_chi(int k, int j, const Rational& order, bool conformal) {
  auto ring = ale_ring(k);
  Rational shift = ratio(k - 1, 24);
  Rational inner = order + shift;
  QSeries theta(ring, inner);
  for (const auto& c : enumerate_charges(k, j, inner, conformal)) {
    Exponents e{c.delta};
    for (const auto& x : c.v) e.push_back(x);
    theta.add_term(e, RatFunc(1));
  }
  Exponents q1(ring->size(), Rational(0));
  q1[0] = 1;
  QSeries euler = euler_power(ring, inner, q1, RatFunc(-(k - 1)));
  Exponents s(ring->size(), Rational(0));
  s[0] = -shift;
  return (theta * euler).truncated(inner).shifted(s);
}

}  // namespace agt
