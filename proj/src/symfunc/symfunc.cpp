#include "agt/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>

#include "agt/errors.hpp"

namespace agt {

const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Monomial:
      return "monomial";
    case Basis::PowerSum:
      return "power-sum";
    case Basis::Jack:
      return "jack";
  }
  return "?";
}

SymVector SymVector::single(int n, Basis b, const Partition& lambda, const RatFunc& c) {
  SymVector v(n, b);
  v.add(lambda, c);
  return v;
}

RatFunc SymVector::coefficient(const Partition& lambda) const {
  auto it = coeffs.find(lambda);
  return it == coeffs.end() ? RatFunc() : it->second;
}

void SymVector::add(const Partition& lambda, const RatFunc& c) {
  if (lambda.weight() > N) throw DegreeOverflow("partition " + lambda.to_string() + " exceeds degree bound");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs.emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
  }
}

SymVector& SymVector::operator+=(const SymVector& o) {
  if (o.basis != basis) throw std::invalid_argument("adding symmetric functions in different bases");
  N = std::max(N, o.N);
  for (const auto& [l, c] : o.coeffs) add(l, c);
  return *this;
}

SymVector& SymVector::operator-=(const SymVector& o) { return *this += o.scaled(RatFunc(-1)); }

SymVector SymVector::scaled(const RatFunc& c) const {
  SymVector out(N, basis);
  if (c.is_zero()) return out;
  for (const auto& [l, x] : coeffs) out.coeffs.emplace(l, x * c);
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Number of ways to distribute the parts of mu into the rows of lambda so
// that row j receives total lambda_j.
Rational count_fillings(const Partition& mu, const Partition& lambda) {
  std::vector<int> room(lambda.parts());
  const auto& parts = mu.parts();
  std::function<long(size_t)> rec = [&](size_t i) -> long {
    if (i == parts.size()) {
      for (int r : room)
        if (r != 0) return 0;
      return 1;
    }
    long total = 0;
    for (auto& r : room) {
      if (r < parts[i]) continue;
      r -= parts[i];
      total += rec(i + 1);
      r += parts[i];
    }
    return total;
  };
  return Rational(rec(0));
}

Matrix invert(Matrix a) {
  size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw SingularParameter("singular basis change matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

struct BasisCache {
  std::mutex mu;
  std::map<int, std::unique_ptr<Matrix>> p_to_m;
  std::map<int, std::unique_ptr<Matrix>> m_to_p;
};

BasisCache& cache() {
  static BasisCache c;
  return c;
}

size_t index_of(const std::vector<Partition>& list, const Partition& p) {
  auto it = std::find(list.begin(), list.end(), p);
  return static_cast<size_t>(it - list.begin());
}

const std::vector<Partition>& partitions_cached(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<Partition>>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[n];
  if (!slot) slot = std::make_unique<std::vector<Partition>>(partitions_of(n));
  return *slot;
}

}  // namespace

const Matrix& power_to_monomial_matrix(int n) {
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& slot = c.p_to_m[n];
  if (!slot) {
    const auto& parts = partitions_cached(n);
    auto m = std::make_unique<Matrix>(parts.size(), std::vector<Rational>(parts.size(), Rational(0)));
    for (size_t i = 0; i < parts.size(); ++i)
      for (size_t j = 0; j < parts.size(); ++j) (*m)[i][j] = count_fillings(parts[i], parts[j]);
    slot = std::move(m);
  }
  return *slot;
}

const Matrix& monomial_to_power_matrix(int n) {
  const Matrix& pm = power_to_monomial_matrix(n);
  auto& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  auto& slot = c.m_to_p[n];
  if (!slot) slot = std::make_unique<Matrix>(invert(pm));
  return *slot;
}

namespace {

SymVector linear_change(const SymVector& v, Basis target, const Matrix& (*matrix)(int)) {
  SymVector out(v.N, target);
  for (const auto& [lambda, c] : v.coeffs) {
    int n = lambda.weight();
    const auto& parts = partitions_cached(n);
    const Matrix& m = matrix(n);
    size_t i = index_of(parts, lambda);
    for (size_t j = 0; j < parts.size(); ++j)
      if (m[i][j] != 0) out.add(parts[j], c * RatFunc(m[i][j]));
  }
  return out;
}

void check_table(const SymVector& v, const JackTable* table) {
  if (table == nullptr) throw std::invalid_argument("Jack basis conversion needs a JackTable");
  for (const auto& kv : v.coeffs)
    if (kv.first.weight() > table->N()) throw DegreeOverflow("Jack table degree too small");
}

SymVector jack_to_monomial(const SymVector& v, const JackTable* table) {
  check_table(v, table);
  SymVector out(v.N, Basis::Monomial);
  for (const auto& [lambda, c] : v.coeffs)
    for (const auto& [mu, x] : table->expansion(lambda)) out.add(mu, c * x);
  return out;
}

SymVector monomial_to_jack(const SymVector& v, const JackTable* table) {
  check_table(v, table);
  SymVector rest = v;
  SymVector out(v.N, Basis::Jack);
  // Peel off leading terms, largest partition first within each degree.
  while (!rest.coeffs.empty()) {
    auto it = std::prev(rest.coeffs.end());
    Partition lead = it->first;
    int n = lead.weight();
    for (auto jt = rest.coeffs.begin(); jt != rest.coeffs.end(); ++jt)
      if (jt->first.weight() == n && jt->first.parts() > lead.parts()) lead = jt->first;
    RatFunc c = rest.coefficient(lead);
    out.add(lead, c);
    for (const auto& [mu, x] : table->expansion(lead)) rest.add(mu, -(c * x));
  }
  return out;
}

}  // namespace

SymVector basis_convert(const SymVector& v, Basis target, const JackTable* table) {
  if (v.basis == target) return v;
  for (const auto& kv : v.coeffs)
    if (kv.first.weight() > v.N) throw DegreeOverflow("coefficient above the degree bound");
  if (v.basis == Basis::Jack) return basis_convert(jack_to_monomial(v, table), target, table);
  if (target == Basis::Jack) {
    SymVector m = v.basis == Basis::Monomial ? v : basis_convert(v, Basis::Monomial);
    return monomial_to_jack(m, table);
  }
  if (v.basis == Basis::PowerSum) return linear_change(v, Basis::Monomial, &power_to_monomial_matrix);
  return linear_change(v, Basis::PowerSum, &monomial_to_power_matrix);
}

RatFunc inner_product(const SymVector& f, const SymVector& g, const RatFunc& beta, const JackTable* table) {
  SymVector pf = basis_convert(f, Basis::PowerSum, table);
  SymVector pg = basis_convert(g, Basis::PowerSum, table);
  RatFunc binv = beta.inverse();
  RatFunc total;
  for (const auto& [lambda, c] : pf.coeffs) {
    auto it = pg.coeffs.find(lambda);
    if (it == pg.coeffs.end()) continue;
    total += c * it->second * RatFunc(Rational(lambda.z())) * pow(binv, lambda.length());
  }
  return total;
}

JackTable::JackTable(int N, RatFunc beta) : N_(N), beta_(std::move(beta)) {
  RatFunc binv = beta_.inverse();
  for (int n = 0; n <= N_; ++n) {
    const auto& desc = partitions_cached(n);
    std::vector<Partition> parts(desc.rbegin(), desc.rend());  // increasing lexicographic
    size_t d = parts.size();
    const Matrix& mp = monomial_to_power_matrix(n);
    // Gram matrix of the monomial basis, indexed like `desc`.
    std::vector<std::vector<RatFunc>> gram(d, std::vector<RatFunc>(d));
    std::vector<RatFunc> weight(d);
    for (size_t r = 0; r < d; ++r) weight[r] = RatFunc(Rational(desc[r].z())) * pow(binv, desc[r].length());
    for (size_t a = 0; a < d; ++a)
      for (size_t b = a; b < d; ++b) {
        RatFunc s;
        for (size_t r = 0; r < d; ++r)
          if (mp[a][r] != 0 && mp[b][r] != 0) s += RatFunc(mp[a][r] * mp[b][r]) * weight[r];
        gram[a][b] = s;
        gram[b][a] = s;
      }
    auto pos = [&](const Partition& p) { return index_of(desc, p); };
    std::vector<std::vector<RatFunc>> jack;  // coefficient vectors over `desc`
    std::vector<RatFunc> norms;
    for (size_t i = 0; i < d; ++i) {
      std::vector<RatFunc> vec(d);
      size_t li = pos(parts[i]);
      vec[li] = RatFunc(1);
      for (size_t e = 0; e < i; ++e) {
        RatFunc pairing;
        for (size_t s = 0; s < d; ++s)
          if (!jack[e][s].is_zero()) pairing += gram[li][s] * jack[e][s];
        if (pairing.is_zero()) continue;
        RatFunc f = pairing / norms[e];
        for (size_t s = 0; s < d; ++s)
          if (!jack[e][s].is_zero()) vec[s] -= f * jack[e][s];
      }
      RatFunc nrm;
      for (size_t s = 0; s < d; ++s)
        if (!vec[s].is_zero()) nrm += gram[li][s] * vec[s];
      if (nrm.is_zero()) throw SingularParameter("vanishing Jack norm for " + parts[i].to_string());
      std::map<Partition, RatFunc> exp;
      for (size_t s = 0; s < d; ++s)
        if (!vec[s].is_zero()) exp.emplace(desc[s], vec[s]);
      expansion_.emplace(parts[i], std::move(exp));
      norm_.emplace(parts[i], nrm);
      jack.push_back(std::move(vec));
      norms.push_back(nrm);
    }
  }
}

const std::map<Partition, RatFunc>& JackTable::expansion(const Partition& lambda) const {
  auto it = expansion_.find(lambda);
  if (it == expansion_.end()) throw DegreeOverflow("partition beyond the Jack table");
  return it->second;
}

const RatFunc& JackTable::norm(const Partition& lambda) const {
  auto it = norm_.find(lambda);
  if (it == norm_.end()) throw DegreeOverflow("partition beyond the Jack table");
  return it->second;
}

SymVector JackTable::jack(const Partition& lambda) const {
  SymVector v(N_, Basis::Monomial);
  for (const auto& [mu, c] : expansion(lambda)) v.add(mu, c);
  return v;
}

RatFunc jack_norm_formula(const Partition& lambda, const RatFunc& beta) {
  RatFunc num(1), den(1);
  for (const auto& s : lambda.cells()) {
    int a = lambda.arm(s.row, s.col), l = lambda.leg(s.row, s.col);
    num *= beta * RatFunc(l) + RatFunc(a + 1);
    den *= beta * RatFunc(l + 1) + RatFunc(a);
  }
  if (den.is_zero()) throw SingularParameter("vanishing norm denominator");
  return num / den;
}

SymVector p1_power_in_jack(int n, const RatFunc& beta, int N) {
  if (n > N) throw DegreeOverflow("p1 power above the degree bound");
  SymVector out(N, Basis::Jack);
  Rational fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  for (const auto& lambda : partitions_of(n)) {
    RatFunc den(1);
    for (const auto& s : lambda.cells())
      den *= beta * RatFunc(lambda.leg(s.row, s.col)) + RatFunc(lambda.arm(s.row, s.col) + 1);
    out.add(lambda, RatFunc(fact) / den);
  }
  return out;
}

SymVector p1_power(int n, int N) {
  return SymVector::single(N, Basis::PowerSum, Partition(std::vector<int>(n, 1)));
}

}  // namespace agt
