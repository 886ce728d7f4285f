#include "agt/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace agt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> t(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int b = 0; b < p; ++b) ++t[b];
  return Partition(std::move(t));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

mpz_class Partition::z() const {
  mpz_class z = 1;
  int prev = -1;
  for (int p : parts_) {
    if (p == prev) continue;
    prev = p;
    int m = multiplicity(p);
    for (int r = 0; r < m; ++r) z *= p;
    for (int r = 2; r <= m; ++r) z *= r;
  }
  return z;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int a = 1; a <= length(); ++a)
    for (int b = 1; b <= parts_[a - 1]; ++b) out.push_back({a, b});
  return out;
}

int Partition::leg(int a, int b) const {
  int col = 0;
  if (b >= 1)
    for (int p : parts_)
      if (p >= b) ++col;
  return col - a;
}

Hooks Partition::hooks(int a, int b) const { return {arm(a, b), leg(a, b), b - 1, a - 1}; }

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

bool operator<(const Partition& x, const Partition& y) {
  int wx = x.weight(), wy = y.weight();
  if (wx != wy) return wx < wy;
  return x.parts_ > y.parts_;
}

int total_weight(const PartitionTuple& t) {
  int w = 0;
  for (const auto& p : t) w += p.weight();
  return w;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<PartitionTuple> enumerate(int k, int n) {
  if (k <= 0) throw std::invalid_argument("enumerate needs k >= 1");
  std::vector<PartitionTuple> out;
  std::vector<int> weights(k, 0);
  std::vector<std::vector<Partition>> cache(n + 1);
  for (int w = 0; w <= n; ++w) cache[w] = partitions_of(w);
  std::function<void(int, int)> compositions = [&](int i, int rest) {
    if (i == k - 1) {
      weights[i] = rest;
      PartitionTuple cur(k);
      std::function<void(int)> fill = [&](int c) {
        if (c == k) {
          out.push_back(cur);
          return;
        }
        for (const auto& p : cache[weights[c]]) {
          cur[c] = p;
          fill(c + 1);
        }
      };
      fill(0);
      return;
    }
    for (int w = rest; w >= 0; --w) {
      weights[i] = w;
      compositions(i + 1, rest - w);
    }
  };
  compositions(0, n);
  return out;
}

Dominance dominance_compare(const Partition& lambda, const Partition& mu) {
  if (lambda == mu) return Dominance::Equal;
  if (lambda.weight() != mu.weight()) return Dominance::Incomparable;
  int n = std::max(lambda.length(), mu.length());
  bool ge = true, le = true;
  int sl = 0, sm = 0;
  for (int i = 1; i <= n; ++i) {
    sl += lambda.part(i);
    sm += mu.part(i);
    if (sl < sm) ge = false;
    if (sl > sm) le = false;
  }
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

PartitionStats partition_stats(const Partition& lambda) {
  return {lambda.weight(), lambda.length(), lambda.z(), lambda.transpose()};
}

}  // namespace agt
