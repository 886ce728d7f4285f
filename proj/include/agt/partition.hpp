#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace agt {

struct Hooks {
  int arm;
  int leg;
  int arm_colength;
  int leg_colength;
};

struct Cell {
  int row;  // a >= 1
  int col;  // b >= 1
};

enum class Dominance { Less, Greater, Equal, Incomparable };

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  // lambda_a with the convention lambda_a = 0 beyond the length (1-based).
  int part(int a) const { return a >= 1 && a <= length() ? parts_[a - 1] : 0; }
  Partition transpose() const;
  // Multiplicity of the part i.
  int multiplicity(int i) const;
  // z_lambda = prod_i i^{m_i} m_i!
  mpz_class z() const;
  std::vector<Cell> cells() const;

  // Arm and leg are extended to cells outside the diagram.
  int arm(int a, int b) const { return part(a) - b; }
  int leg(int a, int b) const;
  Hooks hooks(int a, int b) const;

  std::string to_string() const;

  friend bool operator==(const Partition& x, const Partition& y) { return x.parts_ == y.parts_; }
  friend bool operator!=(const Partition& x, const Partition& y) { return !(x == y); }
  // Orders by weight, then reverse lexicographic on parts ((2) before (1,1)).
  friend bool operator<(const Partition& x, const Partition& y);

 private:
  std::vector<int> parts_;
};

using PartitionTuple = std::vector<Partition>;

int total_weight(const PartitionTuple& t);

// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);
// All k-tuples of total weight n: component weights in decreasing
// lexicographic order, then each component in decreasing lexicographic order.
std::vector<PartitionTuple> enumerate(int k, int n);

Dominance dominance_compare(const Partition& lambda, const Partition& mu);

struct PartitionStats {
  int weight;
  int length;
  mpz_class z;
  Partition transpose;
};

PartitionStats partition_stats(const Partition& lambda);

}  // namespace agt
