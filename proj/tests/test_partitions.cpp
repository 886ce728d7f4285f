#include "doctest.h"

#include <set>
#include <vector>

#include "agt/partition.hpp"

using namespace agt;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

long count_partitions(int n, int max_part) {
  if (n == 0) return 1;
  long total = 0;
  for (int p = 1; p <= std::min(n, max_part); ++p) total += count_partitions(n - p, p);
  return total;
}

// Number of k-tuples of total weight n by convolution of p(n).
long count_tuples(int k, int n) {
  if (k == 0) return n == 0 ? 1 : 0;
  long total = 0;
  for (int a = 0; a <= n; ++a) total += count_partitions(a, a) * count_tuples(k - 1, n - a);
  return total;
}

}  // namespace

TEST_CASE("hooks") {
  Hooks h = P({2, 1}).hooks(1, 1);
  CHECK(h.arm == 1);
  CHECK(h.leg == 1);
  CHECK(h.arm_colength == 0);
  CHECK(h.leg_colength == 0);

  Hooks e = Partition().hooks(1, 1);
  CHECK(e.arm == -1);
  CHECK(e.leg == -1);

  Hooks g = P({3, 1}).hooks(1, 2);
  CHECK(g.arm == 1);
  CHECK(g.leg == 0);
  CHECK(g.arm_colength == 1);
  CHECK(g.leg_colength == 0);
}

TEST_CASE("arm and leg agree with the literal definitions") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& l : partitions_of(n)) {
      const auto t = l.transpose();
      for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
          CHECK(l.arm(a, b) == l.part(a) - b);
          CHECK(l.leg(a, b) == t.part(b) - a);
        }
    }
}

TEST_CASE("enumeration") {
  auto three = partitions_of(3);
  REQUIRE(three.size() == 3);
  CHECK(three[0] == P({3}));
  CHECK(three[1] == P({2, 1}));
  CHECK(three[2] == P({1, 1, 1}));
  CHECK(enumerate(1, 3).size() == 3);

  auto pairs = enumerate(2, 2);
  REQUIRE(pairs.size() == 5);
  CHECK(pairs[0] == PartitionTuple{P({2}), Partition()});
  CHECK(pairs[1] == PartitionTuple{P({1, 1}), Partition()});
  CHECK(pairs[2] == PartitionTuple{P({1}), P({1})});
  CHECK(pairs[3] == PartitionTuple{Partition(), P({2})});
  CHECK(pairs[4] == PartitionTuple{Partition(), P({1, 1})});

  // The q^4 coefficient of (prod (1 - q^n)^-1)^3.
  CHECK(enumerate(3, 4).size() == 51);
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 6; ++n) {
      auto tuples = enumerate(k, n);
      CHECK(static_cast<long>(tuples.size()) == count_tuples(k, n));
      std::set<std::vector<std::string>> distinct;
      for (const auto& t : tuples) {
        CHECK(total_weight(t) == n);
        std::vector<std::string> key;
        for (const auto& p : t) key.push_back(p.to_string());
        distinct.insert(key);
      }
      CHECK(distinct.size() == tuples.size());
    }
}

TEST_CASE("z, dominance and transpose") {
  CHECK(P({1, 1}).z() == 2);
  CHECK(P({3, 2, 2, 1}).z() == 3 * 4 * 2 * 1);
  CHECK(dominance_compare(P({1, 1, 1}), P({2, 1})) == Dominance::Less);
  CHECK(dominance_compare(P({2, 1}), P({1, 1, 1})) == Dominance::Greater);
  CHECK(dominance_compare(P({3, 1, 1, 1}), P({2, 2, 2})) == Dominance::Incomparable);
  CHECK(P({3}).transpose() == P({1, 1, 1}));
}

TEST_CASE("class equation: sum over partitions of 1/z is one") {
  for (int n = 1; n <= 8; ++n) {
    mpq_class total = 0;
    for (const auto& l : partitions_of(n)) total += mpq_class(1) / mpq_class(l.z());
    CHECK(total == 1);
  }
}

TEST_CASE("transpose is an involution preserving weight") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : partitions_of(n)) {
      CHECK(l.transpose().transpose() == l);
      CHECK(l.transpose().weight() == n);
      CHECK(static_cast<int>(l.cells().size()) == n);
      PartitionStats s = partition_stats(l);
      CHECK(s.length == l.length());
      CHECK(s.transpose == l.transpose());
    }
}

TEST_CASE("ordering puts (2) before (1,1)") {
  CHECK(P({2}) < P({1, 1}));
  CHECK(P({1, 1}) < P({3}));
  CHECK(P({2, 1}).to_string() == "(2,1)");
}

TEST_CASE("malformed partitions are rejected and trailing zeros dropped") {
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK(P({2, 0}) == P({2}));
}
