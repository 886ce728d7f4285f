#pragma once

#include <string>
#include <vector>

#include "agt/partition.hpp"
#include "agt/qseries.hpp"

namespace agt {

// prod_{s in Y1} (a - L_{Y2}(s) e1 + (A_{Y1}(s)+1) e2) * prod_{s in Y2} (a + (L_{Y1}(s)+1) e1 - A_{Y2}(s) e2)
RatFunc m_bifund(const Partition& y1, const Partition& y2, const RatFunc& a, const RatFunc& e1, const RatFunc& e2);
// prod_{s in Y} (a - L'(s) e1 - A'(s) e2)
RatFunc m_fund(const Partition& y, const RatFunc& a, const RatFunc& e1, const RatFunc& e2);

enum class QuiverKind { Pure, AHat, A };

// Pure: no masses. AHat(r): r+1 nodes on a cycle, masses mu_0..mu_r on the
// edges v -> v+1. A(r): r+1 nodes on a line, masses mu_0..mu_{r+1} with the
// two fundamentals at the ends.
struct QuiverSpec {
  QuiverKind kind = QuiverKind::Pure;
  int r = 0;

  int nodes() const { return kind == QuiverKind::Pure ? 1 : r + 1; }
  int mass_count() const;
  std::string name() const;
  // "pure", "ahat:R" or "a:R".
  static QuiverSpec parse(const std::string& text);
};

// Graded variables q (one node) or q0..qr.
SeriesRingPtr quiver_ring(const QuiverSpec& spec);

// Summand of the localization sum for one tuple of partitions (one per node).
RatFunc quiver_weight(const QuiverSpec& spec, const PartitionTuple& lambda, const std::vector<RatFunc>& masses,
                      const RatFunc& e1, const RatFunc& e2);

// Localization sum truncated at total degree `order` in the node couplings.
QSeries z_quiver_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                    const RatFunc& e2, int jobs = 1);

// Closed forms: exp(q/e1e2); the eta products for AHat(r); the
// (1 - q_v ... q_{v'-1}) products for A(r).
QSeries closed_form_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                       const RatFunc& e2);

// Free-boson torus trace Tr q^{L_0} V(mu_r, 1/z_r) ... V(mu_0, 1/z_0) with
// z_v = q_1 ... q_v and q = q_0 ... q_r, including the cross terms between
// insertions. AHat quivers only.
QSeries trace_form_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                      const RatFunc& e2);

}  // namespace agt
