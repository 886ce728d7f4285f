#include "agt/nekrasov_ale.hpp"

#include <functional>
#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/parallel.hpp"

namespace agt {

namespace {

std::vector<Rational> difference(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatFunc patch_product(int k, const PartitionTuple& y1, const PartitionTuple& y2, const std::vector<Rational>& v21,
                      const RatFunc& mu, const RatFunc& e1, const RatFunc& e2, bool shifts) {
  RatFunc out(1);
  for (int i = 1; i <= k; ++i) {
    PatchWeights w = patch_weights(k, i, e1, e2);
    RatFunc m = mu;
    if (shifts) {
      if (i <= k - 1) m -= RatFunc(v21[i - 1]) * w.e1;
      if (i >= 2) m -= RatFunc(v21[i - 2]) * w.e2;
    }
    out *= m_bifund(y1[i - 1], y2[i - 1], m, w.e1, w.e2);
  }
  return out;
}

RatFunc edge_ell(int k, const std::vector<Rational>& v21, const RatFunc& mu, const RatFunc& e1, const RatFunc& e2,
                 CinvIndex c) {
  if (is_zero_vector(v21)) return RatFunc(1);
  return edge_factor(edge_chern(v21, k, c), e1, e2, mu).ell;
}

RatFunc tangent_weight(int k, const PartitionTuple& y, const RatFunc& e1, const RatFunc& e2) {
  return patch_product(k, y, y, std::vector<Rational>(k - 1, Rational(0)), RatFunc(0), e1, e2, false);
}

// One arrow of the quiver: the bifundamental between s(e) and t(e) with the
// given mass. Node index -1 stands for the vacuum [empty, 0].
struct Arrow {
  int source;
  int target;
  int mass;
};

std::vector<Arrow> arrows_of(const QuiverSpec& q) {
  std::vector<Arrow> out;
  int n = q.nodes();
  switch (q.kind) {
    case QuiverKind::Pure:
      break;
    case QuiverKind::AHat:
      for (int v = 0; v < n; ++v) out.push_back({v, (v + 1) % n, v});
      break;
    case QuiverKind::A:
      out.push_back({0, -1, 0});
      for (int v = 0; v + 1 < n; ++v) out.push_back({v + 1, v, v + 1});
      out.push_back({-1, n - 1, n});
      break;
  }
  return out;
}

Exponents unit_q(const SeriesRingPtr& ring, int node = 0) {
  Exponents e(ring->size(), Rational(0));
  e[node] = 1;
  return e;
}

}  // namespace

AleState ale_vacuum(int k) { return {PartitionTuple(k), make_charge(std::vector<long>(k - 1, 0), k)}; }

AleMatrixElement matrix_element_ale(const AleState& s1, const AleState& s2, const RatFunc& mu, const RatFunc& e1,
                                    const RatFunc& e2, CinvIndex c) {
  int k = s1.charge.k;
  if (s2.charge.k != k || static_cast<int>(s1.y.size()) != k || static_cast<int>(s2.y.size()) != k)
    throw InconsistentCharge("states live on different X_k");
  std::vector<Rational> v21 = difference(s2.charge.v, s1.charge.v);
  AleMatrixElement out;
  out.value = patch_product(k, s1.y, s2.y, v21, mu, e1, e2, true) * edge_ell(k, v21, mu, e1, e2, c);
  out.z_power = Rational(total_weight(s2.y) - total_weight(s1.y)) + s2.charge.delta - s1.charge.delta;
  out.x_power = std::move(v21);
  return out;
}

SeriesRingPtr ale_quiver_ring(const QuiverSpec& quiver, int k) {
  int n = quiver.nodes();
  if (n == 1) return ale_ring(k);
  std::vector<std::string> graded, ungraded;
  for (int v = 0; v < n; ++v) graded.push_back("q" + std::to_string(v));
  for (int v = 0; v < n; ++v)
    for (int i = 1; i < k; ++i) ungraded.push_back("xi" + std::to_string(v) + "_" + std::to_string(i));
  return make_ring(graded, ungraded);
}

AleSeries z_pure_ale(int k, int j, const Rational& order, const Rational& delta_max, const RatFunc& e1,
                     const RatFunc& e2, int jobs) {
  AleSeries out{QSeries(ale_ring(k), order), {}};
  if (delta_max < order) out.warnings.push_back("delta_max below the q-order: lattice terms may be missing");
  int whole = static_cast<int>(mpz_class(order.get_num() / order.get_den()).get_si());
  QuiverSpec pure;
  auto ring = out.series.ring();
  QSeries patches = QSeries::constant(ring, order, RatFunc(1));
  for (int i = 1; i <= k; ++i) {
    PatchWeights w = patch_weights(k, i, e1, e2);
    QSeries z = z_quiver_c2(pure, whole, {}, w.e1, w.e2, jobs);
    QSeries lifted(ring, order);
    for (const auto& [e, c] : z.terms()) {
      Exponents x(ring->size(), Rational(0));
      x[0] = e[0];
      lifted.add_term(x, c);
    }
    patches = (patches * lifted).truncated(order);
  }
  QSeries theta(ring, order);
  for (const auto& c : enumerate_charges(k, j, delta_max)) {
    Exponents e{c.delta};
    for (const auto& x : c.v) e.push_back(x);
    theta.add_term(e, RatFunc(1));
  }
  out.series = (theta * patches).truncated(order);
  return out;
}

AleSeries z_quiver_ale(const AleQuiverSpec& spec, const std::vector<RatFunc>& masses, const RatFunc& e1,
                       const RatFunc& e2, int jobs) {
  const QuiverSpec& q = spec.quiver;
  int k = spec.k;
  int n = q.nodes();
  if (static_cast<int>(spec.j.size()) != n) throw std::invalid_argument("one holonomy per node is required");
  if (q.kind != QuiverKind::Pure && static_cast<int>(masses.size()) != q.mass_count())
    throw std::invalid_argument(q.name() + " needs " + std::to_string(q.mass_count()) + " masses");
  Rational dmax = spec.effective_delta_max();
  auto ring = ale_quiver_ring(q, k);
  AleSeries out{QSeries(ring, spec.order), {}};
  if (dmax < spec.order) out.warnings.push_back("delta_max below the q-order: lattice terms may be missing");

  // Charge tuples within the q-order, filtered by the conformal constraint.
  std::vector<std::vector<Charge>> per_node;
  for (int v = 0; v < n; ++v) per_node.push_back(enumerate_charges(k, spec.j[v], dmax));
  auto arrows = arrows_of(q);
  std::vector<std::vector<Charge>> tuples;
  std::vector<Charge> current;
  std::function<void(int, Rational)> pick = [&](int v, Rational used) {
    if (v == n) {
      if (q.kind != QuiverKind::Pure) {
        for (int w = 0; w < n; ++w) {
          std::vector<std::vector<Rational>> outs, ins;
          for (const auto& a : arrows) {
            if (a.source == w && a.target >= 0) outs.push_back(current[a.target].v);
            if (a.target == w && a.source >= 0) ins.push_back(current[a.source].v);
          }
          if (conformal_degree(k, current[w].v, outs, ins) != 0) return;
        }
      }
      tuples.push_back(current);
      return;
    }
    for (const auto& c : per_node[v]) {
      if (used + c.delta > spec.order) continue;
      current.push_back(c);
      pick(v + 1, used + c.delta);
      current.pop_back();
    }
  };
  pick(0, Rational(0));

  AleState vacuum = ale_vacuum(k);
  std::vector<QSeries> partial(tuples.size(), QSeries(ring, spec.order));
  parallel_for(tuples.size(), jobs, [&](size_t t) {
    const auto& charges = tuples[t];
    Rational lattice = 0;
    for (const auto& c : charges) lattice += c.delta;
    Rational room = spec.order - lattice;
    long budget = mpz_class(room.get_num() / room.get_den()).get_si();

    // Edge factors depend on the charges only.
    RatFunc edges(1);
    auto charge_of = [&](int node) -> const Charge& { return node < 0 ? vacuum.charge : charges[node]; };
    if (spec.edge_factors)
      for (const auto& a : arrows)
        edges *= edge_ell(k, difference(charge_of(a.target).v, charge_of(a.source).v), masses[a.mass], e1, e2,
                          spec.cinv);

    Exponents base(ring->size(), Rational(0));
    for (int v = 0; v < n; ++v) {
      base[v] = charges[v].delta;
      for (int i = 0; i < k - 1; ++i) base[n + v * (k - 1) + i] = charges[v].v[i];
    }

    std::vector<PartitionTuple> ys(n);
    std::function<void(int, long)> fill = [&](int v, long left) {
      if (v == n) {
        RatFunc num = edges, den(1);
        auto y_of = [&](int node) -> const PartitionTuple& { return node < 0 ? vacuum.y : ys[node]; };
        for (const auto& a : arrows) {
          std::vector<Rational> v21 = difference(charge_of(a.target).v, charge_of(a.source).v);
          num *= patch_product(k, y_of(a.source), y_of(a.target), v21, masses[a.mass], e1, e2, spec.mass_shifts);
        }
        for (int w = 0; w < n; ++w) den *= tangent_weight(k, ys[w], e1, e2);
        Exponents e = base;
        for (int w = 0; w < n; ++w) e[w] += total_weight(ys[w]);
        partial[t].add_term(e, num / den);
        return;
      }
      for (long m = 0; m <= left; ++m)
        for (auto& y : enumerate(k, static_cast<int>(m))) {
          ys[v] = std::move(y);
          fill(v + 1, left - m);
        }
    };
    fill(0, budget);
  });
  for (const auto& p : partial) out.series += p;
  return out;
}

QSeries closed_forms_ale(AleClosedForm kind, int k, int j, const Rational& order, const std::vector<RatFunc>& masses,
                         const RatFunc& e1, const RatFunc& e2) {
  auto ring = ale_ring(k);
  Rational ahead = order + 1;
  Exponents q1 = unit_q(ring);
  RatFunc ke12 = RatFunc(k) * e1 * e2;
  // q^{a/24} prod (1 - q^n)^a, i.e. eta^a.
  auto eta_power = [&](long a) {
    Exponents s(ring->size(), Rational(0));
    s[0] = ratio(a, 24);
    return euler_power(ring, ahead, q1, RatFunc(a)).shifted(s);
  };
  auto expect = [&](size_t n) {
    if (masses.size() != n) throw std::invalid_argument("wrong number of masses for the closed form");
  };
  QSeries out(ring, order);
  switch (kind) {
    case AleClosedForm::Pure: {
      expect(0);
      QSeries chi = character_chi(k, j, ahead);
      QSeries boltzmann = series_exp(QSeries::monomial(ring, ahead, q1, ke12.inverse()));
      out = eta_power(k - 1) * chi * boltzmann;
      break;
    }
    case AleClosedForm::AHat0: {
      expect(1);
      const RatFunc& mu = masses[0];
      QSeries chi = character_chi(k, j, ahead);
      Exponents s(ring->size(), Rational(0));
      s[0] = ratio(k, 24);
      QSeries prefactor = eta_power(-1).shifted(s);
      QSeries matter = euler_power(ring, ahead, q1, -(mu * (mu + e1 + e2) / ke12));
      out = prefactor * chi * matter;
      break;
    }
    case AleClosedForm::A0: {
      expect(2);
      QSeries chi = character_chi(k, j, ahead, true);
      QSeries base = QSeries::constant(ring, ahead, RatFunc(1)) - QSeries::monomial(ring, ahead, q1, RatFunc(1));
      QSeries matter = series_pow(base, -(masses[1] * (masses[0] + e1 + e2) / ke12));
      out = eta_power(k - 1) * chi * matter;
      break;
    }
  }
  return out.truncated(order);
}

}  // namespace agt
