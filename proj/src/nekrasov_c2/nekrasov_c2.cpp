#include "agt/nekrasov_c2.hpp"

#include <algorithm>
#include <stdexcept>

#include "agt/parallel.hpp"

namespace agt {

RatFunc m_bifund(const Partition& y1, const Partition& y2, const RatFunc& a, const RatFunc& e1, const RatFunc& e2) {
  RatFunc r(1);
  for (const auto& s : y1.cells())
    r *= a - RatFunc(y2.leg(s.row, s.col)) * e1 + RatFunc(y1.arm(s.row, s.col) + 1) * e2;
  for (const auto& s : y2.cells())
    r *= a + RatFunc(y1.leg(s.row, s.col) + 1) * e1 - RatFunc(y2.arm(s.row, s.col)) * e2;
  return r;
}

RatFunc m_fund(const Partition& y, const RatFunc& a, const RatFunc& e1, const RatFunc& e2) {
  RatFunc r(1);
  for (const auto& s : y.cells()) r *= a - RatFunc(s.row - 1) * e1 - RatFunc(s.col - 1) * e2;
  return r;
}

int QuiverSpec::mass_count() const {
  switch (kind) {
    case QuiverKind::Pure:
      return 0;
    case QuiverKind::AHat:
      return r + 1;
    case QuiverKind::A:
      return r + 2;
  }
  return 0;
}

std::string QuiverSpec::name() const {
  switch (kind) {
    case QuiverKind::Pure:
      return "pure";
    case QuiverKind::AHat:
      return "ahat:" + std::to_string(r);
    case QuiverKind::A:
      return "a:" + std::to_string(r);
  }
  return "?";
}

QuiverSpec QuiverSpec::parse(const std::string& text) {
  if (text == "pure") return {};
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("quiver must be pure, ahat:R or a:R");
  std::string head = text.substr(0, colon);
  int r = 0;
  try {
    size_t used = 0;
    r = std::stoi(text.substr(colon + 1), &used);
    if (used != text.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument("bad quiver rank in " + text);
  }
  if (r < 0) throw std::invalid_argument("quiver rank must be nonnegative");
  if (head == "ahat") return {QuiverKind::AHat, r};
  if (head == "a") return {QuiverKind::A, r};
  throw std::invalid_argument("unknown quiver " + text);
}

SeriesRingPtr quiver_ring(const QuiverSpec& spec) {
  if (spec.nodes() == 1) return make_ring({"q"});
  std::vector<std::string> names;
  for (int v = 0; v < spec.nodes(); ++v) names.push_back("q" + std::to_string(v));
  return make_ring(names);
}

RatFunc quiver_weight(const QuiverSpec& spec, const PartitionTuple& lambda, const std::vector<RatFunc>& masses,
                      const RatFunc& e1, const RatFunc& e2) {
  RatFunc zero;
  RatFunc num(1), den(1);
  int n = spec.nodes();
  for (int v = 0; v < n; ++v) den *= m_bifund(lambda[v], lambda[v], zero, e1, e2);
  switch (spec.kind) {
    case QuiverKind::Pure:
      break;
    case QuiverKind::AHat:
      for (int v = 0; v < n; ++v) num *= m_bifund(lambda[v], lambda[(v + 1) % n], masses[v], e1, e2);
      break;
    case QuiverKind::A: {
      Partition empty;
      num *= m_bifund(lambda[0], empty, masses[0], e1, e2);
      for (int v = 0; v + 1 < n; ++v) num *= m_bifund(lambda[v + 1], lambda[v], masses[v + 1], e1, e2);
      num *= m_bifund(empty, lambda[n - 1], masses[n], e1, e2);
      break;
    }
  }
  return num / den;
}

namespace {

void check_masses(const QuiverSpec& spec, const std::vector<RatFunc>& masses) {
  if (static_cast<int>(masses.size()) != spec.mass_count())
    throw std::invalid_argument(spec.name() + " needs " + std::to_string(spec.mass_count()) + " masses");
}

}  // namespace

QSeries z_quiver_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                    const RatFunc& e2, int jobs) {
  check_masses(spec, masses);
  auto ring = quiver_ring(spec);
  std::vector<PartitionTuple> tuples;
  for (int n = 0; n <= order; ++n)
    for (auto& t : enumerate(spec.nodes(), n)) tuples.push_back(std::move(t));
  std::vector<RatFunc> weights(tuples.size());
  parallel_for(tuples.size(), jobs, [&](size_t i) { weights[i] = quiver_weight(spec, tuples[i], masses, e1, e2); });
  QSeries out(ring, Rational(order));
  for (size_t i = 0; i < tuples.size(); ++i) {
    Exponents e;
    for (const auto& p : tuples[i]) e.push_back(Rational(p.weight()));
    out.add_term(e, weights[i]);
  }
  return out;
}

QSeries closed_form_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                       const RatFunc& e2) {
  check_masses(spec, masses);
  auto ring = quiver_ring(spec);
  Rational ord(order);
  int n = spec.nodes();
  RatFunc e12 = e1 * e2;
  auto unit = [&](int v) {
    Exponents e(n, Rational(0));
    e[v] = 1;
    return e;
  };
  switch (spec.kind) {
    case QuiverKind::Pure:
      return series_exp(QSeries::monomial(ring, ord, unit(0), e12.inverse()));
    case QuiverKind::AHat: {
      // q^{1/24} eta(q)^{-1} with q = q_0 ... q_r
      QSeries out = euler_power(ring, ord, Exponents(n, Rational(1)), RatFunc(-1));
      for (int v = 0; v < n; ++v) {
        RatFunc a = -(masses[v] * (masses[v] + e1 + e2) / e12);
        out = (out * euler_power(ring, ord, unit(v), a)).truncated(ord);
      }
      return out;
    }
    case QuiverKind::A: {
      QSeries out = QSeries::constant(ring, ord, RatFunc(1));
      for (int v = 0; v <= n; ++v)
        for (int w = v + 1; w <= n; ++w) {
          Exponents e(n, Rational(0));
          for (int x = v; x < w; ++x) e[x] = 1;
          QSeries base = QSeries::constant(ring, ord, RatFunc(1)) - QSeries::monomial(ring, ord, e, RatFunc(1));
          RatFunc a = -(masses[w] * (masses[v] + e1 + e2) / e12);
          out = (out * series_pow(base, a)).truncated(ord);
        }
      return out;
    }
  }
  throw std::invalid_argument("unknown quiver");
}

QSeries trace_form_c2(const QuiverSpec& spec, int order, const std::vector<RatFunc>& masses, const RatFunc& e1,
                      const RatFunc& e2) {
  if (spec.kind != QuiverKind::AHat) throw std::invalid_argument("trace form needs an ahat quiver");
  check_masses(spec, masses);
  auto ring = quiver_ring(spec);
  int n = spec.nodes();
  RatFunc e12 = e1 * e2;
  // g alpha_i beta_j for the Carlsson-Okounkov operators
  auto coupling = [&](int i, int j) { return masses[i] * (masses[j] + e1 + e2) / e12; };
  QSeries log_z(ring, Rational(order));
  for (int m = 1; m <= order; ++m) {
    RatFunc inv_m(ratio(1, m));
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        Exponents e(n, Rational(0));
        for (int x = v + 1; x <= w; ++x) e[x] = m;
        log_z.add_term(e, coupling(v, w) * inv_m);
      }
    for (int s = 1; s * n * m <= order + (n - 1) * m; ++s)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          Exponents e(n, Rational(s * m));
          for (int x = std::min(i, j) + 1; x <= std::max(i, j); ++x) e[x] += j > i ? m : -m;
          log_z.add_term(e, coupling(i, j) * inv_m);
        }
  }
  QSeries out = series_exp(log_z) * euler_power(ring, Rational(order), Exponents(n, Rational(1)), RatFunc(-1));
  return out.truncated(Rational(order));
}

}  // namespace agt
