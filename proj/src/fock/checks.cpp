#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/fock_checks.hpp"
#include "agt/nekrasov_c2.hpp"

namespace agt {

namespace {

std::string describe(const FockVector& v) {
  std::string s;
  int shown = 0;
  for (const auto& [st, c] : v.terms()) {
    if (shown++ == 3) return s + " + ...";
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")" + st.to_string();
  }
  return s;
}

}  // namespace

CheckResult identity_check(const FockSpace& space, const std::string& relation, const OperatorExpr& lhs,
                           const OperatorExpr& rhs, const std::vector<FockState>& states) {
  CheckResult r;
  r.relation = relation;
  OperatorExpr diff = lhs - rhs;
  for (const auto& s : states) {
    FockVector res = apply(space, diff, FockVector::basis(s));
    ++r.checked;
    if (!res.is_zero()) {
      r.ok = false;
      r.state = s.to_string();
      r.residual = describe(res);
      return r;
    }
  }
  return r;
}

CheckResult commutator_check(const FockSpace& space, const std::string& relation, const OperatorExpr& a,
                             const OperatorExpr& b, const OperatorExpr& expected,
                             const std::vector<FockState>& states) {
  return identity_check(space, relation, commutator(a, b), expected, states);
}

RatFunc fock_pairing(const FockSpace& space, const FockVector& a, const FockVector& b) {
  for (int c = 0; c < space.colors; ++c)
    for (int d = 0; d < space.colors; ++d)
      if (c != d && !space.gram[c][d].is_zero()) throw std::invalid_argument("pairing needs a diagonal Gram matrix");
  RatFunc total;
  for (const auto& [s, x] : a.terms()) {
    RatFunc y = b.coefficient(s);
    if (y.is_zero()) continue;
    RatFunc w = x * y;
    for (int c = 0; c < space.colors; ++c) {
      const Partition& p = s.modes[c];
      if (p.empty()) continue;
      w *= RatFunc(Rational(p.z())) * pow(space.gram[c][c], p.length());
    }
    total += w;
  }
  return total;
}

RatFunc eu_plus(const Partition& lambda, const RatFunc& e1, const RatFunc& e2) {
  RatFunc r(1);
  for (const auto& s : lambda.cells())
    r *= RatFunc(lambda.leg(s.row, s.col) + 1) * e1 - RatFunc(lambda.arm(s.row, s.col)) * e2;
  return r;
}

RatFunc eu_minus(const Partition& lambda, const RatFunc& e1, const RatFunc& e2) {
  RatFunc r(1);
  for (const auto& s : lambda.cells())
    r *= RatFunc(lambda.leg(s.row, s.col)) * e1 - RatFunc(lambda.arm(s.row, s.col) + 1) * e2;
  return r;
}

FockVector jack_fock_vector(const JackTable& table, const Partition& lambda) {
  SymVector j = SymVector::single(table.N(), Basis::Jack, lambda);
  SymVector p = basis_convert(j, Basis::PowerSum, &table);
  FockVector v;
  for (const auto& [mu, c] : p.coeffs) v.add(FockState{{mu}, {}}, c);
  return v;
}

FockVector fixed_point_class(const JackTable& table, const Partition& lambda, const RatFunc& e1, const RatFunc& e2) {
  return jack_fock_vector(table, lambda).scaled(eu_plus(lambda, e1, e2));
}

RatFunc co_matrix_element(const RatFunc& alpha, const RatFunc& beta_exp, const Partition& lambda1,
                          const Partition& lambda2, const JackTable& table, const RatFunc& e1, const RatFunc& e2) {
  if (lambda1.weight() > table.N() || lambda2.weight() > table.N())
    throw DegreeOverflow("Jack table too small for the matrix element");
  FockSpace space = heisenberg_space(table.beta().inverse());
  Rational power = lambda2.weight() - lambda1.weight();
  FockVector image = apply(space, vertex({RatFunc(1)}, alpha, beta_exp, power),
                           fixed_point_class(table, lambda1, e1, e2));
  return fock_pairing(space, image, fixed_point_class(table, lambda2, e1, e2));
}

int SignCalibration::sign(const Partition& l1, const Partition& l2) const {
  int e = (by_first ? l1.weight() : 0) + (by_second ? l2.weight() : 0);
  return e % 2 == 0 ? 1 : -1;
}

std::string SignCalibration::to_string() const {
  if (!by_first && !by_second) return "+1";
  std::string s = "(-1)^(";
  if (by_first) s += "|l1|";
  if (by_first && by_second) s += "+";
  if (by_second) s += "|l2|";
  return s + ")";
}

SignCalibration calibrate_co_sign(const RatFunc& e1, const RatFunc& e2, const RatFunc& mu, const JackTable& table) {
  RatFunc alpha = -(mu / e2), beta_exp = (mu + e1 + e2) / e2;
  std::vector<Partition> low{Partition(), Partition({1})};
  for (bool f : {false, true})
    for (bool s : {false, true}) {
      SignCalibration cal{f, s};
      bool ok = true;
      for (const auto& l1 : low)
        for (const auto& l2 : low) {
          RatFunc fock = co_matrix_element(alpha, beta_exp, l1, l2, table, e1, e2);
          RatFunc comb = m_bifund(l1, l2, mu, e1, e2) * RatFunc(l2.weight() % 2 == 0 ? 1 : -1);
          if (fock * RatFunc(cal.sign(l1, l2)) != comb) ok = false;
        }
      if (ok) return cal;
    }
  throw std::runtime_error("no global sign reconciles the grade <= 1 matrix elements");
}

FockVector gaiotto_vector(const FockSpace& space, const std::vector<RatFunc>& eta, int grade,
                          const std::vector<Rational>& label) {
  FieldVector v(space.colors);
  for (int c = 0; c < space.colors; ++c) v[c] = eta.at(c);
  FockVector term = FockVector::basis(space.vacuum(label));
  FockVector out = term;
  for (int n = 1; n <= grade; ++n) {
    term = apply(space, mode(v, -1), term).scaled(RatFunc(ratio(1, n)));
    out += term;
  }
  return out;
}

CheckResult whittaker_check(const FockSpace& space, const std::vector<RatFunc>& eta, int grade,
                            const std::vector<Rational>& label) {
  CheckResult r;
  r.relation = "whittaker";
  FockVector g = gaiotto_vector(space, eta, grade, label);
  for (int c = 0; c < space.colors; ++c)
    for (int m = 1; m <= grade; ++m) {
      FockVector lhs = apply(space, mode(space.unit(c), m), g);
      FockVector rhs = m == 1 ? g.scaled(eta[c] * space.gram[c][c]).truncated(grade - 1) : FockVector();
      FockVector res = lhs.truncated(grade - m) - rhs.truncated(grade - m);
      ++r.checked;
      if (!res.is_zero()) {
        r.ok = false;
        r.state = "color " + std::to_string(c) + ", mode " + std::to_string(m);
        r.residual = describe(res);
        return r;
      }
    }
  return r;
}

FockVector hilbert_class(const JackTable& table, int n, const RatFunc& e1, const RatFunc& e2) {
  FockVector out;
  RatFunc sign(n % 2 == 0 ? 1 : -1);
  for (const auto& lambda : partitions_of(n))
    out += jack_fock_vector(table, lambda).scaled(sign / eu_minus(lambda, e1, e2));
  return out;
}

}  // namespace agt
