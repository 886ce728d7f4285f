#include "doctest.h"

#include "agt/fock_checks.hpp"
#include "agt/nekrasov_c2.hpp"

using namespace agt;
using R = RatFunc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

R e1() { return R::var("e1"); }
R e2() { return R::var("e2"); }
R beta_of(const R& a, const R& b) { return -(a / b); }

FockVector state(std::vector<Partition> modes, std::vector<Rational> label = {}) {
  return FockVector::basis(FockState{std::move(modes), std::move(label)});
}

// States of grade <= g in every sector j, at the sector's highest weight.
std::vector<FockState> sector_states(const FockSpace& space, int k, int g) {
  std::vector<FockState> out;
  for (int j = 0; j < k; ++j)
    for (auto& s : space.states_up_to(g, fundamental_weight(k, j))) out.push_back(s);
  return out;
}

bool chevalley_holds(const FockSpace& space, int k, const std::vector<FockState>& states, FKConvention conv) {
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      OperatorExpr expected = a == b ? chevalley_h(space, a) : OperatorExpr();
      if (!commutator_check(space, "", chevalley_e(space, a, conv), chevalley_f(space, b, conv), expected, states).ok)
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("patch bosons") {
  FockSpace space = patch_space(2, e1(), e2());
  R beta1 = patch_weights(2, 1, e1(), e2()).beta();
  OperatorExpr p1 = mode(space.unit(0), 1);
  CHECK(apply(space, p1, state({Partition(), Partition()})).is_zero());
  CHECK(apply(space, p1, state({P({1}), Partition()})) == state({Partition(), Partition()}).scaled(beta1.inverse()));
  CHECK(apply(space, mode(space.unit(1), 1), state({P({1}), Partition()})).is_zero());
}

TEST_CASE("h_i on the highest weight of each sector") {
  const int k = 3;
  FockSpace space = lattice_space(k);
  for (int j = 0; j < k; ++j) {
    FockVector top = state({Partition(), Partition()}, fundamental_weight(k, j));
    for (int i = 0; i < k; ++i) CHECK(apply(space, chevalley_h(space, i), top) == top.scaled(R(i == j ? 1 : 0)));
  }
}

TEST_CASE("Virasoro brackets on one boson") {
  R b = beta_of(e1(), e2());
  FockSpace space = heisenberg_space(b.inverse());
  auto L = [&](int n) { return virasoro_gram(space, {0}, n); };
  CHECK(commutator_check(space, "[L1,L-1]", L(1), L(-1), L(0).scaled(R(2)), space.states_up_to(3)).ok);
  CHECK(commutator_check(space, "[L2,L-2]", L(2), L(-2), L(0).scaled(R(4)) + OperatorExpr::identity(R(ratio(1, 2))),
                         space.states_up_to(4))
            .ok);
  // Without the central term the bracket fails.
  CHECK_FALSE(commutator_check(space, "", L(2), L(-2), L(0).scaled(R(4)), space.states_up_to(2)).ok);
}

TEST_CASE("Gram and orthogonal-basis Virasoro generators agree") {
  for (bool extra : {false, true}) {
    FockSpace space = lattice_space(3, extra);
    std::vector<int> colors;
    for (int c = 0; c < space.colors; ++c) colors.push_back(c);
    auto basis = orthogonal_basis(space, colors);
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = 0; b < a; ++b) CHECK(pairing(space, basis[a], basis[b]).is_zero());
    auto states = sector_states(space, 3, 2);
    for (int n = -2; n <= 2; ++n)
      CHECK(identity_check(space, "", virasoro_gram(space, colors, n), virasoro_orthogonal(space, basis, n), states).ok);
  }
}

TEST_CASE("Chevalley relations in the graded convention") {
  FockSpace k2 = lattice_space(2);
  auto vacuum_sector = k2.states_up_to(2, fundamental_weight(2, 0));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(commutator_check(k2, "", chevalley_e(k2, i), chevalley_f(k2, j),
                             i == j ? chevalley_h(k2, j) : OperatorExpr(), vacuum_sector)
                .ok);
  CHECK(chevalley_holds(k2, 2, sector_states(k2, 2, 2), FKConvention::Graded));
  FockSpace k3 = lattice_space(3);
  CHECK(chevalley_holds(k3, 3, sector_states(k3, 3, 1), FKConvention::Graded));
}

TEST_CASE("the literal Frenkel-Kac assignment violates the Chevalley relations") {
  FockSpace k2 = lattice_space(2);
  CHECK_FALSE(chevalley_holds(k2, 2, sector_states(k2, 2, 1), FKConvention::Literal));
  FockSpace k3 = lattice_space(3);
  CHECK_FALSE(chevalley_holds(k3, 3, sector_states(k3, 3, 1), FKConvention::Literal));
}

TEST_CASE("the one-line primary-field commutator fails while the mode-resolved form holds") {
  R a = R::var("a"), b = R::var("b");
  FockSpace space = heisenberg_space(R(1));
  auto states = space.states_up_to(2);
  FieldVector v{R(1)};
  R delta = -(a * b) / R(2);
  auto V = [&](int p) { return vertex(v, a, b, Rational(p)); };
  const int n = 1, p = 2;
  OperatorExpr lhs = commutator(virasoro_gram(space, {0}, n), V(p));
  OperatorExpr one_line = V(p - n).scaled(R(p - n) + delta * R(n + 1));
  CHECK_FALSE(identity_check(space, "", lhs, one_line, states).ok);
  OperatorExpr resolved = V(p - n).scaled(R(p - n) + R(2 * n) * delta) + (mode(v, n) * V(p)).scaled(b);
  CHECK(identity_check(space, "", lhs, resolved, states).ok);
}

TEST_CASE("lattice primary-field lemma holds with the zero-mode term added") {
  FockSpace space = lattice_space(2);
  std::vector<FockState> states;
  for (int j = 0; j < 2; ++j)
    for (auto& s : space.states_up_to(2, fundamental_weight(2, j))) states.push_back(s);
  Rational v = ratio(1, 2), delta = v * v;
  FieldVector g{R(v)};
  auto W = [&](int p) { return vertex(g, R(1), R(-1), Rational(p)); };
  for (int n : {-1, 1, 2}) {
    const int p = 1;
    OperatorExpr lhs = commutator(virasoro_gram(space, {0}, n), W(p));
    OperatorExpr base = W(p - n).scaled(R(Rational(p - n) + delta * (n + 1)));
    OperatorExpr zero = mode(g, 0) * W(p - n) - mode(g, n) * W(p);
    CHECK(identity_check(space, "", lhs, base + zero, states).ok);
    CHECK_FALSE(identity_check(space, "", lhs, base - zero, states).ok);
  }
}

TEST_CASE("vertex matrix element between vacua is one") {
  R beta = beta_of(e1(), e2());
  JackTable table(2, beta);
  R mu = R::var("mu");
  CHECK(co_matrix_element(-(mu / e2()), (mu + e1() + e2()) / e2(), Partition(), Partition(), table, e1(), e2()) ==
        R(1));
}

TEST_CASE("calibrated vertex matrix elements reproduce the bifundamental factors") {
  R mu = R::var("mu");
  R beta = beta_of(e1(), e2());
  JackTable table(3, beta);
  SignCalibration cal = calibrate_co_sign(e1(), e2(), mu, table);
  CHECK(cal.by_first);
  CHECK(cal.by_second);
  for (int n1 = 0; n1 <= 3; ++n1)
    for (const auto& l1 : partitions_of(n1))
      for (int n2 = 0; n2 <= 3 - n1; ++n2)
        for (const auto& l2 : partitions_of(n2))
          CHECK(co_matrix_element(-(mu / e2()), (mu + e1() + e2()) / e2(), l1, l2, table, e1(), e2()) *
                    R(cal.sign(l1, l2)) ==
                m_bifund(l1, l2, mu, e1(), e2()) * R(n2 % 2 == 0 ? 1 : -1));
}

TEST_CASE("integrals of motion on Jack functions") {
  R beta = beta_of(e1(), e2());
  JackTable table(3, beta);
  FockSpace space = heisenberg_space(beta.inverse());
  FockVector j21 = jack_fock_vector(table, P({2, 1}));
  CHECK(apply(space, integral_I1(beta), j21) == j21.scaled(R(3)));
  FockVector j2 = jack_fock_vector(table, P({2}));
  CHECK(apply(space, integral_I2(beta, e1()), j2) == j2.scaled(-e2()));
  FockVector j11 = jack_fock_vector(table, P({1, 1}));
  CHECK(apply(space, integral_I2(beta, e1()), j11) == j11.scaled(-e1()));
}

TEST_CASE("Gaiotto state") {
  R beta = beta_of(e1(), e2());
  R eta = R::var("eta");
  FockSpace space = heisenberg_space(beta.inverse());
  FockVector g = gaiotto_vector(space, {eta}, 4);
  FockVector p2g = apply(space, mode(space.unit(0), 2), g).truncated(3);
  CHECK(p2g.is_zero());
  FockVector p1g = apply(space, mode(space.unit(0), 1), g).truncated(3);
  CHECK(p1g == g.truncated(3).scaled(eta * beta.inverse()));
  CHECK(whittaker_check(space, {eta}, 4).ok);

  JackTable table(1, beta);
  FockVector g1;
  for (const auto& [s, c] : g.terms())
    if (s.grade() == 1) g1.add(s, c);
  CHECK(g1 == hilbert_class(table, 1, e1(), e2()).scaled(eta * e2()));
}

TEST_CASE("pairing of one-boson states") {
  R gram = R::var("beta").inverse();
  FockSpace space = heisenberg_space(gram);
  FockVector v = state({P({1, 1})});
  CHECK(fock_pairing(space, v, v) == R(2) * gram * gram);
  CHECK(fock_pairing(space, v, state({P({2})})).is_zero());
}

TEST_CASE("fixed-point classes have the Euler-class normalization") {
  R beta = beta_of(e1(), e2());
  JackTable table(3, beta);
  FockSpace space = heisenberg_space(beta.inverse());
  for (int n = 1; n <= 3; ++n)
    for (const auto& l : partitions_of(n)) {
      FockVector c = fixed_point_class(table, l, e1(), e2());
      CHECK(c == jack_fock_vector(table, l).scaled(eu_plus(l, e1(), e2())));
      // <[l],[l]> = eu_+ eu_- up to sign, the tangent Euler class at the fixed point.
      R self = fock_pairing(space, c, c);
      R tangent = eu_plus(l, e1(), e2()) * eu_minus(l, e1(), e2());
      CHECK((self == tangent || self == -tangent));
    }
}
