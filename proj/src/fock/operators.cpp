#include <algorithm>
#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/fock.hpp"

namespace agt {

OperatorExpr OperatorExpr::identity(const RatFunc& c) {
  OperatorExpr e;
  if (!c.is_zero()) e.terms_.push_back({c, {}});
  return e;
}

OperatorExpr OperatorExpr::of(Letter l, const RatFunc& c) {
  OperatorExpr e;
  if (!c.is_zero()) e.terms_.push_back({c, {std::move(l)}});
  return e;
}

OperatorExpr& OperatorExpr::operator+=(const OperatorExpr& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

OperatorExpr& OperatorExpr::operator-=(const OperatorExpr& o) { return *this += o.scaled(RatFunc(-1)); }

OperatorExpr OperatorExpr::scaled(const RatFunc& c) const {
  OperatorExpr e;
  if (c.is_zero()) return e;
  for (const auto& t : terms_) e.terms_.push_back({t.coeff * c, t.word});
  return e;
}

OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) {
  OperatorExpr e;
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) {
      OperatorExpr::Term t{x.coeff * y.coeff, x.word};
      t.word.insert(t.word.end(), y.word.begin(), y.word.end());
      e.terms_.push_back(std::move(t));
    }
  return e;
}

OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a -= b; }
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

namespace {

Partition add_part(const Partition& p, int m) {
  std::vector<int> parts = p.parts();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), m, std::greater<int>()), m);
  return Partition(std::move(parts));
}

Partition remove_part(const Partition& p, int m) {
  std::vector<int> parts = p.parts();
  parts.erase(std::find(parts.begin(), parts.end(), m));
  return Partition(std::move(parts));
}

RatFunc zero_mode(const FockSpace& space, const FieldVector& v, const std::vector<Rational>& label) {
  RatFunc total;
  for (int c = 0; c < space.colors; ++c) {
    if (v[c].is_zero() || space.lattice_root[c] < 0) continue;
    if (label.empty()) throw MissingLatticeLabel("zero mode needs a lattice label");
    int i = space.lattice_root[c] + 1;
    Rational s = 0;
    for (int l = 1; l < space.k; ++l) s += cartan(space.k, i, l) * label[l - 1];
    total += v[c] * RatFunc(s);
  }
  return total;
}

// a^v_m on a single state, accumulated into out with weight c.
void mode_on_state(const FockSpace& space, const FieldVector& v, int m, const FockState& s, const RatFunc& c,
                   FockVector& out) {
  if (m < 0) {
    for (int col = 0; col < space.colors; ++col) {
      if (v[col].is_zero()) continue;
      FockState t = s;
      t.modes[col] = add_part(t.modes[col], -m);
      out.add(t, c * v[col]);
    }
    return;
  }
  if (m == 0) {
    RatFunc z = zero_mode(space, v, s.label);
    if (!z.is_zero()) out.add(s, c * z);
    return;
  }
  for (int d = 0; d < space.colors; ++d) {
    int mult = s.modes[d].multiplicity(m);
    if (mult == 0) continue;
    RatFunc w;
    for (int col = 0; col < space.colors; ++col)
      if (!v[col].is_zero() && !space.gram[col][d].is_zero()) w += v[col] * space.gram[col][d];
    if (w.is_zero()) continue;
    FockState t = s;
    t.modes[d] = remove_part(t.modes[d], m);
    out.add(t, c * w * RatFunc(Rational(static_cast<long>(m) * mult)));
  }
}

FockVector apply_mode(const FockSpace& space, const FieldVector& v, int m, const FockVector& in) {
  FockVector out;
  for (const auto& [s, c] : in.terms()) mode_on_state(space, v, m, s, c, out);
  return out;
}

FockVector apply_bilinear(const FockSpace& space, const BilinearLetter& b, const FockVector& in) {
  FockVector out;
  for (const auto& [s, c] : in.terms()) {
    int g = s.grade();
    FockVector one = FockVector::basis(s, c);
    for (int x = b.n - g; x <= g; ++x) {
      int y = b.n - x;
      for (const auto& piece : b.pieces) {
        // Normal order: the larger mode index acts first.
        const FieldVector& first = x >= y ? piece.u : piece.v;
        const FieldVector& second = x >= y ? piece.v : piece.u;
        int mf = std::max(x, y), ms = std::min(x, y);
        FockVector t = apply_mode(space, first, mf, one);
        if (t.is_zero()) continue;
        t = apply_mode(space, second, ms, t);
        out += t.scaled(piece.w * RatFunc(ratio(1, 2)));
      }
    }
  }
  return out;
}

// sum over partitions lambda of n of coef^{l(lambda)} / z_lambda a^v_{sign * lambda}
FockVector exponential_part(const FockSpace& space, const FieldVector& v, const RatFunc& coef, int n, int sign,
                            const FockVector& in) {
  FockVector out;
  if (n == 0) return in;
  if (coef.is_zero()) return out;
  for (const auto& lambda : partitions_of(n)) {
    FockVector t = in;
    for (int part : lambda.parts()) {
      t = apply_mode(space, v, sign * part, t);
      if (t.is_zero()) break;
    }
    if (t.is_zero()) continue;
    RatFunc w = pow(coef, lambda.length()) / RatFunc(Rational(lambda.z()));
    out += t.scaled(w);
  }
  return out;
}

FockVector apply_vertex(const FockSpace& space, const VertexLetter& vx, const FockVector& in) {
  FockVector out;
  for (const auto& [s, c] : in.terms()) {
    Rational offset = 0;
    FockState shifted = s;
    if (!vx.shift.empty()) {
      if (s.label.empty()) throw MissingLatticeLabel("lattice shift needs a lattice label");
      int k = space.k;
      offset = quadratic_C(k, vx.shift, vx.shift) / 2 + quadratic_C(k, vx.shift, s.label);
      for (size_t i = 0; i < s.label.size(); ++i) shifted.label[i] += vx.shift[i];
    }
    Rational power = vx.power;
    if (vx.sector_delta >= 1 && label_sector(space.k, s.label) == vx.sector_delta) power += vx.sector_sign;
    int g = s.grade();
    FockVector base = FockVector::basis(shifted, c);
    for (int B = 0; B <= g; ++B) {
      Rational A = power - offset + B;
      if (A.get_den() != 1 || A < 0) continue;
      FockVector t = exponential_part(space, vx.v, vx.beta, B, 1, base);
      if (t.is_zero()) continue;
      out += exponential_part(space, vx.v, vx.alpha, static_cast<int>(A.get_num().get_si()), -1, t);
    }
  }
  return out;
}

FockVector apply_cocycle(const FockSpace& space, const CocycleLetter& cl, const FockVector& in) {
  FockVector out;
  for (const auto& [s, c] : in.terms()) {
    if (s.label.empty()) throw MissingLatticeLabel("cocycle needs a lattice label");
    int j = label_sector(space.k, s.label);
    auto beta = s.label;
    auto w = fundamental_weight(space.k, j);
    for (size_t i = 0; i < beta.size(); ++i) beta[i] -= w[i];
    int e = cl.gamma_first ? cocycle(cl.gamma, beta) : cocycle(beta, cl.gamma);
    out.add(s, e == 1 ? c : -c);
  }
  return out;
}

FockVector apply_cubic(const FockSpace& space, const CubicLetter& cu, const FockVector& in) {
  FieldVector e = space.unit(0);
  FockVector out;
  RatFunc half_beta = cu.beta * RatFunc(ratio(1, 2));
  RatFunc lin = (cu.beta - RatFunc(1)) * RatFunc(ratio(-1, 2));
  for (const auto& [s, c] : in.terms()) {
    int g = s.grade();
    FockVector one = FockVector::basis(s, c);
    FockVector acc;
    for (int m = 1; m <= g; ++m)
      for (int n = 1; m + n <= g; ++n)
        acc += apply_mode(space, e, -m, apply_mode(space, e, -n, apply_mode(space, e, m + n, one)));
    for (int m = 1; m <= g; ++m)
      for (int n = 1; n <= g; ++n)
        acc += apply_mode(space, e, -m - n, apply_mode(space, e, n, apply_mode(space, e, m, one)));
    acc = acc.scaled(half_beta);
    for (int m = 2; m <= g; ++m)
      acc += apply_mode(space, e, -m, apply_mode(space, e, m, one)).scaled(lin * RatFunc(m - 1));
    out += acc.scaled(cu.eps1);
  }
  return out;
}

void check_bound(const FockSpace& space, const FockVector& v) {
  if (v.max_grade() > space.working_bound)
    throw GradeOverflow("intermediate state exceeds the working grade bound");
}

}  // namespace

FockVector apply(const FockSpace& space, const Letter& letter, const FockVector& v) {
  FockVector out = std::visit(
      [&](const auto& l) -> FockVector {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, ModeLetter>) return apply_mode(space, l.v, l.m, v);
        if constexpr (std::is_same_v<T, BilinearLetter>) return apply_bilinear(space, l, v);
        if constexpr (std::is_same_v<T, VertexLetter>) return apply_vertex(space, l, v);
        if constexpr (std::is_same_v<T, CocycleLetter>) return apply_cocycle(space, l, v);
        if constexpr (std::is_same_v<T, CubicLetter>) return apply_cubic(space, l, v);
      },
      letter);
  check_bound(space, out);
  return out;
}

FockVector apply(const FockSpace& space, const OperatorExpr& op, const FockVector& v) {
  FockVector out;
  for (const auto& t : op.terms()) {
    FockVector w = v;
    for (auto it = t.word.rbegin(); it != t.word.rend() && !w.is_zero(); ++it) w = apply(space, *it, w);
    out += w.scaled(t.coeff);
  }
  return out;
}

OperatorExpr mode(const FieldVector& v, int m) { return OperatorExpr::of(ModeLetter{v, m}); }

RatFunc pairing(const FockSpace& space, const FieldVector& u, const FieldVector& v) {
  RatFunc s;
  for (int c = 0; c < space.colors; ++c)
    for (int d = 0; d < space.colors; ++d)
      if (!u[c].is_zero() && !v[d].is_zero() && !space.gram[c][d].is_zero()) s += u[c] * space.gram[c][d] * v[d];
  return s;
}

OperatorExpr virasoro_gram(const FockSpace& space, const std::vector<int>& colors, int n) {
  size_t r = colors.size();
  std::vector<std::vector<RatFunc>> a(r, std::vector<RatFunc>(r)), inv(r, std::vector<RatFunc>(r));
  for (size_t i = 0; i < r; ++i) {
    for (size_t j = 0; j < r; ++j) a[i][j] = space.gram[colors[i]][colors[j]];
    inv[i][i] = RatFunc(1);
  }
  for (size_t col = 0; col < r; ++col) {
    size_t piv = col;
    while (piv < r && a[piv][col].is_zero()) ++piv;
    if (piv == r) throw SingularParameter("degenerate Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    RatFunc s = a[col][col].inverse();
    for (size_t j = 0; j < r; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (size_t i = 0; i < r; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      RatFunc f = a[i][col];
      for (size_t j = 0; j < r; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  BilinearLetter b;
  b.n = n;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (!inv[i][j].is_zero()) b.pieces.push_back({inv[i][j], space.unit(colors[i]), space.unit(colors[j])});
  return OperatorExpr::of(std::move(b));
}

std::vector<FieldVector> orthogonal_basis(const FockSpace& space, const std::vector<int>& colors) {
  std::vector<FieldVector> basis;
  for (int c : colors) {
    FieldVector v = space.unit(c);
    for (const auto& b : basis) {
      RatFunc f = pairing(space, v, b) / pairing(space, b, b);
      for (int d = 0; d < space.colors; ++d) v[d] -= f * b[d];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

OperatorExpr virasoro_orthogonal(const FockSpace& space, const std::vector<FieldVector>& basis, int n) {
  BilinearLetter b;
  b.n = n;
  for (const auto& v : basis) b.pieces.push_back({pairing(space, v, v).inverse(), v, v});
  return OperatorExpr::of(std::move(b));
}

OperatorExpr vertex(const FieldVector& v, const RatFunc& alpha, const RatFunc& beta, const Rational& power,
                    const std::vector<Rational>& shift) {
  return OperatorExpr::of(VertexLetter{v, alpha, beta, shift, power});
}

namespace {

std::vector<Rational> root(int k, int i, int sign) {
  std::vector<Rational> g(k - 1, Rational(0));
  g[i - 1] = sign;
  return g;
}

FieldVector root_field(const FockSpace& space, int i, int sign) {
  FieldVector v(space.colors);
  v[i - 1] = RatFunc(sign);
  return v;
}

OperatorExpr fk_vertex(const FockSpace& space, int i, int m, FKConvention conv, int sign) {
  if (!space.has_lattice() || i < 1 || i >= space.k) throw std::invalid_argument("Frenkel-Kac index out of range");
  VertexLetter vx{root_field(space, i, sign), RatFunc(1), RatFunc(-1), root(space.k, i, sign), Rational(-m)};
  if (conv == FKConvention::Literal) {
    vx.power = m;
    vx.sector_delta = i;
    vx.sector_sign = sign;
  }
  OperatorExpr e = OperatorExpr::of(std::move(vx));
  if (conv == FKConvention::Literal) return e * OperatorExpr::of(CocycleLetter{root(space.k, i, 1), sign > 0});
  // F carries -epsilon(gamma_i, beta) so that [E_i, F_i] = +H_i.
  OperatorExpr c = OperatorExpr::of(CocycleLetter{root(space.k, i, 1), true});
  return (e * c).scaled(RatFunc(sign));
}

}  // namespace

OperatorExpr fk_E(const FockSpace& space, int i, int m, FKConvention conv) { return fk_vertex(space, i, m, conv, 1); }
OperatorExpr fk_F(const FockSpace& space, int i, int m, FKConvention conv) { return fk_vertex(space, i, m, conv, -1); }
OperatorExpr fk_H(const FockSpace& space, int i, int m) { return mode(root_field(space, i, 1), m); }

OperatorExpr chevalley_e(const FockSpace& space, int i, FKConvention conv) {
  int k = space.k;
  if (i != 0) return fk_E(space, i, 0, conv);
  OperatorExpr x = fk_F(space, 1, 1, conv);
  for (int l = 2; l < k; ++l) x = commutator(fk_F(space, l, 0, conv), x);
  return x;
}

OperatorExpr chevalley_f(const FockSpace& space, int i, FKConvention conv) {
  int k = space.k;
  if (i != 0) return fk_F(space, i, 0, conv);
  OperatorExpr x = fk_E(space, k - 1, -1, conv);
  for (int l = k - 2; l >= 1; --l) x = commutator(fk_E(space, l, 0, conv), x);
  return x;
}

OperatorExpr chevalley_h(const FockSpace& space, int i) {
  if (i != 0) return fk_H(space, i, 0);
  OperatorExpr h = OperatorExpr::identity();
  for (int l = 1; l < space.k; ++l) h -= fk_H(space, l, 0);
  return h;
}

int affine_cartan(int k, int i, int j) {
  if (i == j) return 2;
  if (k == 2) return -2;
  int d = ((i - j) % k + k) % k;
  return (d == 1 || d == k - 1) ? -1 : 0;
}

OperatorExpr integral_I1(const RatFunc& beta) {
  BilinearLetter b;
  b.n = 0;
  b.pieces.push_back({beta, FieldVector{RatFunc(1)}, FieldVector{RatFunc(1)}});
  return OperatorExpr::of(std::move(b));
}

OperatorExpr integral_I2(const RatFunc& beta, const RatFunc& eps1) { return OperatorExpr::of(CubicLetter{beta, eps1}); }

}  // namespace agt
