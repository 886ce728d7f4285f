#include <stdexcept>

#include "agt/errors.hpp"
#include "agt/fock.hpp"

namespace agt {

int FockState::grade() const {
  int g = 0;
  for (const auto& p : modes) g += p.weight();
  return g;
}

std::string FockState::to_string() const {
  std::string s = "[";
  for (size_t c = 0; c < modes.size(); ++c) s += (c ? "|" : "") + modes[c].to_string();
  s += "]";
  if (!label.empty()) {
    s += "@(";
    for (size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + label[i].get_str();
    s += ")";
  }
  return s;
}

bool operator<(const FockState& a, const FockState& b) {
  int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  if (a.modes != b.modes) return a.modes < b.modes;
  return a.label < b.label;
}

FockVector FockVector::basis(const FockState& s, const RatFunc& c) {
  FockVector v;
  v.add(s, c);
  return v;
}

RatFunc FockVector::coefficient(const FockState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RatFunc() : it->second;
}

int FockVector::max_grade() const {
  int g = 0;
  for (const auto& kv : terms_) g = std::max(g, kv.first.grade());
  return g;
}

void FockVector::add(const FockState& s, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FockVector FockVector::scaled(const RatFunc& c) const {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [s, x] : terms_) out.terms_.emplace(s, x * c);
  return out;
}

FockVector FockVector::truncated(int g) const {
  FockVector out;
  for (const auto& [s, x] : terms_)
    if (s.grade() <= g) out.terms_.emplace(s, x);
  return out;
}

FockVector FockVector::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  FockVector out;
  for (const auto& [s, x] : terms_) out.add(s, f(x));
  return out;
}

FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }

FockState FockSpace::vacuum(const std::vector<Rational>& label) const {
  FockState s;
  s.modes.assign(colors, Partition());
  s.label = label;
  return s;
}

std::vector<FockState> FockSpace::states(int grade, const std::vector<Rational>& label) const {
  std::vector<FockState> out;
  for (auto& t : enumerate(colors, grade)) out.push_back(FockState{std::move(t), label});
  return out;
}

std::vector<FockState> FockSpace::states_up_to(int grade, const std::vector<Rational>& label) const {
  std::vector<FockState> out;
  for (int g = 0; g <= grade; ++g)
    for (auto& s : states(g, label)) out.push_back(std::move(s));
  return out;
}

FieldVector FockSpace::unit(int c) const {
  FieldVector v(colors);
  v.at(c) = RatFunc(1);
  return v;
}

FockSpace heisenberg_space(const RatFunc& gram) {
  FockSpace s;
  s.colors = 1;
  s.gram = {{gram}};
  s.lattice_root = {-1};
  return s;
}

FockSpace patch_space(int k, const RatFunc& e1, const RatFunc& e2) {
  FockSpace s;
  s.colors = k;
  s.gram.assign(k, std::vector<RatFunc>(k));
  for (int i = 1; i <= k; ++i) s.gram[i - 1][i - 1] = patch_weights(k, i, e1, e2).beta().inverse();
  s.lattice_root.assign(k, -1);
  return s;
}

FockSpace lattice_space(int k, bool extra_boson) {
  if (k < 2) throw std::invalid_argument("lattice space needs k >= 2");
  FockSpace s;
  s.k = k;
  s.colors = k - 1 + (extra_boson ? 1 : 0);
  s.gram.assign(s.colors, std::vector<RatFunc>(s.colors));
  for (int i = 1; i < k; ++i)
    for (int l = 1; l < k; ++l) s.gram[i - 1][l - 1] = RatFunc(cartan(k, i, l));
  for (int i = 0; i < k - 1; ++i) s.lattice_root.push_back(i);
  if (extra_boson) {
    s.gram[k - 1][k - 1] = RatFunc(1);
    s.lattice_root.push_back(-1);
  }
  return s;
}

std::vector<Rational> fundamental_weight(int k, int j) {
  std::vector<Rational> w(k - 1);
  for (int i = 1; i < k; ++i) w[i - 1] = cartan_inverse(k, i, j);
  return w;
}

int label_sector(int k, const std::vector<Rational>& label) {
  if (static_cast<int>(label.size()) != k - 1) throw MissingLatticeLabel("lattice label has the wrong rank");
  for (int j = 0; j < k; ++j) {
    auto w = fundamental_weight(k, j);
    bool ok = true;
    for (int i = 0; i < k - 1 && ok; ++i) ok = Rational(label[i] - w[i]).get_den() == 1;
    if (ok) return j;
  }
  throw InconsistentCharge("label is not in a coset Q + omega_j");
}

int cocycle(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational e = 0;
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    e += a[i] * b[i];
    if (i + 1 < n) e += a[i] * b[i + 1];
  }
  if (e.get_den() != 1) throw InconsistentCharge("cocycle needs root-lattice arguments");
  return mpz_class(e.get_num() % 2) == 0 ? 1 : -1;
}

}  // namespace agt
