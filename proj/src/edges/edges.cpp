#include "agt/edges.hpp"

#include <stdexcept>

#include "agt/ale.hpp"
#include "agt/errors.hpp"

namespace agt {

namespace {

long floor_div2(long x) { return x >= 0 ? x / 2 : -((-x + 1) / 2); }

long as_integer(const Rational& x, const char* what) {
  if (x.get_den() != 1) throw InconsistentCharge(what);
  return x.get_num().get_si();
}

// Appends sign * sum_{i=i0}^{i1} sum_{t=t0}^{t1(i)} chi_1^{x(i)} chi_2^{y * t}.
template <class Upper, class Exp1>
void add_block(std::vector<EdgeMonomial>& out, int sign, long i0, long i1, long t0, Upper t1, Exp1 x, int y) {
  for (long i = i0; i <= i1; ++i)
    for (long t = t0; t <= t1(i); ++t) out.push_back({sign, x(i), y * t});
}

// Is i a root of C_nn/2 i^2 -/+ i w.Ce_n + (w.Cw - cc)/2 = 0?
bool solves(int k, int n, const std::vector<Rational>& w, const Rational& cc, long i, int sign) {
  std::vector<Rational> e(k - 1, Rational(0));
  e[n - 1] = 1;
  Rational lin = quadratic_C(k, w, e);
  Rational val = cartan(k, n, n) / 2 * i * i - sign * i * lin + (quadratic_C(k, w, w) - cc) / 2;
  return val == 0;
}

}  // namespace

EdgeData edge_chern(const std::vector<Rational>& v, int k, CinvIndex c) {
  EdgeData out;
  out.k = k;
  out.v = v;
  out.j = holonomy_of(v, k);
  int j = out.j;
  auto cinv = [&](int a, int b) -> Rational {
    if (b == 0 || a >= k) return 0;
    return cartan_inverse(k, a, b);
  };
  for (int n = 1; n < k; ++n) out.s.push_back(as_integer(v[n - 1] - cinv(n, j), "v - C^{-1} e_j is not integral"));

  // d_n^{+-} from the quadratic conditions, scanned over 0 <= i <= |s_n|.
  std::vector<Rational> w = v;
  out.m = k - 1;
  bool found = false;
  for (int n = 1; n < k; ++n) {
    long sn = out.s[n - 1];
    Rational cc = c == CinvIndex::Edge ? cinv(n, n) : cinv(j, j);
    long bound = sn >= 0 ? sn : -sn;
    long d = bound;
    for (long i = 0; i <= bound; ++i)
      if (solves(k, n, w, cc, i, sn >= 0 ? 1 : -1)) {
        d = i;
        if (!found) {
          out.m = n;
          found = true;
        }
        break;
      }
    out.d.push_back(d);
    w[n - 1] -= sn;
  }

  out.monomials.assign(k - 1, {});
  for (int n = 1; n <= out.m; ++n) {
    std::vector<EdgeMonomial> list;
    long a = out.s[n - 1];
    long b = (n == j ? 1 : 0) - (n + 1 < k ? out.s[n] : 0);
    long d = out.d[n - 1];
    long fb = floor_div2(b), fmb = floor_div2(-b);
    // Coefficients below are those of the Chern character list.
    if (a > 0) {
      if (b + 2 * (a - d) >= 0) {
        add_block(list, -1, a - d, a - 1, 0, [&](long i) { return 2 * i + b; }, [&](long i) { return i + fb; }, 1);
      } else if (b + 2 * a >= 2) {
        add_block(list, 1, a - d, -fb - 1, 1, [&](long i) { return -2 * i - b - 1; },
                  [&](long i) { return i - fmb; }, -1);
        add_block(list, -1, -fb, a - 1, 0, [&](long i) { return 2 * i + b; }, [&](long i) { return i + fb; }, 1);
      } else {
        add_block(list, 1, a - d, a - 1, 1, [&](long i) { return -2 * i - b - 1; }, [&](long i) { return i - fmb; },
                  -1);
      }
    } else if (a < 0) {
      if (b + 2 * a < 2 - 2 * d) {
        add_block(list, -1, 1 - a - d, -a, 1, [&](long i) { return 2 * i - b - 1; }, [&](long i) { return -i - fmb; },
                  -1);
      } else if (b + 2 * a < 0) {
        add_block(list, 1, 1 - a - d, fb, 0, [&](long i) { return -2 * i + b; }, [&](long i) { return -i + fb; }, 1);
        add_block(list, -1, fb + 1, -a, 1, [&](long i) { return 2 * i - b - 1; }, [&](long i) { return -i - fmb; },
                  -1);
      } else {
        add_block(list, 1, 1 - a - d, -a, 0, [&](long i) { return -2 * i + b; }, [&](long i) { return -i + fb; }, 1);
      }
    }
    for (auto& mono : list) mono.sign = -mono.sign;
    out.monomials[n - 1] = std::move(list);
  }
  return out;
}

RatFunc ell_from_monomials(const std::vector<EdgeMonomial>& list, const RatFunc& e1, const RatFunc& e2,
                           const RatFunc& mu) {
  RatFunc num(1), den(1);
  for (const auto& m : list) {
    RatFunc f = mu + RatFunc(m.a) * e1 + RatFunc(m.b) * e2;
    if (m.sign > 0)
      num *= f;
    else
      den *= f;
  }
  return num / den;
}

EdgeFactor edge_factor(const EdgeData& data, const RatFunc& e1, const RatFunc& e2, const RatFunc& mu) {
  EdgeFactor f;
  f.ell = RatFunc(1);
  for (int n = 1; n < data.k; ++n) {
    PatchWeights w = patch_weights(data.k, n, e1, e2);
    const auto& list = data.monomials[n - 1];
    f.ell *= ell_from_monomials(list, w.e1, w.e2, mu);
    for (const auto& m : list) {
      f.signed_count += m.sign;
      f.c1 -= RatFunc(m.sign) * (RatFunc(m.a) * w.e1 + RatFunc(m.b) * w.e2);
    }
  }
  return f;
}

RatFunc blowup_oracle_k2(const Rational& v, const RatFunc& e1, const RatFunc& e2, const RatFunc& mu) {
  Rational twice = v * 2;
  if (twice.get_den() != 1) throw InconsistentCharge("k = 2 needs 2v integral");
  long t = twice.get_num().get_si();
  long fl = floor_div2(t);
  long frac2 = t - 2 * fl;  // 2{v}
  RatFunc out(1);
  if (fl > 0) {
    for (long i = 0; i <= fl - 1; ++i)
      for (long jj = 0; jj <= 2 * i + frac2; ++jj) out *= mu + RatFunc(i) * e1 + RatFunc(jj) * e2;
  } else if (fl < 0) {
    for (long i = 1; i <= -fl; ++i)
      for (long jj = 1; jj <= 2 * i - frac2 - 1; ++jj) out *= mu + RatFunc(frac2 - i) * e1 - RatFunc(jj) * e2;
  }
  return out;
}

}  // namespace agt
