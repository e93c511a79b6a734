#include "mordell/thue.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mordell {
namespace {

inline i128 t_abs(i128 v) { return v < 0 ? -v : v; }
inline Int t_abs(const Int& v) { return abs(v); }

inline i128 t_isqrt(i128 n) { return i128(isqrt_u128(u128(n))); }
inline Int t_isqrt(const Int& n) { return isqrt(n); }

inline i128 t_icbrt(i128 n) {
  if (n <= 0) return 0;
  i128 c = i128(std::cbrtl(static_cast<long double>(n)));
  while (c > 0 && c * c * c > n) --c;
  while ((c + 1) * (c + 1) * (c + 1) <= n) ++c;
  return c;
}
inline Int t_icbrt(const Int& n) { return n <= 0 ? Int(0) : icbrt(n); }

template <class T>
T fdiv(T n, T d) {
  T q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) q -= 1;
  return q;
}

// All integer roots of u^3 + c2 u^2 + c1 u + c0. The search interval comes
// from the 2*max(|c2|, |c1|^(1/2), |c0|^(1/3)) root bound; it is cut at the
// exact integer floors/ceilings of the two critical points so that every
// segment is monotone and bisection cannot skip interior sign changes.
template <class T>
void monic_roots(const T& c2, const T& c1, const T& c0, std::vector<T>& out) {
  out.clear();
  auto p = [&](const T& u) { return ((u + c2) * u + c1) * u + c0; };
  T mx = t_abs(c2);
  T s1 = t_isqrt(t_abs(c1)) + 1;
  if (s1 > mx) mx = s1;
  T s2 = t_icbrt(t_abs(c0)) + 2;
  if (s2 > mx) mx = s2;
  const T bound = 2 * mx + 2;

  T seg_lo[3], seg_hi[3];
  int nseg = 0;
  const T disc4 = c2 * c2 - 3 * c1;
  if (disc4 > 0) {
    const T s = t_isqrt(disc4);
    T m1 = fdiv(T(-c2 - s), T(3));
    while (3 * (m1 + 1) + c2 <= 0 &&
           (3 * (m1 + 1) + c2) * (3 * (m1 + 1) + c2) >= disc4) {
      m1 += 1;
    }
    while (!(3 * m1 + c2 <= 0 && (3 * m1 + c2) * (3 * m1 + c2) >= disc4)) {
      m1 -= 1;
    }
    T m2 = -fdiv(T(c2 - s), T(3));
    while (3 * (m2 - 1) + c2 >= 0 &&
           (3 * (m2 - 1) + c2) * (3 * (m2 - 1) + c2) >= disc4) {
      m2 -= 1;
    }
    while (!(3 * m2 + c2 >= 0 && (3 * m2 + c2) * (3 * m2 + c2) >= disc4)) {
      m2 += 1;
    }
    seg_lo[0] = -bound;
    seg_hi[0] = m1;
    seg_lo[1] = m1 + 1;
    seg_hi[1] = m2 - 1;
    seg_lo[2] = m2;
    seg_hi[2] = bound;
    nseg = 3;
  } else {
    seg_lo[0] = -bound;
    seg_hi[0] = bound;
    nseg = 1;
  }

  auto push = [&](const T& r) {
    for (const T& v : out) {
      if (v == r) return;
    }
    out.push_back(r);
  };

  for (int i = 0; i < nseg; ++i) {
    T lo = seg_lo[i] < -bound ? T(-bound) : seg_lo[i];
    T hi = seg_hi[i] > bound ? T(bound) : seg_hi[i];
    if (lo > hi) continue;
    T plo = p(lo), phi = p(hi);
    if (plo == 0) push(lo);
    if (phi == 0) push(hi);
    bool opposite = (plo < 0 && phi > 0) || (plo > 0 && phi < 0);
    if (!opposite) continue;
    const bool inc = plo < phi;
    while (lo + 1 < hi) {
      T mid = fdiv(T(lo + hi), T(2));
      T v = p(mid);
      if (v == 0) {
        push(mid);
        break;
      }
      if ((v < 0) == inc) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }
}

// Per-form modular screen: for each small modulus m, the table marks the
// residues y mod m for which the monic cubic in u can vanish mod m at all.
// Skipping y values outside the table is a pure necessary-condition filter
// and can never discard a genuine solution.
struct Screen {
  static constexpr int kNumMods = 6;
  static constexpr int kMods[kNumMods] = {16, 9, 5, 7, 11, 13};
  bool adm[kNumMods][16];

  static i64 residue(const Int& v, int m) {
    return i64(mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(m)));
  }

  explicit Screen(const BinaryCubicForm& f) {
    for (int i = 0; i < kNumMods; ++i) {
      const int m = kMods[i];
      const i64 am = residue(f.a, m);
      const i64 bm = residue(f.b, m);
      const i64 cm = residue(f.c, m);
      const i64 dm = residue(f.d, m);
      for (int y = 0; y < m; ++y) {
        bool ok = false;
        const i64 k2 = (3 * bm * y) % m;
        const i64 k1 = (3 * am * cm % m) * (i64(y) * y % m) % m;
        const i64 k0 =
            ((am * am % m) * (dm * (i64(y) * y % m * y % m) % m) % m -
             am * am % m + i64(m) * m) %
            m;
        for (int u = 0; u < m && !ok; ++u) {
          i64 v = (((u + k2) * u + k1) % m * u + k0) % m;
          if (v % m == 0) ok = true;
        }
        adm[i][y] = ok;
      }
    }
  }

  bool admissible(i64 y) const {
    for (int i = 0; i < kNumMods; ++i) {
      const int m = kMods[i];
      i64 r = y % m;
      if (r < 0) r += m;
      if (!adm[i][r]) return false;
    }
    return true;
  }
};

Int ceil_sqrt(const Int& n) {
  Int r = isqrt(n);
  return r * r == n ? r : Int(r + 1);
}

Int xmax_from(const Rational& hall_coeff, const Int& absk) {
  if (hall_coeff.num <= 0 || hall_coeff.den <= 0) {
    throw std::invalid_argument("hall_coeff must be positive");
  }
  Int pk = hall_coeff.num * absk;
  return ceil_div(Int(pk * pk), Int(Int(hall_coeff.den) * hall_coeff.den));
}

Int fallback_bound(const Int& x_max) {
  Int r = ceil_sqrt(x_max);
  return r < 10000 ? Int(10000) : r;
}

struct RootCollector {
  std::vector<Int> roots;

  // i128 fast path for one y value.
  void collect_small(i64 a, i64 b, i64 c, i64 d, i64 y,
                     std::vector<i128>& scratch) {
    const i128 yy = y;
    const i128 c2 = i128(3) * b * yy;
    const i128 c1 = i128(3) * a * c * yy * yy;
    const i128 c0 = i128(a) * a * d * yy * yy * yy - i128(a) * a;
    monic_roots<i128>(c2, c1, c0, scratch);
    roots.clear();
    for (i128 u : scratch) roots.push_back(to_int_from_i128(u));
  }

  void collect_big(const BinaryCubicForm& f, const Int& y,
                   std::vector<Int>& scratch) {
    const Int c2 = 3 * f.b * y;
    const Int c1 = 3 * f.a * f.c * y * y;
    const Int c0 = f.a * f.a * f.d * y * y * y - f.a * f.a;
    monic_roots<Int>(c2, c1, c0, scratch);
    roots = scratch;
  }
};

}  // namespace

Int hall_x_max(const Int& k, const SolverConfig& cfg) {
  if (k == 0) throw std::invalid_argument("hall_x_max: k must be nonzero");
  return xmax_from(cfg.hall_coeff, abs(k));
}

Int default_bound(const Int& k, const SolverConfig& cfg) {
  if (k == 0) throw std::invalid_argument("default_bound: k must be nonzero");
  return fallback_bound(xmax_from(cfg.hall_coeff, abs(k)));
}

Int default_bound(const Int& k, const SolverConfig& cfg,
                  const HessianForm& h) {
  if (k == 0) throw std::invalid_argument("default_bound: k must be nonzero");
  const Int x_max = xmax_from(cfg.hall_coeff, abs(k));
  const Int d1 = 4 * h.p * h.r - h.q * h.q;
  if (d1 > 0 && h.p > 0) {
    // Positive definite Hessian: H(x,y) >= D1/(4(p+r)) * (x^2+y^2), so any
    // solution mapping to X <= X_max has |y| below this bound.
    return isqrt(floor_div(Int(4 * (h.p + h.r) * x_max), d1)) + 1;
  }
  return fallback_bound(x_max);
}

std::vector<ThueSolution> solve_thue(const BinaryCubicForm& f,
                                     const SolverConfig& cfg) {
  const Int d1 = discriminant1(f);
  if (d1 == 0) {
    throw std::invalid_argument("solve_thue: degenerate form (D = 0)");
  }
  if (!is_irreducible(f)) {
    throw std::invalid_argument("solve_thue: reducible form");
  }

  Int yb;
  if (cfg.bound_policy == BoundPolicy::explicit_bound) {
    yb = cfg.y_bound;
    if (yb < 1) {
      throw std::invalid_argument("solve_thue: y_bound must be >= 1");
    }
  } else {
    const Int absk = ceil_div(Int(abs(Int(27 * d1))), Int(108));
    if (d1 > 0) {
      yb = default_bound(Int(-absk), cfg, hessian(f));
    } else {
      yb = default_bound(absk, cfg);
    }
  }

  std::vector<ThueSolution> sols;
  if (f.a == 1) sols.push_back(ThueSolution{1, 0});

  // Choose the machine-word path only when the worst-case polynomial
  // evaluation provably fits in 128 bits.
  bool small_ok = fits_i64(f.a) && fits_i64(f.b) && fits_i64(f.c) &&
                  fits_i64(f.d) && fits_i64(yb);
  if (small_ok) {
    const Int wc2 = 3 * abs(f.b) * yb;
    const Int wc1 = 3 * abs(f.a * f.c) * yb * yb;
    const Int wc0 = abs(f.a * f.a * f.d) * yb * yb * yb + f.a * f.a;
    Int m = wc2;
    Int s1 = isqrt(wc1) + 1;
    if (s1 > m) m = s1;
    Int s2 = icbrt(wc0) + 2;
    if (s2 > m) m = s2;
    const Int B = 2 * m + 2;
    const Int budget =
        (B + 1) * (B + 1) * (B + 1) + wc2 * (B + 1) * (B + 1) + wc1 * (B + 1) +
        wc0;
    Int lim = 1;
    lim <<= 122;
    if (budget >= lim) small_ok = false;
  }

  const Screen screen(f);
  auto accept = [&](const Int& x, const Int& y) {
    if (evaluate(f, x, y) != 1) {
      throw std::runtime_error("solve_thue: root certification failed");
    }
    if (gcd(x, y) != 1) {
      throw std::runtime_error("solve_thue: solution not coprime");
    }
    sols.push_back(ThueSolution{x, y});
  };

  RootCollector rc;
  if (small_ok) {
    const i64 a = to_i64(f.a), b = to_i64(f.b), c = to_i64(f.c),
              d = to_i64(f.d);
    const i64 ybs = to_i64(yb);
    std::vector<i128> scratch;
    for (i64 y = -ybs; y <= ybs; ++y) {
      if (y == 0 || !screen.admissible(y)) continue;
      rc.collect_small(a, b, c, d, y, scratch);
      for (const Int& u : rc.roots) {
        if (u % f.a != 0) continue;
        accept(Int(u / f.a), Int(static_cast<long>(y)));
      }
    }
  } else {
    std::vector<Int> scratch;
    for (Int y = -yb; y <= yb; ++y) {
      if (y == 0) continue;
      if (fits_i64(y) && !screen.admissible(to_i64(y))) continue;
      rc.collect_big(f, y, scratch);
      for (const Int& u : rc.roots) {
        if (u % f.a != 0) continue;
        accept(Int(u / f.a), y);
      }
    }
  }

  std::sort(sols.begin(), sols.end());
  return sols;
}

}  // namespace mordell
