#include "mordell/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mordell {
namespace {

// The enumerators run in machine words when the window allows it and fall
// back to arbitrary precision otherwise. The i64 ceiling below keeps every
// intermediate (discriminants, window radicands) under ~2^62 by a wide
// margin; see the exact-arithmetic re-checks guarding each emission.
constexpr i64 kMachineWindowMax = 3000000000LL;

inline double dbl(i64 v) { return static_cast<double>(v); }
inline double dbl(const Int& v) { return v.get_d(); }

inline i64 isqrt_nonneg(i64 n) { return i64(isqrt_u128(u128(n))); }
inline Int isqrt_nonneg(const Int& n) { return isqrt(n); }

inline i64 icbrt_nonneg(i64 n) {
  i64 r = i64(std::cbrt(double(n)));
  while (r > 0 && i128(r) * r * r > n) --r;
  while (i128(r + 1) * (r + 1) * (r + 1) <= n) ++r;
  return r;
}
inline Int icbrt_nonneg(const Int& n) { return icbrt(n); }

inline Int make_int(i64 v) { return Int(static_cast<long>(v)); }
inline Int make_int(const Int& v) { return v; }

template <class I>
I disc_of(const I& a, const I& b, const I& c, const I& d) {
  return I(-27) * (a * a * d * d - 6 * a * b * c * d - 3 * b * b * c * c +
                   4 * a * c * c * c + 4 * b * b * b * d);
}

template <class I>
bool reduced_pos_raw(const I& a, const I& b, const I& c, const I& d) {
  if (!(a > 0 && b >= 0)) return false;
  I P = b * b - a * c;
  I Q = b * c - a * d;
  I R = c * c - b * d;
  I aQ = Q < 0 ? I(-Q) : Q;
  if (!(aQ <= P && P <= R)) return false;
  if (b == 0 && !(d < 0)) return false;
  if (Q == 0 && !(d < 0)) return false;
  if (P == Q) {
    I t = a - b;
    if (t < 0) t = I(-t);
    if (!(b < t)) return false;
  }
  if (P == R) {
    I absd = d < 0 ? I(-d) : d;
    I absc = c < 0 ? I(-c) : c;
    if (!(a < absd || (a == absd && b < absc))) return false;
  }
  return true;
}

template <class I>
bool reduced_neg_raw(const I& a, const I& b, const I& c, const I& d) {
  if (!(a > 0 && b >= 0)) return false;
  if (b == 0 && !(d > 0)) return false;
  if (!(d * d - a * a > 3 * (b * d - a * c))) return false;
  I m = a * d - 9 * b * c;
  I s = a - 3 * b;
  I t = a + 3 * b;
  I lo = I(-(s * s) - 3 * a * c);
  I hi = I(t * t + 3 * a * c);
  return lo < m && m < hi;
}

inline i128 eval_i128(i64 a, i64 b, i64 c, i64 d, i64 x, i64 y) {
  i128 X = x, Y = y;
  return ((a * X + 3 * b * Y) * X + 3 * c * Y * Y) * X + i128(d) * Y * Y * Y;
}

// Rational-root based irreducibility; callers guarantee D != 0.
inline bool irreducible_raw(i64 a, i64 b, i64 c, i64 d) {
  if (a == 0 || d == 0) return false;
  i64 ad = d < 0 ? -d : d;
  i64 aa = a < 0 ? -a : a;
  for (i64 p = 1; p * p <= ad; ++p) {
    if (ad % p != 0) continue;
    const i64 ps[2] = {p, ad / p};
    for (i64 q = 1; q * q <= aa; ++q) {
      if (aa % q != 0) continue;
      const i64 qs[2] = {q, aa / q};
      for (i64 pp : ps) {
        for (i64 qq : qs) {
          if (std::gcd(pp, qq) != 1) continue;
          if (eval_i128(a, b, c, d, pp, qq) == 0 ||
              eval_i128(a, b, c, d, -pp, qq) == 0) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

inline bool irreducible_raw(const Int& a, const Int& b, const Int& c,
                            const Int& d) {
  return is_irreducible(BinaryCubicForm{a, b, c, d});
}

// Integer d ranges covering k_lo <= D(a,b,c,d) <= k_hi, where
// D(d) = -U d^2 + V d + W with U = 27 a^2 > 0. Endpoints carry a safety
// margin; exact membership is re-tested per candidate.
template <class I>
struct DWindows {
  I lo[2], hi[2];
  int n = 0;
};

template <class I>
DWindows<I> d_windows(const I& a, const I& b, const I& c, const I& lo,
                      const I& hi) {
  const I margin = I(2);
  DWindows<I> out;
  I U = I(27) * a * a;
  I V = I(27) * (6 * a * b * c - 4 * b * b * b);
  I W = I(27) * (3 * b * b * c * c - 4 * a * c * c * c);
  I disc_lo = V * V + 4 * U * (W - lo);
  if (disc_lo < 0) return out;
  I s = isqrt_nonneg(disc_lo);
  I twoU = I(2) * U;
  I rho_m = floor_div(I(V - s), twoU) - margin;
  I rho_p = floor_div(I(V + s), twoU) + margin;
  I disc_hi = V * V + 4 * U * (W - hi);
  if (disc_hi < 0) {
    out.lo[0] = rho_m;
    out.hi[0] = rho_p;
    out.n = 1;
    return out;
  }
  I t = isqrt_nonneg(disc_hi);
  I sig_m = floor_div(I(V - t), twoU) + margin;
  I sig_p = floor_div(I(V + t), twoU) - margin;
  if (sig_p <= sig_m + 1) {
    // The exclusion gap closed under the margins; keep one range so no d
    // is visited twice.
    out.lo[0] = rho_m;
    out.hi[0] = rho_p;
    out.n = 1;
    return out;
  }
  if (rho_m <= sig_m) {
    out.lo[out.n] = rho_m;
    out.hi[out.n] = sig_m;
    ++out.n;
  }
  if (sig_p <= rho_p) {
    out.lo[out.n] = std::max(sig_p, rho_m);
    out.hi[out.n] = rho_p;
    ++out.n;
  }
  return out;
}

inline bool p2_poly_pos(i64 a, i64 b, i64 K, i64 P) {
  i128 s = i128(3) * a + i128(6) * b;
  i128 v = i128(-4) * P * P * P + s * s * P * P + i128(27) * a * a * K;
  return v > 0;
}

inline bool p2_poly_pos(const Int& a, const Int& b, const Int& K,
                        const Int& P) {
  Int s = 3 * a + 6 * b;
  Int v = -4 * P * P * P + s * s * P * P + 27 * a * a * K;
  return v > 0;
}

// Smallest integer >= the positive root P2 (the polynomial is positive at 0
// and strictly decreasing through its unique positive root).
template <class I>
I p2_upper(const I& a, const I& b, const I& K) {
  I P = I(1);
  while (p2_poly_pos(a, b, K, P)) P = I(2) * P;
  I lo = floor_div(P, I(2)), hi = P;
  while (lo + 1 < hi) {
    I mid = floor_div(I(lo + hi), I(2));
    if (p2_poly_pos(a, b, K, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

template <class I>
void emit_class(const FormSink& sink, long a, long b, const I& c, const I& d,
                const I& D, FormKind kind) {
  FormClass fc{BinaryCubicForm{Int(a), Int(b), make_int(c), make_int(d)},
               make_int(D), kind};
  sink(fc);
}

template <class I>
void enum_pos_impl(const I& K0, const I& K, const FormSink& sink) {
  const double Kd = dbl(K);
  const long amax = long(2.0 * std::pow(Kd, 0.25) / (3.0 * std::sqrt(3.0))) + 1;
  for (long a = 1; a <= amax; ++a) {
    const double ta = std::sqrt(Kd) - 27.0 * double(a) * double(a) / 4.0;
    if (ta < 0) break;
    const long bmax = long(double(a) / 2.0 + std::sqrt(ta) / 3.0) + 1;
    for (long b = 0; b <= bmax; ++b) {
      const I P2_hi = p2_upper(I(a), I(b), K);
      const I c_lo = I(-floor_div(I(P2_hi - I(9 * b * b)), I(9 * a)) - 1);
      const I T = icbrt_nonneg(I(floor_div(I(I(a) * I(a) * K0), I(4))));
      const I c_hi =
          std::min(I(floor_div(I(I(3 * b * b) - T), I(3 * a)) + 1), I(b - a));
      for (I c = c_lo; c <= c_hi; ++c) {
        const I dlin_lo =
            I(-floor_div(I(I(b) * I(b) - I(a + b) * c), I(a)) - 1);
        const I dlin_hi =
            I(floor_div(I(I(b - a) * c + I(b) * I(b)), I(a)) + 1);
        const DWindows<I> win = d_windows(I(a), I(b), c, I(K0 + 1), K);
        for (int wi = 0; wi < win.n; ++wi) {
          const I dlo = std::max(win.lo[wi], dlin_lo);
          const I dhi = std::min(win.hi[wi], dlin_hi);
          for (I d = dlo; d <= dhi; ++d) {
            const I D = disc_of(I(a), I(b), c, d);
            if (!(K0 < D && D <= K)) continue;
            if (!reduced_pos_raw(I(a), I(b), c, d)) continue;
            if (!irreducible_raw(I(a), I(b), c, d)) continue;
            emit_class(sink, a, b, c, d, D, FormKind::irreducible_pos);
          }
        }
      }
    }
  }
}

template <class I>
void enum_neg_impl(const I& K0, const I& K, const FormSink& sink) {
  const double Kd = dbl(K);
  const long amax = long(std::pow(16.0 * Kd / 27.0, 0.25)) + 1;
  for (long a = 1; a <= amax; ++a) {
    const double ta =
        std::sqrt(Kd / 3.0) - 3.0 * double(a) * double(a) / 4.0;
    if (ta < 0) break;
    const long bmax = long(double(a) / 2.0 + std::sqrt(ta) / 3.0) + 1;
    for (long b = 0; b <= bmax; ++b) {
      const long c_lo = -floor_div(i64(3 * b - 1), i64(3)) - 1;
      const double extra = (a >= 2 * b) ? (3.0 * double(b) * double(b) / a)
                                        : (3.0 * b - 3.0 * double(a) / 4.0);
      const long c_hi_l =
          long((std::pow(Kd / (4.0 * double(a)), 1.0 / 3.0) + extra) / 3.0) + 2;
      const I c_hi = I(c_hi_l);
      for (I c = I(c_lo); c <= c_hi; ++c) {
        const DWindows<I> win =
            d_windows(I(a), I(b), c, I(-K), I(-(K0 + 1)));
        for (int wi = 0; wi < win.n; ++wi) {
          for (I d = win.lo[wi]; d <= win.hi[wi]; ++d) {
            const I D = disc_of(I(a), I(b), c, d);
            if (!(-K <= D && D < -K0)) continue;
            if (!reduced_neg_raw(I(a), I(b), c, d)) continue;
            if (!irreducible_raw(I(a), I(b), c, d)) continue;
            emit_class(sink, a, b, c, d, D, FormKind::irreducible_neg);
          }
        }
      }
    }
  }
}

void validate_window(const SearchWindow& w) {
  if (w.k_lo < 0 || w.k_lo >= w.k_hi) {
    throw std::invalid_argument("SearchWindow: requires 0 <= k_lo < k_hi");
  }
}

}  // namespace

bool is_reduced_pos(const BinaryCubicForm& f) {
  if (discriminant1(f) <= 0) {
    throw std::invalid_argument("is_reduced_pos: requires D > 0");
  }
  return reduced_pos_raw(f.a, f.b, f.c, f.d);
}

bool is_reduced_neg(const BinaryCubicForm& f) {
  if (discriminant1(f) >= 0) {
    throw std::invalid_argument("is_reduced_neg: requires D < 0");
  }
  return reduced_neg_raw(f.a, f.b, f.c, f.d);
}

double p2_root(const Int& a, const Int& b, const Int& K) {
  if (a < 1 || b < 0 || K < 1) {
    throw std::invalid_argument("p2_root: requires a >= 1, b >= 0, K >= 1");
  }
  const Int s2 = (3 * a + 6 * b) * (3 * a + 6 * b);
  const Int c0 = 27 * a * a * K;
  // Sign of the polynomial at num / 2^e, evaluated exactly.
  auto poly_pos = [&](const Int& num, int e) {
    Int v = -4 * num * num * num;
    Int mid = s2 * num * num;
    mpz_mul_2exp(mid.get_mpz_t(), mid.get_mpz_t(), e);
    Int tail = c0;
    mpz_mul_2exp(tail.get_mpz_t(), tail.get_mpz_t(), 3 * e);
    v += mid + tail;
    return v > 0;
  };
  Int lo = 0, hi = 1;
  while (poly_pos(hi, 0)) {
    lo = hi;
    hi *= 2;
  }
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (poly_pos(mid, 0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  // Root lies in (lo, lo+1]; refine to width 2^-24.
  Int num = lo;
  int e = 0;
  for (int it = 0; it < 24; ++it) {
    num *= 2;
    ++e;
    Int probe = num + 1;
    if (poly_pos(probe, e)) num = probe;
  }
  return (num.get_d() + 0.5) / std::ldexp(1.0, e);
}

void enumerate_pos(const SearchWindow& w, const FormSink& sink) {
  validate_window(w);
  if (w.k_hi <= kMachineWindowMax) {
    enum_pos_impl<i64>(to_i64(w.k_lo), to_i64(w.k_hi), sink);
  } else {
    enum_pos_impl<Int>(w.k_lo, w.k_hi, sink);
  }
}

std::vector<FormClass> enumerate_pos(const SearchWindow& w) {
  std::vector<FormClass> out;
  enumerate_pos(w, [&](const FormClass& fc) { out.push_back(fc); });
  return out;
}

void enumerate_neg(const SearchWindow& w, const FormSink& sink) {
  validate_window(w);
  if (w.k_hi <= kMachineWindowMax) {
    enum_neg_impl<i64>(to_i64(w.k_lo), to_i64(w.k_hi), sink);
  } else {
    enum_neg_impl<Int>(w.k_lo, w.k_hi, sink);
  }
}

std::vector<FormClass> enumerate_neg(const SearchWindow& w) {
  std::vector<FormClass> out;
  enumerate_neg(w, [&](const FormClass& fc) { out.push_back(fc); });
  return out;
}

std::string dump_line(const FormClass& fc) {
  std::string s = fc.form.a.get_str() + " " + fc.form.b.get_str() + " " +
                  fc.form.c.get_str() + " " + fc.form.d.get_str() + " " +
                  fc.disc.get_str();
  if (fc.kind == FormKind::reducible) s += " R";
  return s;
}

}  // namespace mordell
