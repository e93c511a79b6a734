#include "mordell/oracle.hpp"

#include <stdexcept>

namespace mordell {
namespace {

// Quadratic-residue tables for cheap non-square rejection before the
// full integer square root. Moduli chosen for high combined rejection.
struct SquareFilters {
  bool m63[63];
  bool m65[65];
  bool m11[11];

  SquareFilters() {
    for (bool& v : m63) v = false;
    for (bool& v : m65) v = false;
    for (bool& v : m11) v = false;
    for (int i = 0; i < 63; ++i) m63[i * i % 63] = true;
    for (int i = 0; i < 65; ++i) m65[i * i % 65] = true;
    for (int i = 0; i < 11; ++i) m11[i * i % 11] = true;
  }
};

const SquareFilters& filters() {
  static const SquareFilters f;
  return f;
}

// 64-entry table of squares mod 64 as a bitmask.
constexpr u64 square_mask64() {
  u64 mask = 0;
  for (int i = 0; i < 64; ++i) mask |= u64(1) << ((i * i) & 63);
  return mask;
}

void emit(SolutionSet& out, const Int& X, const Int& s) {
  if (s == 0) {
    out.points.push_back(MordellPoint{X, 0, out.k});
  } else {
    out.points.push_back(MordellPoint{X, Int(-s), out.k});
    out.points.push_back(MordellPoint{X, s, out.k});
  }
}

void scan_fast(SolutionSet& out, i64 k, i64 x0, i64 x_max) {
  static constexpr u64 kMask64 = square_mask64();
  const SquareFilters& f = filters();
  u128 t = u128(i128(x0) * x0 * x0 + k);
  for (i64 x = x0; x <= x_max; ++x) {
    if ((kMask64 >> (u64(t) & 63)) & 1) {
      if (f.m63[u64(t % 63)] && f.m65[u64(t % 65)] && f.m11[u64(t % 11)]) {
        u128 r = isqrt_u128(t);
        if (r * r == t) {
          Int X(static_cast<long>(x));
          Int s = to_int_from_u128(r);
          emit(out, X, s);
        }
      }
    }
    t += u128(i128(3) * x * x + 3 * x + 1);
  }
}

void scan_big(SolutionSet& out, const Int& k, const Int& x0,
              const Int& x_max) {
  for (Int x = x0; x <= x_max; ++x) {
    Int t = x * x * x + k;
    IntegerSqrtResult r = integer_sqrt(t);
    if (r.exact) emit(out, x, r.root);
  }
}

}  // namespace

IntegerSqrtResult integer_sqrt(const Int& n) {
  if (n < 0) {
    throw std::invalid_argument("integer_sqrt: negative input");
  }
  IntegerSqrtResult res;
  Int rem;
  mpz_sqrtrem(res.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  res.exact = (rem == 0);
  return res;
}

SolutionSet brute_force_k(const Int& k, const OracleConfig& cfg) {
  if (k == 0) {
    throw std::invalid_argument("brute_force_k: k must be nonzero");
  }
  if (cfg.x_max < 1) {
    throw std::invalid_argument("brute_force_k: x_max must be >= 1");
  }
  SolutionSet out;
  out.k = k;
  out.complete_flag = true;

  // Smallest X with X^3 + k >= 0, by exact cube-root bracketing.
  Int x0;
  if (k < 0) {
    Int c = icbrt(-k);
    if (c * c * c < -k) c += 1;
    x0 = c;
  } else {
    x0 = -icbrt(k);
  }
  if (x0 > cfg.x_max) return out;

  const Int kFastXMax("4000000000000");
  if (fits_i64(k) && fits_i64(cfg.x_max) && cfg.x_max <= kFastXMax) {
    scan_fast(out, to_i64(k), to_i64(x0), to_i64(cfg.x_max));
  } else {
    scan_big(out, k, x0, cfg.x_max);
  }
  return out;
}

}  // namespace mordell
