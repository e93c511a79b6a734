#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mordell {

// Exact integer used across the public API. Hot loops downgrade to
// machine words only where a width analysis allows it.
using Int = mpz_class;

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline Int floor_div(const Int& n, const Int& d) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int ceil_div(const Int& n, const Int& d) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline i64 floor_div(i64 n, i64 d) {
  i64 q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

inline i64 ceil_div(i64 n, i64 d) {
  i64 q = n / d;
  if ((n % d != 0) && ((n < 0) == (d < 0))) ++q;
  return q;
}

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative input");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// floor(cbrt(n)) for n >= 0.
inline Int icbrt(const Int& n) {
  if (n < 0) throw std::invalid_argument("icbrt: negative input");
  Int r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

// floor(sqrt(n)) on unsigned 128-bit words; exact, no allocation.
inline u128 isqrt_u128(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool fits_i64(const Int& n) { return n.fits_slong_p(); }

inline i64 to_i64(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("to_i64: out of range");
  return n.get_si();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline Int to_int_from_u128(u128 u) {
  Int res = Int(static_cast<unsigned long>(u64(u >> 64)));
  res <<= 64;
  res += Int(static_cast<unsigned long>(u64(u)));
  return res;
}

inline Int to_int_from_i128(i128 v) {
  if (v < 0) return Int(-to_int_from_u128(u128(0) - u128(v)));
  return to_int_from_u128(u128(v));
}

inline std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 u = neg ? u128(0) - u128(v) : u128(v);
  char buf[48];
  int pos = 48;
  while (u > 0) {
    buf[--pos] = char('0' + int(u % 10));
    u /= 10;
  }
  std::string s(buf + pos, 48 - pos);
  return neg ? "-" + s : s;
}

// Exact small rational for configuration values (e.g. Hall coefficient).
struct Rational {
  i64 num = 0;
  i64 den = 1;
};

// Parses decimal strings such as "50", "1.5", "46.60" into a Rational.
Rational parse_rational(const std::string& text);

}  // namespace mordell
