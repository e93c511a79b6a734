#include "mordell/reducible.hpp"

#include <cmath>
#include <stdexcept>

namespace mordell {
namespace {

bool is_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

void require_nondegenerate(const ReducibleForm& f) {
  if (reducible_discriminant(f) == 0) {
    throw std::invalid_argument("reducible form: discriminant vanishes");
  }
}

}  // namespace

Int reducible_discriminant(const ReducibleForm& f) {
  return 27 * f.C * f.C * (3 * f.B * f.B - 4 * f.C);
}

BinaryCubicForm as_cubic_form(const ReducibleForm& f) {
  return BinaryCubicForm{1, f.B, f.C, 0};
}

FormClass as_form_class(const ReducibleForm& f) {
  return FormClass{as_cubic_form(f), reducible_discriminant(f),
                   FormKind::reducible};
}

ReducibleForm canonical_triple(const ReducibleForm& f) {
  require_nondegenerate(f);
  Int D = reducible_discriminant(f);
  if (!is_square(D)) return f;
  if (f.C % 3 != 0) {
    throw std::runtime_error(
        "canonical_triple: square discriminant but C not divisible by 3");
  }
  Int C0 = f.C / 3;
  Int d0sq = f.B * f.B - 4 * C0;
  if (d0sq <= 0 || !is_square(d0sq)) {
    throw std::runtime_error(
        "canonical_triple: square discriminant but B^2 - 4C/3 is not a "
        "positive perfect square");
  }
  Int D0 = isqrt(d0sq);
  if ((f.B - D0) % 2 != 0) {
    throw std::runtime_error("canonical_triple: parity of B and D0 differs");
  }
  const ReducibleForm cands[3] = {
      f,
      ReducibleForm{(-f.B + 3 * D0) / 2, 3 * D0 * (D0 - f.B) / 2},
      ReducibleForm{(-f.B - 3 * D0) / 2, 3 * D0 * (D0 + f.B) / 2},
  };
  const ReducibleForm* found = nullptr;
  for (const ReducibleForm& g : cands) {
    if (g.B > 0 && g.C > 0) {
      if (found != nullptr) {
        throw std::runtime_error(
            "canonical_triple: multiple members with B > 0, C > 0");
      }
      found = &g;
    }
  }
  if (found == nullptr) {
    throw std::runtime_error(
        "canonical_triple: no member with B > 0, C > 0");
  }
  return *found;
}

std::vector<ReducibleForm> enumerate_reducible(const SearchWindow& w,
                                               DiscSign sign) {
  if (w.k_lo < 0 || w.k_lo >= w.k_hi) {
    throw std::invalid_argument("SearchWindow: requires 0 <= k_lo < k_hi");
  }
  const Int& K0 = w.k_lo;
  const Int& K = w.k_hi;
  const int sgn = (sign == DiscSign::positive) ? 1 : -1;
  std::vector<ReducibleForm> raw;

  auto in_window = [&](const Int& D) { return K0 < sgn * D && sgn * D <= K; };

  if (sgn > 0) {
    Int c_lo = -icbrt(K / 108) - 1;
    Int c_hi = isqrt(K / 27);
    for (Int C = c_lo; C <= c_hi; ++C) {
      if (C == 0) continue;
      Int b_lo = 0;
      Int t = (4 * C + 1) / 3;
      if (t > 0) {
        Int r = isqrt(t) - 1;
        if (r > 0) b_lo = r;
      }
      Int num = K + 108 * C * C * C;
      if (num < 0) continue;
      Int b_hi = isqrt(num / (81 * C * C));
      for (Int B = b_lo; B <= b_hi + 1; ++B) {
        if (in_window(reducible_discriminant(ReducibleForm{B, C}))) {
          raw.push_back(ReducibleForm{B, C});
        }
      }
    }
  } else {
    Int c_hi = isqrt(K / 27);
    for (Int C = 1; C <= c_hi; ++C) {
      Int num = -K + 108 * C * C * C;
      Int b_lo = 0;
      if (num > 0) b_lo = isqrt(num / (81 * C * C));
      if (b_lo > 0) b_lo -= 1;
      Int b_hi = isqrt((4 * C - 1) / 3) + 1;
      for (Int B = b_lo; B <= b_hi; ++B) {
        if (in_window(reducible_discriminant(ReducibleForm{B, C}))) {
          raw.push_back(ReducibleForm{B, C});
        }
      }
    }
  }

  std::vector<ReducibleForm> keep;
  for (const ReducibleForm& f : raw) {
    if (is_square(reducible_discriminant(f))) {
      ReducibleForm canon = canonical_triple(f);
      if (canon == f && f.B > 0 && f.C > 0) keep.push_back(f);
    } else {
      keep.push_back(f);
    }
  }
  return keep;
}

std::vector<ThueSolution> solve_reducible(const ReducibleForm& f) {
  require_nondegenerate(f);
  std::vector<ThueSolution> sols;
  sols.push_back(ThueSolution{1, 0});
  if (f.B != 0 && f.B % f.C == 0) {
    sols.push_back(ThueSolution{1, -(f.B / f.C)});
  }
  return sols;
}

}  // namespace mordell
