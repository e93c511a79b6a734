#pragma once

#include <vector>

#include "mordell/reduction.hpp"
#include "mordell/thue_types.hpp"

namespace mordell {

// Normalized reducible form x(x^2 + 3Bxy + 3Cy^2); as a BinaryCubicForm
// it is (1, B, C, 0).
struct ReducibleForm {
  Int B, C;

  friend bool operator==(const ReducibleForm& f, const ReducibleForm& g) {
    return f.B == g.B && f.C == g.C;
  }
  friend bool operator!=(const ReducibleForm& f, const ReducibleForm& g) {
    return !(f == g);
  }
};

enum class DiscSign { positive, negative };

// 27 C^2 (3B^2 - 4C); agrees with forms::discriminant on (1, B, C, 0).
Int reducible_discriminant(const ReducibleForm& f);

BinaryCubicForm as_cubic_form(const ReducibleForm& f);
FormClass as_form_class(const ReducibleForm& f);

// Identity on forms with non-square discriminant. For square discriminant,
// returns the unique member of the three-pair equivalence family with
// B > 0 and C > 0. Throws std::runtime_error if the square-discriminant
// structure (C divisible by 3, B^2 - 4C/3 a positive perfect square) fails.
// Throws std::invalid_argument when the discriminant vanishes.
ReducibleForm canonical_triple(const ReducibleForm& f);

// All canonical (B, C) with sign * D in (k_lo, k_hi], B >= 0, deterministic
// (C ascending, then B ascending) order.
std::vector<ReducibleForm> enumerate_reducible(const SearchWindow& w,
                                               DiscSign sign);

// {(1,0)} plus (1, -B/C) when C divides B and B != 0; no search involved.
// Throws std::invalid_argument when the discriminant vanishes.
std::vector<ThueSolution> solve_reducible(const ReducibleForm& f);

}  // namespace mordell
