#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mordell/forms.hpp"

namespace mordell {

// Discriminant-magnitude window: irreducible enumeration targets
// D in (k_lo, k_hi] (positive side) or -D in (k_lo, k_hi] (negative side).
struct SearchWindow {
  Int k_lo, k_hi;
};

enum class FormKind {
  irreducible_pos,
  irreducible_neg,
  reducible,
};

// A reduced class representative together with its discriminant and kind.
struct FormClass {
  BinaryCubicForm form;
  Int disc;
  FormKind kind;

  friend bool operator==(const FormClass& x, const FormClass& y) {
    return x.form == y.form && x.disc == y.disc && x.kind == y.kind;
  }
};

using FormSink = std::function<void(const FormClass&)>;

// Reduction predicate for positive discriminant.
// Throws std::invalid_argument unless D > 0.
bool is_reduced_pos(const BinaryCubicForm& f);

// Reduction predicate for negative discriminant.
// Throws std::invalid_argument unless D < 0.
bool is_reduced_neg(const BinaryCubicForm& f);

// Unique positive real root of -4P^3 + (3a+6b)^2 P^2 + 27 a^2 K = 0,
// to absolute accuracy 1e-6. Integer loop endpoints in the enumerators are
// derived independently with outward (conservative) rounding.
double p2_root(const Int& a, const Int& b, const Int& K);

// Emits exactly one reduced representative per GL2(Z) class of irreducible
// forms with D in (k_lo, k_hi]. Deterministic loop order (a, b, c, d).
void enumerate_pos(const SearchWindow& w, const FormSink& sink);
std::vector<FormClass> enumerate_pos(const SearchWindow& w);

// Same for D in [-k_hi, -k_lo).
void enumerate_neg(const SearchWindow& w, const FormSink& sink);
std::vector<FormClass> enumerate_neg(const SearchWindow& w);

// Text dump "a b c d D", with trailing tag "R" for reducible classes.
std::string dump_line(const FormClass& fc);

}  // namespace mordell
