#pragma once

#include <map>
#include <vector>

#include "mordell/points.hpp"
#include "mordell/reducible.hpp"
#include "mordell/thue.hpp"

namespace mordell {

// All reduced classes with discriminant exactly -108k: irreducible classes
// from the reduction enumerators plus canonical reducible classes.
// Rejects k = 0.
std::vector<FormClass> forms_for_k(const Int& k);

// X = H1(x, y), |Y| = |G1(x, y)| / 2 for k = -D/108; returns the (X, +-Y)
// pair, or the single (X, 0) when G1 vanishes. Throws std::invalid_argument
// when f(x, y) != 1 or D is not divisible by 108, and std::runtime_error if
// the parity of G1 or the curve equation fails (certification).
std::vector<MordellPoint> triple_to_point(const BinaryCubicForm& f,
                                          const ThueSolution& s);

// (1, 0, -X, 2Y): the form whose (1, 0) solution maps back to (X, +-Y).
BinaryCubicForm converse_form(const Int& X, const Int& Y);

// Solves every class in `classes` (assumed to all have discriminant -108k),
// maps solutions to points, deduplicates under the +-Y pairing, and keeps
// points with X <= (hall_coeff * |k|)^2. Duplicate (X, |Y|) keys from
// distinct (class, solution) pairs raise std::runtime_error.
SolutionSet solve_classes(const Int& k, const std::vector<FormClass>& classes,
                          const SolverConfig& cfg);

// forms_for_k + solve_classes.
SolutionSet solve_k(const Int& k, const SolverConfig& cfg);

// Pointwise equivalent to solve_k over [k_lo, k_hi] \ {0}, implemented by
// enumerating discriminant windows once and bucketing classes by k.
// Every k in the range gets an entry, including empty solution sets.
std::map<Int, SolutionSet> solve_range(const Int& k_lo, const Int& k_hi,
                                       const SolverConfig& cfg);

// Classes for every k in [k_lo, k_hi] \ {0} whose discriminant magnitude
// falls in the window (w.k_lo, w.k_hi]; used for chunked range runs.
std::map<Int, std::vector<FormClass>> classes_in_window(
    const Int& k_lo, const Int& k_hi, const SearchWindow& w);

}  // namespace mordell
