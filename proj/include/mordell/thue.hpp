#pragma once

#include <vector>

#include "mordell/forms.hpp"
#include "mordell/thue_types.hpp"

namespace mordell {

// Returns all (x, y) with F(x, y) = 1 and |y| <= the effective y bound
// (cfg.y_bound under BoundPolicy::explicit_bound, a bound derived from
// hall_coeff and the form's own discriminant under hall_derived).
// x is unbounded: for each y the cubic in x is solved by exact integer
// root extraction. Results are sorted by (x, y).
// Throws std::invalid_argument on degenerate (D = 0) or reducible input.
std::vector<ThueSolution> solve_thue(const BinaryCubicForm& f,
                                     const SolverConfig& cfg);

// y-search bound derived from X_max = (hall_coeff * |k|)^2. The two-argument
// overload uses the class-independent heuristic max(10^4, ceil(sqrt(X_max)))
// for either sign of k. The three-argument overload sharpens negative k
// (positive discriminant, definite Hessian) to the exact smallest B whose
// Hessian values cover X_max; it falls back to the heuristic when the
// supplied Hessian is not definite. Throws std::invalid_argument on k = 0.
Int default_bound(const Int& k, const SolverConfig& cfg);
Int default_bound(const Int& k, const SolverConfig& cfg,
                  const HessianForm& h);

// The X search ceiling (hall_coeff * |k|)^2, rounded up to an integer.
Int hall_x_max(const Int& k, const SolverConfig& cfg);

}  // namespace mordell
