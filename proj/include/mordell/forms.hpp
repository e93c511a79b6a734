#pragma once

#include <tuple>

#include "mordell/ints.hpp"

namespace mordell {

// Integral binary cubic form a*x^3 + 3b*x^2*y + 3c*x*y^2 + d*y^3.
// Only (a, b, c, d) is stored; the factors of 3 on the middle
// coefficients are implicit everywhere.
struct BinaryCubicForm {
  Int a, b, c, d;

  friend bool operator==(const BinaryCubicForm& f, const BinaryCubicForm& g) {
    return f.a == g.a && f.b == g.b && f.c == g.c && f.d == g.d;
  }
  friend bool operator!=(const BinaryCubicForm& f, const BinaryCubicForm& g) {
    return !(f == g);
  }
  friend bool operator<(const BinaryCubicForm& f, const BinaryCubicForm& g) {
    return std::tie(f.a, f.b, f.c, f.d) < std::tie(g.a, g.b, g.c, g.d);
  }
};

// Quadratic covariant p*x^2 + q*x*y + r*y^2.
struct HessianForm {
  Int p, q, r;

  friend bool operator==(const HessianForm& h, const HessianForm& g) {
    return h.p == g.p && h.q == g.q && h.r == g.r;
  }
  friend bool operator!=(const HessianForm& h, const HessianForm& g) {
    return !(h == g);
  }
};

// Cubic covariant a1*x^3 + 3*b1*x^2*y + 3*c1*x*y^2 + d1*y^3 — the same
// implicit-3 convention as BinaryCubicForm.
struct CubicCovariant {
  Int a1, b1, c1, d1;

  friend bool operator==(const CubicCovariant& f, const CubicCovariant& g) {
    return f.a1 == g.a1 && f.b1 == g.b1 && f.c1 == g.c1 && f.d1 == g.d1;
  }
  friend bool operator!=(const CubicCovariant& f, const CubicCovariant& g) {
    return !(f == g);
  }
};

// Integer 2x2 matrix (alpha, beta; gamma, delta) acting on (x, y);
// only determinant +-1 is accepted by act().
struct UnimodularMap {
  Int alpha, beta, gamma, delta;

  Int det() const { return alpha * delta - beta * gamma; }
};

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y);
Int evaluate(const HessianForm& h, const Int& x, const Int& y);
Int evaluate(const CubicCovariant& g, const Int& x, const Int& y);

// Discriminant D = -27(a^2 d^2 - 6abcd - 3 b^2 c^2 + 4 a c^3 + 4 b^3 d);
// divisible by 27 by construction.
Int discriminant(const BinaryCubicForm& f);

// D / 27.
Int discriminant1(const BinaryCubicForm& f);

// Hessian (p, q, r) = (b^2 - ac, bc - ad, c^2 - bd); its own discriminant
// satisfies 4pr - q^2 = D/27.
HessianForm hessian(const BinaryCubicForm& f);

// Cubic covariant with a1 = -a^2 d + 3abc - 2b^3 and companions.
CubicCovariant covariant_g(const BinaryCubicForm& f);

// Right action (f . m)(x, y) = f(alpha x + beta y, gamma x + delta y).
// Throws std::invalid_argument unless det(m) is +-1.
BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMap& m);
HessianForm act(const HessianForm& h, const UnimodularMap& m);
CubicCovariant act(const CubicCovariant& g, const UnimodularMap& m);

// Checks 4 H(x,y)^3 = G(x,y)^2 + (D/27) f(x,y)^2 at the given point.
bool syzygy_holds(const BinaryCubicForm& f, const Int& x, const Int& y);

// True iff f has no rational linear factor. Requires D != 0
// (throws std::invalid_argument on degenerate forms).
bool is_irreducible(const BinaryCubicForm& f);

}  // namespace mordell
