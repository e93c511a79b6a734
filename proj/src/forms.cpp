#include "mordell/forms.hpp"

#include <stdexcept>

namespace mordell {

Int evaluate(const BinaryCubicForm& f, const Int& x, const Int& y) {
  return ((f.a * x + 3 * f.b * y) * x + 3 * f.c * y * y) * x + f.d * y * y * y;
}

Int evaluate(const HessianForm& h, const Int& x, const Int& y) {
  return (h.p * x + h.q * y) * x + h.r * y * y;
}

Int evaluate(const CubicCovariant& g, const Int& x, const Int& y) {
  return ((g.a1 * x + 3 * g.b1 * y) * x + 3 * g.c1 * y * y) * x +
         g.d1 * y * y * y;
}

Int discriminant(const BinaryCubicForm& f) {
  return 27 * discriminant1(f);
}

Int discriminant1(const BinaryCubicForm& f) {
  const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  return -(a * a * d * d - 6 * a * b * c * d - 3 * b * b * c * c +
           4 * a * c * c * c + 4 * b * b * b * d);
}

HessianForm hessian(const BinaryCubicForm& f) {
  const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  return HessianForm{b * b - a * c, b * c - a * d, c * c - b * d};
}

CubicCovariant covariant_g(const BinaryCubicForm& f) {
  const Int &a = f.a, &b = f.b, &c = f.c, &d = f.d;
  return CubicCovariant{
      -a * a * d + 3 * a * b * c - 2 * b * b * b,
      -b * b * c - a * b * d + 2 * a * c * c,
      b * c * c - 2 * b * b * d + a * c * d,
      -3 * b * c * d + 2 * c * c * c + a * d * d,
  };
}

namespace {

void require_unimodular(const UnimodularMap& m) {
  Int det = m.det();
  if (det != 1 && det != -1) {
    throw std::invalid_argument("act: matrix determinant must be +-1");
  }
}

// Shared composition for any form stored in the implicit-3 convention.
void compose_cubic(const Int& a, const Int& b, const Int& c, const Int& d,
                   const UnimodularMap& m, Int out[4]) {
  const Int &al = m.alpha, &be = m.beta, &ga = m.gamma, &de = m.delta;
  out[0] = a * al * al * al + 3 * b * al * al * ga + 3 * c * al * ga * ga +
           d * ga * ga * ga;
  out[1] = a * al * al * be + b * (al * al * de + 2 * al * be * ga) +
           c * (2 * al * ga * de + be * ga * ga) + d * ga * ga * de;
  out[2] = a * al * be * be + b * (2 * al * be * de + be * be * ga) +
           c * (al * de * de + 2 * be * ga * de) + d * ga * de * de;
  out[3] = a * be * be * be + 3 * b * be * be * de + 3 * c * be * de * de +
           d * de * de * de;
}

}  // namespace

BinaryCubicForm act(const BinaryCubicForm& f, const UnimodularMap& m) {
  require_unimodular(m);
  Int out[4];
  compose_cubic(f.a, f.b, f.c, f.d, m, out);
  return BinaryCubicForm{out[0], out[1], out[2], out[3]};
}

HessianForm act(const HessianForm& h, const UnimodularMap& m) {
  require_unimodular(m);
  const Int &al = m.alpha, &be = m.beta, &ga = m.gamma, &de = m.delta;
  return HessianForm{
      h.p * al * al + h.q * al * ga + h.r * ga * ga,
      2 * h.p * al * be + h.q * (al * de + be * ga) + 2 * h.r * ga * de,
      h.p * be * be + h.q * be * de + h.r * de * de,
  };
}

CubicCovariant act(const CubicCovariant& g, const UnimodularMap& m) {
  require_unimodular(m);
  Int out[4];
  compose_cubic(g.a1, g.b1, g.c1, g.d1, m, out);
  return CubicCovariant{out[0], out[1], out[2], out[3]};
}

bool syzygy_holds(const BinaryCubicForm& f, const Int& x, const Int& y) {
  Int hv = evaluate(hessian(f), x, y);
  Int gv = evaluate(covariant_g(f), x, y);
  Int fv = evaluate(f, x, y);
  return 4 * hv * hv * hv == gv * gv + discriminant1(f) * fv * fv;
}

bool is_irreducible(const BinaryCubicForm& f) {
  if (discriminant1(f) == 0) {
    throw std::invalid_argument("is_irreducible: degenerate form (D = 0)");
  }
  // A rational zero of f must be x/y = p/q (lowest terms) with p | d and
  // q | a; if a or d vanishes, (0,1) or (1,0) is already a zero.
  if (f.a == 0 || f.d == 0) return false;
  Int ad = abs(f.d);
  Int aa = abs(f.a);
  for (Int p = 1; p * p <= ad; ++p) {
    if (ad % p != 0) continue;
    Int p2 = ad / p;
    for (Int q = 1; q * q <= aa; ++q) {
      if (aa % q != 0) continue;
      Int q2 = aa / q;
      for (const Int& pp : {p, p2}) {
        for (const Int& qq : {q, q2}) {
          if (gcd(pp, qq) != 1) continue;
          if (evaluate(f, pp, qq) == 0 || evaluate(f, -pp, qq) == 0) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace mordell
