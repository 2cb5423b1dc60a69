#include "regpair/tame.hpp"

#include <set>

namespace regpair {

namespace {

// Unit part of f at a finite point a: u with f = (z-a)^ord * u, u(a) != 0, inf.
GaussianRational unit_value_at(const RationalFunction1& f, const GaussianRational& a,
                               int ord) {
  Polynomial1 num = f.num;
  Polynomial1 den = f.den;
  int k = ord;
  while (k > 0) {
    num = num.deflate(a);
    --k;
  }
  while (k < 0) {
    den = den.deflate(a);
    ++k;
  }
  return f.lead * num.eval(a) / den.eval(a);
}

}  // namespace

TameSymbolValue tame_symbol(const RationalFunction1& f, const RationalFunction1& g,
                            const P1Point& p) {
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("tame symbol of the zero function");
  if (p.is_infinity()) {
    // conjugate by z -> 1/z and read the symbol at 0
    MobiusMap inv = MobiusMap::inversion();
    TameSymbolValue at0 =
        tame_symbol(compose_mobius(f, inv), compose_mobius(g, inv), P1Point(0L));
    return {P1Point::infinity(), at0.value};
  }
  const GaussianRational a = p.finite();
  int of = f.order_at(p);
  int og = g.order_at(p);
  GaussianRational uf = unit_value_at(f, a, of);
  GaussianRational ug = unit_value_at(g, a, og);
  // (-1)^{of*og} * uf^{og} / ug^{of}
  GaussianRational val = uf.pow(og) / ug.pow(of);
  if ((static_cast<long>(of) * og) % 2 != 0) val = -val;
  return {p, val};
}

std::vector<TameSymbolValue> tame_boundary_curve(const RationalFunction1& f,
                                                 const RationalFunction1& g) {
  if (f.is_zero() || g.is_zero())
    throw PreconditionError("tame boundary of the zero function");
  std::set<P1Point> support;
  for (const Polynomial1* poly : {&f.num, &f.den, &g.num, &g.den}) {
    if (poly->degree() == 0) continue;
    for (auto& [r, m] : factor_linear(*poly).roots) support.insert(P1Point(r));
  }
  if (f.order_at(P1Point::infinity()) != 0 || g.order_at(P1Point::infinity()) != 0)
    support.insert(P1Point::infinity());
  std::vector<TameSymbolValue> out;
  out.reserve(support.size());
  for (const P1Point& p : support) out.push_back(tame_symbol(f, g, p));
  return out;
}

ZeroCycleC tame_boundary_cycle(const RationalFunction1& f, const RationalFunction1& g) {
  ZeroCycleC cycle;
  for (const TameSymbolValue& t : tame_boundary_curve(f, g)) cycle.mul(t.at, t.value);
  return cycle;
}

GaussianRational weil_product(const RationalFunction1& f, const RationalFunction1& g) {
  GaussianRational prod(1);
  for (const TameSymbolValue& t : tame_boundary_curve(f, g)) prod *= t.value;
  return prod;
}

}  // namespace regpair
