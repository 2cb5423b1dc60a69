#include "regpair/divisor.hpp"

namespace regpair {

std::string Divisor::to_string() const {
  if (mult.empty()) return "0";
  std::string out;
  for (auto& [p, n] : mult) {
    std::string term;
    if (n == 1)
      term = "(" + p.to_string() + ")";
    else if (n == -1)
      term = "-(" + p.to_string() + ")";
    else
      term = std::to_string(n) + "(" + p.to_string() + ")";
    if (out.empty())
      out = term;
    else if (term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

Divisor principal_divisor(const RationalFunction1& f) {
  if (f.is_zero()) throw PreconditionError("divisor of the zero function");
  Divisor d;
  for (auto& [r, m] : factor_linear(f.num).roots) d.add(P1Point(r), m);
  for (auto& [r, m] : factor_linear(f.den).roots) d.add(P1Point(r), -m);
  d.add(P1Point::infinity(), f.den.degree() - f.num.degree());
  return d;
}

RationalFunction1 function_from_divisor(const Divisor& d) {
  if (d.degree() != 0)
    throw PreconditionError("function_from_divisor: divisor has degree " +
                            std::to_string(d.degree()));
  Polynomial1 num = Polynomial1::constant(GaussianRational(1));
  Polynomial1 den = Polynomial1::constant(GaussianRational(1));
  for (auto& [p, n] : d.mult) {
    if (p.is_infinity()) continue;  // balances automatically since deg = 0
    Polynomial1 lin = Polynomial1::linear(p.finite());
    if (n > 0)
      num = num * lin.pow(n);
    else
      den = den * lin.pow(-n);
  }
  return RationalFunction1(num, den);
}

Divisor pushforward_divisor(const RationalFunction1& pi, const Divisor& d) {
  if (pi.is_zero() || pi.is_constant())
    throw PreconditionError("pushforward along a constant map");
  Divisor out;
  for (auto& [p, n] : d.mult) out.add(pi.eval_point(p), n);
  return out;
}

Divisor pullback_divisor(const RationalFunction1& pi, const Divisor& d) {
  if (pi.is_zero() || pi.is_constant())
    throw PreconditionError("pullback along a constant map");
  const int deg = pi.degree();
  Divisor out;
  for (auto& [q, n] : d.mult) {
    int at_infinity = 0;
    Polynomial1 fiber;
    if (q.is_infinity()) {
      fiber = pi.den;
      at_infinity = pi.num.degree() - pi.den.degree();
    } else {
      fiber = pi.num.scaled(pi.lead) - pi.den.scaled(q.finite());
      at_infinity = deg - fiber.degree();  // drop in degree = ramification over q at infinity
    }
    if (fiber.is_zero()) throw Error("internal: empty fiber polynomial");
    for (auto& [r, m] : factor_linear(fiber).roots) out.add(P1Point(r), n * m);
    if (at_infinity > 0) out.add(P1Point::infinity(), n * at_infinity);
  }
  return out;
}

}  // namespace regpair
