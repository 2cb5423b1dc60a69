#pragma once

#include <complex>
#include <vector>

#include "regpair/rational_function.hpp"

namespace regpair {

using Cx = std::complex<double>;

// Projection of C onto R(p) = (2 pi i)^p R: the real part for even p, i times
// the imaginary part for odd p. pi_p + pi_{p-1} = identity.
inline Cx pi_p(const Cx& c, int p) {
  bool even = ((p % 2) + 2) % 2 == 0;
  return even ? Cx(c.real(), 0.0) : Cx(0.0, c.imag());
}

// Pointwise value of a real differential form in chart coordinates:
// degree 0 -> {c}, degree 1 -> {c_dx, c_dy}, degree 2 -> {c_dxdy}.
struct FormSample {
  int degree;
  std::vector<double> coeffs;
};

// Holomorphic form value: degree m with the coefficient of dt^{wedge m}.
// On a curve every wedge of two or more dt's vanishes.
struct HoloFormSample {
  int degree;
  Cx coeff;
};

// The real (m-1)-form of the current ladder for m = 1, 2, 3 rational
// functions, evaluated at a smooth point:
//   m=1:  log|f1|
//   m=2:  log|f1| darg f2 - log|f2| darg f1
//   m=3:  Alt_3[ 1/2 log|f1| darg f2 ^ darg f3 + 1/6 log|f1| dlog|f2| ^ dlog|f3| ]
// darg f is Im(f'/f dt) throughout; no branch of arg is ever taken.
FormSample r_current_eval(const std::vector<RationalFunction1>& fs, const Cx& t0);

// wedge_j dlog f_j pulled back to the chart; identically zero for m >= 2.
HoloFormSample omega_eval(const std::vector<RationalFunction1>& fs, const Cx& t0);

struct DRelationResult {
  double residual;
  double bound_constant;  // residual / h^2
  bool exact_zero;        // structurally zero case (constant f, f1 = f2)
};

// m=1: centered finite differences of log|f| against Re(f'/f); second order.
// m=2: discrete Stokes loop of the 1-form around a square of half-width h;
// the exterior derivative vanishes on a curve, so the loop residual is pure
// quadrature error and is reported against a C h^2 envelope.
DRelationResult d_relation_check(const std::vector<RationalFunction1>& fs, const Cx& t0,
                                 double h);

// Complex value and logarithmic derivative of f at t, both finite; throws
// PreconditionError at zeros/poles.
Cx eval_cx(const RationalFunction1& f, const Cx& t);
Cx dlog_cx(const RationalFunction1& f, const Cx& t);

}  // namespace regpair
