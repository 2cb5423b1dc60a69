#pragma once

#include <string>
#include <vector>

#include "regpair/quadrature.hpp"
#include "regpair/rational_function.hpp"

namespace regpair {

// Rational function on P^1 x P^1 as numerator/denominator coefficient grids:
// coeff[i][j] multiplies z^i w^j.
struct BivariateRational {
  std::vector<std::vector<GaussianRational>> num;
  std::vector<std::vector<GaussianRational>> den;

  static BivariateRational from_grids(std::vector<std::vector<GaussianRational>> n,
                                      std::vector<std::vector<GaussianRational>> d);
  bool num_zero() const;
};

// Rational curve t -> (z(t), w(t)) inside P^1 x P^1. The two charts |t| <= 1
// and |t| >= 1 are handled by the integrator. A coordinate can be the
// constant infinity (curves such as {w = inf}).
struct ParametrizedCurveInSurface {
  RationalFunction1 z_of_t;
  RationalFunction1 w_of_t;
  bool z_infinite = false;
  bool w_infinite = false;
  std::string label;
};

// Exact restriction of an ambient function to the curve. The result can be
// identically zero or identically infinite when the curve sits inside the
// zero or polar locus.
struct Pullback {
  enum class Kind { Function, IdenticallyZero, IdenticallyInfinite } kind;
  RationalFunction1 fn;  // valid when kind == Function

  bool degenerate() const { return kind != Kind::Function; }
  bool constant() const { return degenerate() || fn.is_constant(); }
};

Pullback pull_back(const BivariateRational& f, const ParametrizedCurveInSurface& curve);

// One component of a tame boundary on the surface: the curve together with
// the vanishing orders of the two symbol entries along it. The singular set
// of the integrand is derived from the pullbacks unless supplied here.
struct TameComponent {
  ParametrizedCurveInSurface curve;
  long nu1 = 0;  // ord of g1 along the curve
  long nu2 = 0;  // ord of g2 along the curve
  bool singular_supplied = false;
  std::vector<Cx> singular_finite;
  bool singular_at_infinity = false;
};

struct Pair1Term {
  std::string label;
  bool short_circuited = false;
  std::string note;  // why the term was skipped, when it was
  QuadratureResult integral;
  bool numeric_singularities = false;  // binary64 root fallback used
};

struct Pair1Result {
  double value = 0.0;           // P with pairing = 2 pi i P
  double error_estimate = 0.0;
  std::vector<Pair1Term> terms;
  bool numeric_singularities = false;
};

// The curve-level integral pairing of two surface symbols:
//   P = (2 pi)^-2 sum_j  int_{E_j} [log|F1| darg F2 - log|F2| darg F1] ^ darg H_j
// with F_i the pullbacks of f_i to E_j and H_j the pullback of
// g1^{nu_j(g2)} / g2^{nu_j(g1)}. Constant pullbacks contribute exactly zero
// and are short-circuited with a note.
Pair1Result pair1(const BivariateRational& f1, const BivariateRational& f2,
                  const BivariateRational& g1, const BivariateRational& g2,
                  const std::vector<TameComponent>& xi2_components,
                  const QuadratureOptions& opts);

}  // namespace regpair
