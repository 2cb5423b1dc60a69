#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "regpair/errors.hpp"

namespace regpair {

using Cx = std::complex<double>;

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long cells_used = 0;
  int excision_levels = 0;
};

// A real 2-form on the curve, described in the t-chart: sample(t) is the
// dx^dy coefficient at a finite regular point. Declared singular points are
// excised; the integrand must be smooth away from them.
struct Integrand2D {
  std::function<double(const Cx&)> sample;
  std::vector<Cx> singular_finite;
  bool singular_at_infinity = false;
};

enum class Domain {
  UnitDisk,   // the chart disk |t| <= 1 only
  FullCurve,  // all of P^1, both charts
};

struct QuadratureOptions {
  double tol = 1e-8;
  long max_cells = 600000;
  int base_levels = 4;   // excision ladder depth tried first
  int max_levels = 12;   // hard cap on ladder extension
};

struct NonConvergenceError : Error {
  QuadratureResult best;
  NonConvergenceError(const std::string& what, QuadratureResult b)
      : Error(what), best(b) {}
};

// Deterministic adaptive integration with excised singularities.
//
// The domain splits into chart halves; each half is tiled by polar patches
// around its singular points (nearest-point regions, so every patch boundary
// is aligned with the local polar grid). Around each singular point, disks of
// radius rho_k = rho0 2^-k are excised and the excised mass is recovered by
// extrapolation in the basis {rho log rho, rho, rho^2 log rho, rho^2, ...};
// the ladder deepens until successive extrapolants differ by less than tol.
// The subdivision tree and every summation order are fixed, so results are
// bitwise reproducible.
QuadratureResult integrate_2form(const Integrand2D& form, Domain domain,
                                 const QuadratureOptions& opts);

}  // namespace regpair
