#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "regpair/polynomial.hpp"

namespace regpair {

// p = lead * prod (z - r_k)^{m_k}, roots sorted.
struct LinearFactorization {
  GaussianRational lead;
  std::vector<std::pair<GaussianRational, int>> roots;
};

// Complete factorization into linear factors over Q(i). Degrees <= 2 are
// handled by exact formulas; above that, double-precision root estimates are
// rationalized and verified by exact deflation, so an accepted factorization
// is always correct. Throws ExactnessError when an irreducible factor of
// degree > 1 over Q(i) remains (or a root cannot be recognized).
LinearFactorization factor_linear(const Polynomial1& p);

// All complex roots at double precision (Durand-Kerner), multiplicities
// resolved through exact square-free splitting. Deterministic.
std::vector<std::complex<double>> numeric_roots(const Polynomial1& p);

}  // namespace regpair
