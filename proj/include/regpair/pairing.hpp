#pragma once

#include <map>
#include <string>
#include <vector>

#include "regpair/log_sum.hpp"
#include "regpair/tame.hpp"

namespace regpair {

// sum_i (f_i, component_i): a curve-level higher Chow precycle.
struct PrecycleCurve {
  std::vector<std::pair<RationalFunction1, std::string>> terms;
};

using ComponentDivisor = std::map<std::string, Divisor>;

// <beta, eps> = sum_i sum_{p in eps on the i-th component} m_p log|f_i(p)|.
// Requires eps-support disjoint from zeros/poles of each f_i on its component.
LogSum pair0(const PrecycleCurve& beta, const ComponentDivisor& eps);

// Single-component convenience.
LogSum pair0(const RationalFunction1& f, const Divisor& eps);

struct PairingCheck {
  LogSum lhs;
  LogSum rhs;
  bool equal;
};

// Both evaluations of <div f, div g>: the g-side sum of log|f| and the f-side
// sum of log|g|. `equal` is the exact zero test of the difference and must be
// true whenever the supports are disjoint.
PairingCheck reciprocity_check0(const RationalFunction1& f, const RationalFunction1& g);

// <eta, pi^* eps> on the source against <pi_* eta, eps> on the target,
// both computed exactly through canonical representing functions.
PairingCheck projection_check0(const RationalFunction1& pi, const Divisor& eta,
                               const Divisor& eps);

struct Witness {
  RationalFunction1 g;
  LogSum value;       // exactly nonzero
  int candidates_tried;
};

// Finds g with supp(div g) disjoint from supp(eta) and <div g, eta> != 0,
// searching a deterministic Q(i) grid of candidates (z-a) and (z-a)/(z-b).
Witness nondegeneracy_witness(const Divisor& eta, int budget = 200);

// Two P^1 components glued at nodes, with optional named marked points.
struct CurveConfiguration {
  struct Node {
    std::string comp_a;
    P1Point a;
    std::string comp_b;
    P1Point b;
  };
  std::vector<std::string> components;
  std::vector<Node> nodes;
  std::map<std::string, std::pair<std::string, P1Point>> marked;

  // Checks the shape needed by the Pic^{0,0} map: exactly two components
  // joined by exactly two nodes, node points distinct on each component.
  void validate_two_component() const;
};

// Degree-0 divisor on every component, supported away from the nodes.
using Pic00Element = ComponentDivisor;

// The C^*-valued class of gamma:
//   (phi_A(r1)/phi_A(r2)) / (phi_B(r1)/phi_B(r2))
// with phi_X the canonical function with divisor gamma_X. Independent of the
// scalar normalization of the phis.
GaussianRational pic00_h(const CurveConfiguration& config, const Pic00Element& gamma);

// log|h(gamma)| against the pairing sum <r1-r2, gamma>_A + <r2-r1, gamma>_B,
// both as exact log sums; `equal` must be true.
PairingCheck hmap_log_identity(const CurveConfiguration& config, const Pic00Element& gamma);

// deg_delta_n * (pairing sum), the curve-level regulator value of the nodal
// configuration.
LogSum nodal_regulator(const CurveConfiguration& config, const Pic00Element& gamma,
                       long deg_delta_n);

}  // namespace regpair
