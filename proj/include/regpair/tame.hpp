#pragma once

#include <vector>

#include "regpair/divisor.hpp"

namespace regpair {

struct TameSymbolValue {
  P1Point at;
  GaussianRational value;  // nonzero by construction
};

// T_p{f, g} = (-1)^{ord_p(f) ord_p(g)} (f^{ord_p(g)} / g^{ord_p(f)})(p),
// computed by exact cancellation of the order-zero combination — no limits,
// no floating point.
TameSymbolValue tame_symbol(const RationalFunction1& f, const RationalFunction1& g,
                            const P1Point& p);

// All tame symbols at points where f or g has a zero or pole. Entries whose
// value is 1 are kept so that the support is deterministic.
std::vector<TameSymbolValue> tame_boundary_curve(const RationalFunction1& f,
                                                 const RationalFunction1& g);

ZeroCycleC tame_boundary_cycle(const RationalFunction1& f, const RationalFunction1& g);

// prod_p T_p{f, g}; equal to 1 for every valid input (Weil reciprocity on P^1).
GaussianRational weil_product(const RationalFunction1& f, const RationalFunction1& g);

}  // namespace regpair
