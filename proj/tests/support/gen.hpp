#pragma once

// Seeded generators shared by the unit and acceptance suites. Everything runs
// through the portable SplitMix engine so expected values can be frozen.

#include <vector>

#include "regpair/divisor.hpp"
#include "regpair/pairing.hpp"

namespace regpair::gen {

// Small Gaussian rational with numerators in [-span, span] and denominators
// in {1, 2, 3}.
inline GaussianRational small_gq(Rng& rng, long span = 4, bool allow_imag = true) {
  Rat re(rng.range(-span, span), rng.range(1, 3));
  re.canonicalize();
  Rat im(0);
  if (allow_imag && rng.range(0, 2) == 0) {
    im = Rat(rng.range(-span, span), rng.range(1, 3));
    im.canonicalize();
  }
  return {re, im};
}

// Rational function built from random linear factors: zero/pole sets are
// Q(i)-rational by construction, total degree of num and den each <= max_deg.
inline RationalFunction1 random_function(Rng& rng, int max_deg = 5) {
  int num_deg = static_cast<int>(rng.range(1, max_deg));
  int den_deg = static_cast<int>(rng.range(0, max_deg));
  std::vector<GaussianRational> num_roots, den_roots;
  auto fresh = [&](std::vector<GaussianRational>& taken_a,
                   std::vector<GaussianRational>& taken_b) {
    for (int tries = 0; tries < 100; ++tries) {
      GaussianRational c = small_gq(rng);
      bool clash = false;
      for (auto& t : taken_a)
        if (t == c) clash = true;
      for (auto& t : taken_b)
        if (t == c) clash = true;
      if (!clash) return c;
    }
    throw Error("generator exhausted");
  };
  Polynomial1 num = Polynomial1::constant(GaussianRational(1));
  Polynomial1 den = Polynomial1::constant(GaussianRational(1));
  for (int k = 0; k < num_deg; ++k) {
    GaussianRational r = fresh(num_roots, den_roots);
    num_roots.push_back(r);
    num = num * Polynomial1::linear(r);
  }
  for (int k = 0; k < den_deg; ++k) {
    GaussianRational r = fresh(den_roots, num_roots);
    den_roots.push_back(r);
    den = den * Polynomial1::linear(r);
  }
  GaussianRational lead = small_gq(rng);
  if (lead.is_zero()) lead = GaussianRational(1);
  RationalFunction1 f(num, den);
  f.lead = f.lead * lead;
  return f;
}

// Degree-0 divisor with support size <= max_support on fresh random points,
// avoiding the given forbidden set.
inline Divisor random_degree0_divisor(Rng& rng, int max_pairs = 3,
                                      const std::vector<P1Point>& forbidden = {},
                                      bool allow_infinity = false) {
  Divisor d;
  int pairs = static_cast<int>(rng.range(1, max_pairs));
  auto fresh_point = [&]() {
    for (int tries = 0; tries < 200; ++tries) {
      P1Point p = (allow_infinity && rng.range(0, 9) == 0)
                      ? P1Point::infinity()
                      : P1Point(small_gq(rng, 5));
      bool clash = d.contains(p);
      for (auto& q : forbidden)
        if (q == p) clash = true;
      if (!clash) return p;
    }
    throw Error("generator exhausted");
  };
  for (int k = 0; k < pairs; ++k) {
    long m = rng.range(1, 2);
    P1Point p = fresh_point();
    d.add(p, m);
    P1Point q = fresh_point();
    d.add(q, -m);
  }
  return d;
}

// A pair (f, g) with disjoint divisor supports.
inline std::pair<RationalFunction1, RationalFunction1> disjoint_pair(Rng& rng,
                                                                     int max_deg = 5) {
  for (int tries = 0; tries < 200; ++tries) {
    RationalFunction1 f = random_function(rng, max_deg);
    RationalFunction1 g = random_function(rng, max_deg);
    Divisor df = principal_divisor(f);
    Divisor dg = principal_divisor(g);
    if (df.disjoint_from(dg)) return {f, g};
  }
  throw Error("generator exhausted");
}

}  // namespace regpair::gen
