#pragma once

#include <map>

#include "regpair/rational_function.hpp"
#include "regpair/roots.hpp"

namespace regpair {

// Finite integer-weighted sum of points of P^1. Zero multiplicities are never
// stored, so equality is structural.
struct Divisor {
  std::map<P1Point, long> mult;

  void add(const P1Point& p, long n) {
    if (n == 0) return;
    auto it = mult.find(p);
    if (it == mult.end()) {
      mult.emplace(p, n);
    } else {
      it->second += n;
      if (it->second == 0) mult.erase(it);
    }
  }

  long at(const P1Point& p) const {
    auto it = mult.find(p);
    return it == mult.end() ? 0 : it->second;
  }

  long degree() const {
    long d = 0;
    for (auto& [p, n] : mult) d += n;
    return d;
  }

  bool is_zero() const { return mult.empty(); }
  bool contains(const P1Point& p) const { return mult.count(p) != 0; }

  Divisor& operator+=(const Divisor& o) {
    for (auto& [p, n] : o.mult) add(p, n);
    return *this;
  }
  friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
  friend Divisor operator-(const Divisor& a) {
    Divisor out;
    for (auto& [p, n] : a.mult) out.mult.emplace(p, -n);
    return out;
  }
  friend Divisor operator-(Divisor a, const Divisor& b) { return a += -b; }
  Divisor scaled(long k) const {
    Divisor out;
    if (k == 0) return out;
    for (auto& [p, n] : mult) out.mult.emplace(p, k * n);
    return out;
  }
  friend bool operator==(const Divisor& a, const Divisor& b) { return a.mult == b.mult; }
  friend bool operator!=(const Divisor& a, const Divisor& b) { return !(a == b); }

  bool disjoint_from(const Divisor& o) const {
    for (auto& [p, n] : mult)
      if (o.contains(p)) return false;
    return true;
  }

  std::string to_string() const;
};

// Formal sum of points with multiplicative C^* coefficients; merging repeated
// points multiplies the coefficients.
struct ZeroCycleC {
  std::map<P1Point, GaussianRational> coeff;

  void mul(const P1Point& p, const GaussianRational& c) {
    if (c.is_zero()) throw PreconditionError("zero coefficient in a C^*-cycle");
    auto it = coeff.find(p);
    if (it == coeff.end())
      coeff.emplace(p, c);
    else
      it->second *= c;
  }
};

// div(f) = sum of vanishing orders over all points of P^1, infinity included.
// Requires num and den to split into linear factors over Q(i).
Divisor principal_divisor(const RationalFunction1& f);

// The unique monic/monic representative with lead 1 and the given divisor.
// The divisor must have degree 0.
RationalFunction1 function_from_divisor(const Divisor& d);

// Image of each point with its multiplicity kept.
Divisor pushforward_divisor(const RationalFunction1& pi, const Divisor& d);

// Fiberwise preimage with ramification indices; every fiber must be
// Q(i)-rational. deg(pullback) = deg(pi) * deg(d).
Divisor pullback_divisor(const RationalFunction1& pi, const Divisor& d);

}  // namespace regpair
