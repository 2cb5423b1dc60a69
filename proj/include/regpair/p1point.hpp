#pragma once

#include <optional>
#include <string>

#include "regpair/gaussian.hpp"

namespace regpair {

// Point of P^1 over Q(i): a finite value or the point at infinity.
struct P1Point {
  std::optional<GaussianRational> v;  // empty = infinity

  P1Point() : v(GaussianRational(0)) {}
  P1Point(const GaussianRational& z) : v(z) {}
  P1Point(long z) : v(GaussianRational(z)) {}
  static P1Point infinity() {
    P1Point p;
    p.v.reset();
    return p;
  }

  bool is_infinity() const { return !v.has_value(); }
  const GaussianRational& finite() const {
    if (!v) throw PreconditionError("finite() on the point at infinity");
    return *v;
  }

  // Homogeneous coordinates (x : y); infinity = (1 : 0).
  std::pair<GaussianRational, GaussianRational> hom() const {
    if (is_infinity()) return {GaussianRational(1), GaussianRational(0)};
    return {*v, GaussianRational(1)};
  }

  friend bool operator==(const P1Point& a, const P1Point& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return *a.v == *b.v;
  }
  friend bool operator!=(const P1Point& a, const P1Point& b) { return !(a == b); }
  friend bool operator<(const P1Point& a, const P1Point& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return *a.v < *b.v;
  }

  std::string to_string() const { return is_infinity() ? "inf" : v->to_string(); }
};

P1Point parse_point(const std::string& s);

// z -> (a z + b) / (c z + d), ad - bc != 0.
struct MobiusMap {
  GaussianRational a, b, c, d;

  MobiusMap(GaussianRational a_, GaussianRational b_, GaussianRational c_, GaussianRational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if ((a * d - b * c).is_zero())
      throw PreconditionError("degenerate Mobius map (ad - bc = 0)");
  }

  static MobiusMap identity() {
    return MobiusMap(GaussianRational(1), GaussianRational(0), GaussianRational(0),
                     GaussianRational(1));
  }
  static MobiusMap inversion() {
    return MobiusMap(GaussianRational(0), GaussianRational(1), GaussianRational(1),
                     GaussianRational(0));
  }

  P1Point apply(const P1Point& p) const {
    auto [x, y] = p.hom();
    GaussianRational nx = a * x + b * y;
    GaussianRational ny = c * x + d * y;
    if (ny.is_zero()) return P1Point::infinity();
    return P1Point(nx / ny);
  }

  MobiusMap compose(const MobiusMap& rhs) const {  // this after rhs
    return MobiusMap(a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d, c * rhs.a + d * rhs.c,
                     c * rhs.b + d * rhs.d);
  }

  MobiusMap inverse() const { return MobiusMap(d, -b, -c, a); }
};

// [z1, z2; z3, z4] = ((z1-z3)(z2-z4)) / ((z2-z3)(z1-z4)), computed in
// homogeneous coordinates so that infinity needs no special case. The four
// points must be pairwise distinct; the value is then finite and nonzero.
GaussianRational cross_ratio(const P1Point& z1, const P1Point& z2, const P1Point& z3,
                             const P1Point& z4);

}  // namespace regpair
