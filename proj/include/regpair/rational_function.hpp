#pragma once

#include <string>

#include "regpair/p1point.hpp"
#include "regpair/polynomial.hpp"

namespace regpair {

// Rational function on P^1 in canonical form: num and den are monic and
// coprime, and the recorded scalar carries the leading constant, so equality
// is structural. The zero function is lead = 0 with num = den = 1; most
// operations refuse it.
struct RationalFunction1 {
  Polynomial1 num;
  Polynomial1 den;
  GaussianRational lead;

  RationalFunction1()
      : num(Polynomial1::constant(GaussianRational(1))),
        den(Polynomial1::constant(GaussianRational(1))),
        lead(1) {}

  RationalFunction1(const Polynomial1& n, const Polynomial1& d);

  static RationalFunction1 constant(const GaussianRational& c) {
    RationalFunction1 f;
    f.lead = c;
    return f;
  }
  static RationalFunction1 var() {
    return RationalFunction1(Polynomial1::var(), Polynomial1::constant(GaussianRational(1)));
  }
  static RationalFunction1 zero() { return constant(GaussianRational(0)); }

  bool is_zero() const { return lead.is_zero(); }
  bool is_constant() const { return num.degree() == 0 && den.degree() == 0; }
  int degree() const { return std::max(num.degree(), den.degree()); }  // as a map P^1 -> P^1

  struct Eval {
    enum class Kind { Value, Zero, Pole } kind;
    GaussianRational value;  // set when kind == Value

    bool is_value() const { return kind == Kind::Value; }
    bool is_zero() const { return kind == Kind::Zero; }
    bool is_pole() const { return kind == Kind::Pole; }
  };

  // Exact value at p; Zero / Pole signals when ord_p != 0.
  Eval eval(const P1Point& p) const;

  // Value as a point of P^1 (total map; requires a nonconstant or nonzero f).
  P1Point eval_point(const P1Point& p) const;

  // Vanishing order at p; at infinity deg(den) - deg(num).
  int order_at(const P1Point& p) const;

  friend RationalFunction1 operator*(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator/(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator+(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator-(const RationalFunction1& a, const RationalFunction1& b);
  friend RationalFunction1 operator-(const RationalFunction1& a);

  RationalFunction1 pow(long e) const;
  RationalFunction1 inv() const;
  RationalFunction1 derivative() const;

  friend bool operator==(const RationalFunction1& a, const RationalFunction1& b) {
    return a.lead == b.lead && a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RationalFunction1& a, const RationalFunction1& b) {
    return !(a == b);
  }

  std::string to_string(const std::string& var = "z") const;
};

// f(m(z)) for a Mobius map m — exact substitution.
RationalFunction1 compose_mobius(const RationalFunction1& f, const MobiusMap& m);

// Recursive-descent parser over + - * / ^ ( ), integers, fractions, decimals,
// 'i', and the given variable name.
RationalFunction1 parse_function(const std::string& text, const std::string& var = "z");

}  // namespace regpair
