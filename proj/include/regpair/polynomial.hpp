#pragma once

#include <complex>
#include <string>
#include <vector>

#include "regpair/gaussian.hpp"

namespace regpair {

// Univariate polynomial over Q(i), constant term first. The zero polynomial
// is the empty coefficient list; otherwise the leading coefficient is nonzero.
struct Polynomial1 {
  std::vector<GaussianRational> coeffs;

  Polynomial1() = default;
  explicit Polynomial1(std::vector<GaussianRational> c) : coeffs(std::move(c)) {
    normalize();
  }
  static Polynomial1 constant(const GaussianRational& c) {
    return c.is_zero() ? Polynomial1() : Polynomial1({c});
  }
  static Polynomial1 var() { return Polynomial1({GaussianRational(0), GaussianRational(1)}); }
  // z - a
  static Polynomial1 linear(const GaussianRational& a) {
    return Polynomial1({-a, GaussianRational(1)});
  }

  void normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const GaussianRational& lead() const;
  GaussianRational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs.size())) return GaussianRational(0);
    return coeffs[k];
  }

  bool is_one() const { return coeffs.size() == 1 && coeffs[0].is_one(); }

  GaussianRational eval(const GaussianRational& z) const;
  std::complex<double> eval(const std::complex<double>& z) const;

  Polynomial1 derivative() const;
  Polynomial1 monic() const;
  Polynomial1 scaled(const GaussianRational& c) const;
  Polynomial1 pow(long e) const;

  // Largest k with (z - a)^k dividing this (0 for nonroots).
  int order_at(const GaussianRational& a) const;

  // Exact division by (z - a); the remainder must vanish.
  Polynomial1 deflate(const GaussianRational& a) const;

  friend Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b);
  friend Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b);
  friend Polynomial1 operator-(const Polynomial1& a);
  friend Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b);
  friend bool operator==(const Polynomial1& a, const Polynomial1& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const Polynomial1& a, const Polynomial1& b) { return !(a == b); }

  // Renders with the given variable name, e.g. "z^2-1".
  std::string to_string(const std::string& var = "z") const;
};

// q, r with a = q*b + r and deg r < deg b.
std::pair<Polynomial1, Polynomial1> poly_divmod(const Polynomial1& a, const Polynomial1& b);

// Monic gcd.
Polynomial1 poly_gcd(Polynomial1 a, Polynomial1 b);

}  // namespace regpair
