#pragma once

#include <complex>
#include <string>

#include "regpair/errors.hpp"
#include "regpair/numeric.hpp"

namespace regpair {

// Exact element of Q(i). Fractions stay reduced with positive denominators
// because every component passes through mpq canonicalization.
struct GaussianRational {
  Rat re;
  Rat im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(const Rat& r) : re(r), im(0) {}
  GaussianRational(const Rat& r, const Rat& i) : re(r), im(i) {}

  static GaussianRational i() { return GaussianRational(Rat(0), Rat(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }

  // |z|^2, an exact nonnegative rational.
  Rat norm2() const { return re * re + im * im; }

  GaussianRational conj() const { return {re, -im}; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) throw PreconditionError("division by zero in Q(i)");
    Rat n = b.norm2();
    GaussianRational num = a * b.conj();
    return {num.re / n, num.im / n};
  }
  GaussianRational& operator+=(const GaussianRational& b) { return *this = *this + b; }
  GaussianRational& operator-=(const GaussianRational& b) { return *this = *this - b; }
  GaussianRational& operator*=(const GaussianRational& b) { return *this = *this * b; }
  GaussianRational& operator/=(const GaussianRational& b) { return *this = *this / b; }

  GaussianRational inv() const { return GaussianRational(1) / *this; }

  GaussianRational pow(long e) const;

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }
  friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
  }

  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }

  // "a/b", "a/b+c/d*i", "a/b-c/d*i"
  std::string to_string() const;
};

// Square root in Q(i), when one exists.
std::optional<GaussianRational> gq_sqrt(const GaussianRational& z);

// Accepts the canonical form plus common shorthands: "i", "-i", "2i", "3*i",
// "1/2-i", "0.5+0.25*i".
GaussianRational parse_gq(const std::string& s);

}  // namespace regpair
