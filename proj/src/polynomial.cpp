#include "regpair/polynomial.hpp"

#include <algorithm>

namespace regpair {

const GaussianRational& Polynomial1::lead() const {
  if (coeffs.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
  return coeffs.back();
}

GaussianRational Polynomial1::eval(const GaussianRational& z) const {
  GaussianRational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::complex<double> Polynomial1::eval(const std::complex<double>& z) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + it->to_complex();
  return acc;
}

Polynomial1 Polynomial1::derivative() const {
  if (coeffs.size() <= 1) return Polynomial1();
  std::vector<GaussianRational> d(coeffs.size() - 1);
  for (size_t k = 1; k < coeffs.size(); ++k)
    d[k - 1] = coeffs[k] * GaussianRational(static_cast<long>(k));
  return Polynomial1(std::move(d));
}

Polynomial1 Polynomial1::monic() const {
  if (is_zero()) throw PreconditionError("monic form of the zero polynomial");
  return scaled(lead().inv());
}

Polynomial1 Polynomial1::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial1();
  std::vector<GaussianRational> out(coeffs.size());
  for (size_t k = 0; k < coeffs.size(); ++k) out[k] = coeffs[k] * c;
  return Polynomial1(std::move(out));
}

Polynomial1 Polynomial1::pow(long e) const {
  if (e < 0) throw PreconditionError("negative polynomial power");
  Polynomial1 acc = Polynomial1::constant(GaussianRational(1));
  Polynomial1 base = *this;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

int Polynomial1::order_at(const GaussianRational& a) const {
  if (is_zero()) throw PreconditionError("order of the zero polynomial");
  Polynomial1 p = *this;
  int ord = 0;
  while (p.eval(a).is_zero()) {
    p = p.deflate(a);
    ++ord;
  }
  return ord;
}

Polynomial1 Polynomial1::deflate(const GaussianRational& a) const {
  // synthetic division by (z - a)
  if (is_zero()) throw PreconditionError("deflating the zero polynomial");
  std::vector<GaussianRational> q(coeffs.size() - 1);
  GaussianRational carry = coeffs.back();
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
    q[k] = carry;
    carry = coeffs[k] + carry * a;
  }
  if (!carry.is_zero()) throw PreconditionError("deflate: not a root");
  return Polynomial1(std::move(q));
}

Polynomial1 operator+(const Polynomial1& a, const Polynomial1& b) {
  std::vector<GaussianRational> out(std::max(a.coeffs.size(), b.coeffs.size()),
                                    GaussianRational(0));
  for (size_t k = 0; k < a.coeffs.size(); ++k) out[k] += a.coeffs[k];
  for (size_t k = 0; k < b.coeffs.size(); ++k) out[k] += b.coeffs[k];
  return Polynomial1(std::move(out));
}

Polynomial1 operator-(const Polynomial1& a, const Polynomial1& b) { return a + (-b); }

Polynomial1 operator-(const Polynomial1& a) {
  std::vector<GaussianRational> out(a.coeffs.size());
  for (size_t k = 0; k < a.coeffs.size(); ++k) out[k] = -a.coeffs[k];
  return Polynomial1(std::move(out));
}

Polynomial1 operator*(const Polynomial1& a, const Polynomial1& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial1();
  std::vector<GaussianRational> out(a.coeffs.size() + b.coeffs.size() - 1,
                                    GaussianRational(0));
  for (size_t j = 0; j < a.coeffs.size(); ++j) {
    if (a.coeffs[j].is_zero()) continue;
    for (size_t k = 0; k < b.coeffs.size(); ++k)
      out[j + k] += a.coeffs[j] * b.coeffs[k];
  }
  return Polynomial1(std::move(out));
}

std::pair<Polynomial1, Polynomial1> poly_divmod(const Polynomial1& a, const Polynomial1& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  Polynomial1 r = a;
  int db = b.degree();
  if (a.degree() < db) return {Polynomial1(), r};
  std::vector<GaussianRational> q(a.degree() - db + 1, GaussianRational(0));
  GaussianRational inv_lead = b.lead().inv();
  while (!r.is_zero() && r.degree() >= db) {
    int shift = r.degree() - db;
    GaussianRational c = r.lead() * inv_lead;
    q[shift] = c;
    // r -= c * z^shift * b
    std::vector<GaussianRational> sub(shift + b.coeffs.size(), GaussianRational(0));
    for (size_t k = 0; k < b.coeffs.size(); ++k) sub[shift + k] = b.coeffs[k] * c;
    r = r - Polynomial1(std::move(sub));
  }
  return {Polynomial1(std::move(q)), r};
}

Polynomial1 poly_gcd(Polynomial1 a, Polynomial1 b) {
  if (a.is_zero() && b.is_zero()) return Polynomial1();
  while (!b.is_zero()) {
    auto [q, r] = poly_divmod(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) b = b.monic();
  }
  return a.monic();
}

std::string Polynomial1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const GaussianRational& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string term;
    bool needs_parens = sgn(c.im) != 0;
    bool unit = c.is_one();
    bool neg_unit = (c.re == -1 && sgn(c.im) == 0);
    if (k == 0) {
      term = needs_parens ? "(" + c.to_string() + ")" : c.to_string();
    } else {
      std::string mono = (k == 1) ? var : var + "^" + std::to_string(k);
      if (unit)
        term = mono;
      else if (neg_unit)
        term = "-" + mono;
      else if (needs_parens)
        term = "(" + c.to_string() + ")*" + mono;
      else
        term = c.to_string() + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (!term.empty() && term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

}  // namespace regpair
