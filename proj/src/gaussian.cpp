#include "regpair/gaussian.hpp"

#include <cctype>

namespace regpair {

GaussianRational GaussianRational::pow(long e) const {
  if (e == 0) return GaussianRational(1);
  if (is_zero()) {
    if (e < 0) throw PreconditionError("0 raised to a negative power");
    return GaussianRational(0);
  }
  GaussianRational base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  GaussianRational acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::string GaussianRational::to_string() const {
  if (sgn(im) == 0) return rat_to_string(re);
  std::string out = rat_to_string(re);
  if (sgn(im) > 0) {
    out += "+" + rat_to_string(im) + "*i";
  } else {
    out += "-" + rat_to_string(Rat(-im)) + "*i";
  }
  return out;
}

std::optional<GaussianRational> gq_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational(0);
  auto s = rat_sqrt(z.norm2());
  if (!s) return std::nullopt;
  // (x+iy)^2 = a+bi  =>  x^2 = (a+|z|)/2, y = b/(2x)  (or the y-first route).
  Rat half_sum = (z.re + *s) / 2;
  if (auto x = rat_sqrt(half_sum); x && sgn(*x) != 0) {
    Rat y = z.im / (2 * *x);
    GaussianRational r(*x, y);
    if (r * r == z) return r;
  }
  Rat half_diff = (*s - z.re) / 2;
  if (auto y = rat_sqrt(half_diff); y && sgn(*y) != 0) {
    Rat x = z.im / (2 * *y);
    GaussianRational r(x, *y);
    if (r * r == z) return r;
  }
  // pure real/imaginary edge cases
  if (sgn(z.im) == 0) {
    if (sgn(z.re) > 0) {
      if (auto x = rat_sqrt(z.re)) return GaussianRational(*x, Rat(0));
    } else if (auto y = rat_sqrt(Rat(-z.re))) {
      return GaussianRational(Rat(0), *y);
    }
  }
  return std::nullopt;
}

namespace {

// Splits "s" at the top-level '+'/'-' separating real and imaginary parts.
// Returns the index of the separator, or npos when there is a single term.
size_t find_split(const std::string& s) {
  for (size_t k = 1; k < s.size(); ++k) {
    char c = s[k];
    if ((c == '+' || c == '-') && s[k - 1] != '/' && s[k - 1] != '*' &&
        s[k - 1] != '+' && s[k - 1] != '-') {
      return k;
    }
  }
  return std::string::npos;
}

// Parses a single term, which is either purely real or a multiple of i.
void parse_term(const std::string& term, Rat& re, Rat& im) {
  if (term.empty()) throw ParseError("empty term in scalar literal");
  bool imag = false;
  std::string body = term;
  if (!body.empty() && body.back() == 'i') {
    imag = true;
    body.pop_back();
    if (!body.empty() && body.back() == '*') body.pop_back();
  }
  Rat value;
  if (body.empty() || body == "+") {
    value = 1;
  } else if (body == "-") {
    value = -1;
  } else {
    value = parse_rat(body);
  }
  if (imag)
    im += value;
  else
    re += value;
}

}  // namespace

GaussianRational parse_gq(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty scalar literal");
  Rat re(0), im(0);
  size_t split = find_split(t);
  if (split == std::string::npos) {
    parse_term(t, re, im);
  } else {
    parse_term(t.substr(0, split), re, im);
    parse_term(t.substr(split), re, im);
  }
  return {re, im};
}

}  // namespace regpair
