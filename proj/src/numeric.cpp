#include "regpair/numeric.hpp"

#include <cmath>
#include <cstdlib>

#include "regpair/errors.hpp"

namespace regpair {

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (sgn(x) == 0) return Rat(0);
  const Int& num = x.get_num();
  const Int& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

namespace {

double log_mpz(const Int& z) {
  // z > 0. mpz_get_d_2exp returns d in [0.5, 1) with z = d * 2^e.
  signed long e = 0;
  double d = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * M_LN2;
}

}  // namespace

double rat_log(const Rat& x) {
  if (sgn(x) <= 0) throw PreconditionError("rat_log: argument must be positive");
  return log_mpz(x.get_num()) - log_mpz(x.get_den());
}

double rat_to_double(const Rat& x) { return x.get_d(); }

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::string t;
  t.reserve(s.size());
  for (char c : s) {
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t.empty()) throw ParseError("empty rational literal");

  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point out
    if (t.find('/') != std::string::npos)
      throw ParseError("rational literal mixes '.' and '/': " + t);
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac_len = t.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("bad decimal literal: " + t);
    for (size_t i = 0; i < digits.size(); ++i) {
      char c = digits[i];
      if ((c == '+' || c == '-') && i == 0) continue;
      if (!isdigit(static_cast<unsigned char>(c)))
        throw ParseError("bad decimal literal: " + t);
    }
    Int num(digits, 10);
    Int den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  if (t[0] == '+') t = t.substr(1);  // mpz rejects an explicit plus sign
  if (t.empty()) throw ParseError("empty rational literal");
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(Int(t, 10));
      return r;
    }
    std::string ns = t.substr(0, slash);
    std::string ds = t.substr(slash + 1);
    if (ns.empty() || ds.empty()) throw ParseError("bad rational literal: " + t);
    Int num(ns, 10);
    Int den(ds, 10);
    if (den == 0) throw ParseError("zero denominator in: " + t);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + t);
  }
}

}  // namespace regpair
