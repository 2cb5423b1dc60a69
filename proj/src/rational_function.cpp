#include "regpair/rational_function.hpp"

namespace regpair {

RationalFunction1::RationalFunction1(const Polynomial1& n, const Polynomial1& d) {
  if (d.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (n.is_zero()) {
    num = Polynomial1::constant(GaussianRational(1));
    den = Polynomial1::constant(GaussianRational(1));
    lead = GaussianRational(0);
    return;
  }
  Polynomial1 g = poly_gcd(n, d);
  Polynomial1 nn = poly_divmod(n, g).first;
  Polynomial1 dd = poly_divmod(d, g).first;
  lead = nn.lead() / dd.lead();
  num = nn.monic();
  den = dd.monic();
}

RationalFunction1::Eval RationalFunction1::eval(const P1Point& p) const {
  if (is_zero()) throw PreconditionError("evaluating the zero function");
  if (p.is_infinity()) {
    int dn = num.degree(), dd = den.degree();
    if (dn > dd) return {Eval::Kind::Pole, {}};
    if (dn < dd) return {Eval::Kind::Zero, {}};
    return {Eval::Kind::Value, lead};  // num, den monic: leading ratio is lead
  }
  GaussianRational nv = num.eval(p.finite());
  GaussianRational dv = den.eval(p.finite());
  if (dv.is_zero() && nv.is_zero()) {
    // canonical form is coprime, so this cannot happen
    throw Error("internal: common root in canonical form");
  }
  if (dv.is_zero()) return {Eval::Kind::Pole, {}};
  if (nv.is_zero()) return {Eval::Kind::Zero, {}};
  return {Eval::Kind::Value, lead * nv / dv};
}

P1Point RationalFunction1::eval_point(const P1Point& p) const {
  Eval e = eval(p);
  switch (e.kind) {
    case Eval::Kind::Pole:
      return P1Point::infinity();
    case Eval::Kind::Zero:
      return P1Point(GaussianRational(0));
    default:
      return P1Point(e.value);
  }
}

int RationalFunction1::order_at(const P1Point& p) const {
  if (is_zero()) throw PreconditionError("order of the zero function");
  if (p.is_infinity()) return den.degree() - num.degree();
  return num.order_at(p.finite()) - den.order_at(p.finite());
}

RationalFunction1 operator*(const RationalFunction1& a, const RationalFunction1& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction1::zero();
  RationalFunction1 r(a.num * b.num, a.den * b.den);
  r.lead *= a.lead * b.lead;
  return r;
}

RationalFunction1 operator/(const RationalFunction1& a, const RationalFunction1& b) {
  if (b.is_zero()) throw PreconditionError("division by the zero function");
  if (a.is_zero()) return RationalFunction1::zero();
  RationalFunction1 r(a.num * b.den, a.den * b.num);
  r.lead *= a.lead / b.lead;
  return r;
}

RationalFunction1 operator+(const RationalFunction1& a, const RationalFunction1& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Polynomial1 n =
      a.num.scaled(a.lead) * b.den + b.num.scaled(b.lead) * a.den;
  Polynomial1 d = a.den * b.den;
  return RationalFunction1(n, d);
}

RationalFunction1 operator-(const RationalFunction1& a, const RationalFunction1& b) {
  return a + (-b);
}

RationalFunction1 operator-(const RationalFunction1& a) {
  RationalFunction1 r = a;
  r.lead = -r.lead;
  return r;
}

RationalFunction1 RationalFunction1::pow(long e) const {
  if (e == 0) return constant(GaussianRational(1));
  if (is_zero()) {
    if (e < 0) throw PreconditionError("zero function raised to a negative power");
    return zero();
  }
  const RationalFunction1 base = e < 0 ? inv() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  RationalFunction1 acc = constant(GaussianRational(1));
  RationalFunction1 sq = base;
  while (k) {
    if (k & 1) acc = acc * sq;
    sq = sq * sq;
    k >>= 1;
  }
  return acc;
}

RationalFunction1 RationalFunction1::inv() const {
  if (is_zero()) throw PreconditionError("inverse of the zero function");
  RationalFunction1 r;
  r.num = den;
  r.den = num;
  r.lead = lead.inv();
  return r;
}

RationalFunction1 RationalFunction1::derivative() const {
  if (is_zero()) return zero();
  Polynomial1 n = num.derivative() * den - num * den.derivative();
  if (n.is_zero()) return zero();
  RationalFunction1 r(n, den * den);
  r.lead *= lead;
  return r;
}

RationalFunction1 compose_mobius(const RationalFunction1& f, const MobiusMap& m) {
  if (f.is_zero()) return RationalFunction1::zero();
  // substitute z = (a z + b)/(c z + d) and clear denominators
  Polynomial1 top({m.b, m.a});
  Polynomial1 bot({m.d, m.c});
  int dn = f.num.degree(), dd = f.den.degree();
  int deg = std::max(dn, dd);
  auto substitute = [&](const Polynomial1& p) {
    Polynomial1 acc;  // sum of c_k * top^k * bot^(deg-k)
    for (int k = 0; k <= p.degree(); ++k) {
      if (p.coeff(k).is_zero()) continue;
      Polynomial1 term = top.pow(k) * bot.pow(deg - k);
      acc = acc + term.scaled(p.coeff(k));
    }
    return acc;
  };
  Polynomial1 n = substitute(f.num);
  Polynomial1 d = substitute(f.den);
  if (n.is_zero()) return RationalFunction1::zero();
  RationalFunction1 r(n, d);
  r.lead *= f.lead;
  return r;
}

std::string RationalFunction1::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  bool lead_trivial = lead.is_one();
  bool num_trivial = num.degree() == 0;
  bool den_trivial = den.degree() == 0;
  if (!lead_trivial || (num_trivial && den_trivial)) {
    bool parens = sgn(lead.im) != 0 || (sgn(lead.re) < 0 && !(num_trivial && den_trivial));
    out = parens ? "(" + lead.to_string() + ")" : lead.to_string();
  }
  if (!num_trivial) {
    std::string ns = "(" + num.to_string(var) + ")";
    out = out.empty() ? ns : out + "*" + ns;
  }
  if (!den_trivial) {
    if (out.empty()) out = "1";
    out += "/(" + den.to_string(var) + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// expression parser

namespace {

struct Parser {
  const std::string& text;
  const std::string& var;
  size_t pos = 0;

  explicit Parser(const std::string& t, const std::string& v) : text(t), var(v) {}

  void skip_ws() {
    while (pos < text.size() && isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg + " at column " + std::to_string(pos + 1) + " in \"" + text + "\"",
                     1, static_cast<int>(pos + 1));
  }

  RationalFunction1 parse() {
    RationalFunction1 r = expr();
    skip_ws();
    if (pos != text.size()) fail("unexpected trailing input");
    return r;
  }

  RationalFunction1 expr() {
    RationalFunction1 acc = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  RationalFunction1 term() {
    RationalFunction1 acc = factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        acc = acc * factor();
      else if (eat('/'))
        acc = acc / factor();
      else
        return acc;
    }
  }

  RationalFunction1 factor() {
    skip_ws();
    bool neg = false;
    while (true) {
      if (eat('-'))
        neg = !neg;
      else if (eat('+'))
        ;
      else
        break;
    }
    RationalFunction1 base = atom();
    skip_ws();
    if (eat('^')) {
      long e = integer();
      base = base.pow(e);
    }
    return neg ? -base : base;
  }

  long integer() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected an integer exponent");
    long v = std::stol(text.substr(start, pos - start));
    return neg ? -v : v;
  }

  RationalFunction1 atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      RationalFunction1 inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos;
      while (pos < text.size() &&
             (isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.'))
        ++pos;
      Rat r = parse_rat(text.substr(start, pos - start));
      return RationalFunction1::constant(GaussianRational(r));
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < text.size() &&
             (isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string name = text.substr(start, pos - start);
      if (name == "i") return RationalFunction1::constant(GaussianRational::i());
      if (name == var) return RationalFunction1::var();
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

RationalFunction1 parse_function(const std::string& text, const std::string& var) {
  Parser p(text, var);
  return p.parse();
}

}  // namespace regpair
