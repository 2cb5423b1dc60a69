#include "regpair/roots.hpp"

#include <algorithm>
#include <cmath>

namespace regpair {

namespace {

using Cx = std::complex<double>;

// Durand-Kerner on the monic double image of p. p must be square-free for the
// results to be trustworthy; callers arrange that.
std::vector<Cx> durand_kerner(const Polynomial1& p) {
  int n = p.degree();
  std::vector<Cx> c(n + 1);
  Cx lead = p.lead().to_complex();
  for (int k = 0; k <= n; ++k) c[k] = p.coeff(k).to_complex() / lead;
  auto eval = [&](Cx z) {
    Cx acc(0.0);
    for (int k = n; k >= 0; --k) acc = acc * z + c[k];
    return acc;
  };
  // Cauchy bound for the initial circle.
  double radius = 0.0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius = 1.0 + radius;
  std::vector<Cx> roots(n);
  const Cx seed(0.4, 0.9);
  Cx w(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    w *= seed;
    roots[k] = radius * w / std::abs(w);
  }
  for (int iter = 0; iter < 600; ++iter) {
    double shift = 0.0;
    for (int k = 0; k < n; ++k) {
      Cx denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      if (denom == Cx(0.0)) denom = Cx(1e-300, 0.0);
      Cx delta = eval(roots[k]) / denom;
      roots[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14 * (1.0 + radius)) break;
  }
  // Newton polish
  std::vector<Cx> dc(n);
  for (int k = 1; k <= n; ++k) dc[k - 1] = c[k] * static_cast<double>(k);
  auto deval = [&](Cx z) {
    Cx acc(0.0);
    for (int k = n - 1; k >= 0; --k) acc = acc * z + dc[k];
    return acc;
  };
  for (int k = 0; k < n; ++k) {
    for (int it = 0; it < 6; ++it) {
      Cx d = deval(roots[k]);
      if (std::abs(d) < 1e-250) break;
      roots[k] -= eval(roots[k]) / d;
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

// Best rational approximations of x by continued fractions, small ones first.
std::vector<Rat> rational_candidates(double x, long max_den) {
  std::vector<Rat> out;
  double rounded = std::round(x);
  if (std::abs(x - rounded) < 1e-7 && std::abs(rounded) < 9e15) {
    out.emplace_back(static_cast<long>(rounded));
  }
  // continued fraction convergents
  long p0 = 1, q0 = 0;  // h_{-1}, k_{-1}
  long p1 = 0, q1 = 1;  // adjusted below
  double v = x;
  long a = static_cast<long>(std::floor(v));
  p1 = a;
  q1 = 1;
  out.emplace_back(p1, q1);
  out.back().canonicalize();
  for (int it = 0; it < 40; ++it) {
    double frac = v - std::floor(v);
    if (frac < 1e-13) break;
    v = 1.0 / frac;
    if (!std::isfinite(v) || std::abs(v) > 9e15) break;
    a = static_cast<long>(std::floor(v));
    long p2, q2;
    if (__builtin_mul_overflow(a, p1, &p2) || __builtin_add_overflow(p2, p0, &p2)) break;
    if (__builtin_mul_overflow(a, q1, &q2) || __builtin_add_overflow(q2, q0, &q2)) break;
    if (q2 > max_den || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Rat r(p1, q1);
    r.canonicalize();
    out.push_back(r);
    if (std::abs(x - rat_to_double(r)) < 1e-13 * std::max(1.0, std::abs(x))) break;
  }
  // closest first
  std::stable_sort(out.begin(), out.end(), [&](const Rat& r, const Rat& s) {
    return std::abs(x - rat_to_double(r)) < std::abs(x - rat_to_double(s));
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Attempts to identify one exact Q(i) root of the square-free polynomial w
// near the numeric estimate z. Verification is exact.
std::optional<GaussianRational> recognize_root(const Polynomial1& w, Cx z) {
  auto res = rational_candidates(z.real(), 1000000L);
  auto ims = rational_candidates(z.imag(), 1000000L);
  size_t cap_r = std::min<size_t>(res.size(), 6);
  size_t cap_i = std::min<size_t>(ims.size(), 6);
  for (size_t a = 0; a < cap_r; ++a) {
    for (size_t b = 0; b < cap_i; ++b) {
      GaussianRational cand(res[a], ims[b]);
      if (w.eval(cand).is_zero()) return cand;
    }
  }
  return std::nullopt;
}

// Exact roots of the square-free polynomial w (all must lie in Q(i)).
std::vector<GaussianRational> squarefree_roots(Polynomial1 w) {
  std::vector<GaussianRational> roots;
  while (w.degree() >= 1) {
    if (w.degree() == 1) {
      roots.push_back(-w.coeff(0) / w.coeff(1));
      break;
    }
    if (w.degree() == 2) {
      GaussianRational a = w.coeff(2), b = w.coeff(1), c = w.coeff(0);
      GaussianRational disc = b * b - GaussianRational(4) * a * c;
      auto s = gq_sqrt(disc);
      if (!s)
        throw ExactnessError(
            "irreducible quadratic over Q(i): " + w.to_string() +
            " (discriminant has no square root in Q(i))");
      GaussianRational two_a = GaussianRational(2) * a;
      roots.push_back((-b + *s) / two_a);
      roots.push_back((-b - *s) / two_a);
      break;
    }
    bool found = false;
    for (Cx z : durand_kerner(w)) {
      if (auto r = recognize_root(w, z)) {
        roots.push_back(*r);
        w = w.deflate(*r);
        found = true;
        break;
      }
    }
    if (!found)
      throw ExactnessError("no Q(i)-rational root recognized in: " + w.to_string());
  }
  return roots;
}

}  // namespace

LinearFactorization factor_linear(const Polynomial1& p) {
  if (p.is_zero()) throw PreconditionError("factoring the zero polynomial");
  LinearFactorization out;
  out.lead = p.lead();
  if (p.degree() == 0) return out;
  Polynomial1 g = poly_gcd(p, p.derivative());
  Polynomial1 w = poly_divmod(p, g).first.monic();  // square-free part
  for (const GaussianRational& r : squarefree_roots(w)) {
    out.roots.emplace_back(r, p.order_at(r));
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  int total = 0;
  for (auto& [r, m] : out.roots) total += m;
  if (total != p.degree())
    throw ExactnessError("polynomial does not split into linear factors over Q(i): " +
                         p.to_string());
  return out;
}

std::vector<std::complex<double>> numeric_roots(const Polynomial1& p) {
  if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
  if (p.degree() == 0) return {};
  Polynomial1 g = poly_gcd(p, p.derivative());
  Polynomial1 w = poly_divmod(p, g).first.monic();
  std::vector<Cx> simple = durand_kerner(w);
  std::vector<Cx> out;
  for (Cx z : simple) {
    int mult = 1;
    if (auto r = recognize_root(w, z)) {
      // exact multiplicity when the root is recognized
      mult = p.order_at(*r);
      z = r->to_complex();
    } else {
      // otherwise estimate it from successive derivatives vanishing
      double scale = 0.0;
      for (int k = 0; k <= p.degree(); ++k)
        scale = std::max(scale, std::abs(p.coeff(k).to_complex()));
      Polynomial1 cur = p.derivative();
      while (mult < p.degree() && std::abs(cur.eval(z)) < 1e-8 * (scale + 1.0)) {
        ++mult;
        cur = cur.derivative();
      }
    }
    for (int k = 0; k < mult; ++k) out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace regpair
