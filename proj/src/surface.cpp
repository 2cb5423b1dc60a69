#include "regpair/surface.hpp"

#include <cmath>

#include "regpair/currents.hpp"
#include "regpair/roots.hpp"

namespace regpair {

namespace {

using Grid = std::vector<std::vector<GaussianRational>>;

void trim(Grid& g) {
  for (auto& row : g)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!g.empty() && g.back().empty()) g.pop_back();
}

bool grid_zero(const Grid& g) {
  for (auto& row : g)
    for (auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

int zdeg(const Grid& g) { return static_cast<int>(g.size()) - 1; }

int wdeg(const Grid& g) {
  int d = -1;
  for (auto& row : g) d = std::max(d, static_cast<int>(row.size()) - 1);
  return d;
}

GaussianRational at(const Grid& g, int i, int j) {
  if (i < 0 || i >= static_cast<int>(g.size())) return GaussianRational(0);
  if (j < 0 || j >= static_cast<int>(g[i].size())) return GaussianRational(0);
  return g[i][j];
}

Grid grid_mul(const Grid& a, const Grid& b) {
  if (grid_zero(a) || grid_zero(b)) return {};
  Grid out(zdeg(a) + zdeg(b) + 1,
           std::vector<GaussianRational>(wdeg(a) + wdeg(b) + 1, GaussianRational(0)));
  for (int i = 0; i <= zdeg(a); ++i)
    for (int j = 0; j <= wdeg(a); ++j) {
      GaussianRational c = at(a, i, j);
      if (c.is_zero()) continue;
      for (int k = 0; k <= zdeg(b); ++k)
        for (int l = 0; l <= wdeg(b); ++l) {
          GaussianRational d = at(b, k, l);
          if (d.is_zero()) continue;
          out[i + k][j + l] += c * d;
        }
    }
  trim(out);
  return out;
}

Grid grid_pow(const Grid& a, long e) {
  Grid acc{{GaussianRational(1)}};
  for (long k = 0; k < e; ++k) acc = grid_mul(acc, a);
  return acc;
}

bool grid_equal(Grid a, Grid b) {
  trim(a);
  trim(b);
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  }
  return true;
}

// top w-degree coefficients as a single-column grid (a polynomial in z)
Grid top_w_row(const Grid& g) {
  int J = wdeg(g);
  Grid out;
  for (int i = 0; i <= zdeg(g); ++i) out.push_back({at(g, i, J)});
  trim(out);
  return out;
}

Grid top_z_row(const Grid& g) {
  int I = zdeg(g);
  Grid out;
  if (I >= 0) out.push_back(g[I]);
  trim(out);
  return out;
}

}  // namespace

BivariateRational BivariateRational::from_grids(Grid n, Grid d) {
  trim(n);
  trim(d);
  if (grid_zero(d))
    throw PreconditionError("bivariate function with zero denominator");
  return {std::move(n), std::move(d)};
}

bool BivariateRational::num_zero() const { return grid_zero(num); }

namespace {

bool same_function(const BivariateRational& a, const BivariateRational& b) {
  return grid_equal(grid_mul(a.num, b.den), grid_mul(b.num, a.den));
}

bool grid_constant(const Grid& g) { return zdeg(g) <= 0 && wdeg(g) <= 0; }

BivariateRational biv_symbol_power(const BivariateRational& g1, long e1,
                                   const BivariateRational& g2, long e2) {
  // g1^{e1} * g2^{e2} as one bivariate function
  Grid num{{GaussianRational(1)}}, den{{GaussianRational(1)}};
  auto mul_in = [&](const BivariateRational& g, long e) {
    if (e > 0) {
      num = grid_mul(num, grid_pow(g.num, e));
      den = grid_mul(den, grid_pow(g.den, e));
    } else if (e < 0) {
      num = grid_mul(num, grid_pow(g.den, -e));
      den = grid_mul(den, grid_pow(g.num, -e));
    }
  };
  mul_in(g1, e1);
  mul_in(g2, e2);
  return BivariateRational::from_grids(num, den);
}

}  // namespace

Pullback pull_back(const BivariateRational& f, const ParametrizedCurveInSurface& curve) {
  Grid A = f.num, B = f.den;
  trim(A);
  trim(B);
  if (grid_zero(A)) return {Pullback::Kind::IdenticallyZero, {}};

  // Infinite coordinates: keep the top-degree layer; the degree difference
  // decides an identically zero/infinite restriction outright.
  if (curve.w_infinite) {
    int ja = wdeg(A), jb = wdeg(B);
    if (ja > jb) return {Pullback::Kind::IdenticallyInfinite, {}};
    if (ja < jb) return {Pullback::Kind::IdenticallyZero, {}};
    A = top_w_row(A);
    B = top_w_row(B);
    if (grid_zero(A)) return {Pullback::Kind::IdenticallyZero, {}};
  }
  if (curve.z_infinite) {
    int ia = zdeg(A), ib = zdeg(B);
    if (ia > ib) return {Pullback::Kind::IdenticallyInfinite, {}};
    if (ia < ib) return {Pullback::Kind::IdenticallyZero, {}};
    A = top_z_row(A);
    B = top_z_row(B);
    if (grid_zero(A)) return {Pullback::Kind::IdenticallyZero, {}};
  }

  // Substitute the finite coordinates, clearing both against common degrees.
  Polynomial1 zn, zd, wn, wd;
  if (curve.z_infinite) {
    zn = Polynomial1::constant(GaussianRational(1));
    zd = zn;
  } else {
    zn = curve.z_of_t.num.scaled(curve.z_of_t.lead);
    zd = curve.z_of_t.den;
  }
  if (curve.w_infinite) {
    wn = Polynomial1::constant(GaussianRational(1));
    wd = wn;
  } else {
    wn = curve.w_of_t.num.scaled(curve.w_of_t.lead);
    wd = curve.w_of_t.den;
  }
  int Dz = std::max(zdeg(A), zdeg(B));
  int Dw = std::max(wdeg(A), wdeg(B));
  auto substitute = [&](const Grid& g) {
    Polynomial1 acc;
    for (int i = 0; i <= zdeg(g); ++i) {
      for (int j = 0; j <= wdeg(g); ++j) {
        GaussianRational c = at(g, i, j);
        if (c.is_zero()) continue;
        Polynomial1 term = zn.pow(i) * zd.pow(Dz - i) * wn.pow(j) * wd.pow(Dw - j);
        acc = acc + term.scaled(c);
      }
    }
    return acc;
  };
  Polynomial1 N = substitute(A);
  Polynomial1 D = substitute(B);
  if (N.is_zero() && D.is_zero())
    throw PreconditionError(
        "pullback is 0/0 along the curve; the symbol must be regularized before "
        "restriction (both vanishing orders nonzero on a finite curve)");
  if (N.is_zero()) return {Pullback::Kind::IdenticallyZero, {}};
  if (D.is_zero()) return {Pullback::Kind::IdenticallyInfinite, {}};
  return {Pullback::Kind::Function, RationalFunction1(N, D)};
}

namespace {

// Double-precision evaluator compiled once per term; the exact coefficients
// are converted a single time instead of at every quadrature node.
struct FastRational {
  std::vector<Cx> num, den, dnum, dden;
  Cx lead;

  explicit FastRational(const RationalFunction1& f) : lead(f.lead.to_complex()) {
    auto convert = [](const Polynomial1& p) {
      std::vector<Cx> out;
      out.reserve(p.coeffs.size());
      for (const auto& c : p.coeffs) out.push_back(c.to_complex());
      return out;
    };
    auto derive = [](const std::vector<Cx>& c) {
      std::vector<Cx> out;
      for (size_t k = 1; k < c.size(); ++k) out.push_back(c[k] * static_cast<double>(k));
      return out;
    };
    num = convert(f.num);
    den = convert(f.den);
    dnum = derive(num);
    dden = derive(den);
  }

  static Cx horner(const std::vector<Cx>& c, const Cx& t) {
    Cx acc(0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  // log|f(t)| and f'/f(t) in one pass; false at a zero/pole or overflow.
  bool log_and_dlog(const Cx& t, double& log_abs, Cx& dlog) const {
    Cx n = horner(num, t);
    Cx d = horner(den, t);
    if (n == Cx(0.0) || d == Cx(0.0)) return false;
    Cx v = lead * n / d;
    log_abs = std::log(std::abs(v));
    dlog = horner(dnum, t) / n - horner(dden, t) / d;
    return std::isfinite(log_abs) && std::isfinite(dlog.real()) && std::isfinite(dlog.imag());
  }
};

// Declared singular set of a curve term: zeros and poles of the pullbacks.
struct SingularSet {
  std::vector<Cx> finite;
  bool at_infinity = false;
  bool numeric_fallback = false;

  void add_roots(const Polynomial1& p) {
    if (p.degree() < 1) return;
    try {
      for (auto& [r, m] : factor_linear(p).roots) finite.push_back(r.to_complex());
    } catch (const ExactnessError&) {
      numeric_fallback = true;
      for (const Cx& r : numeric_roots(p)) finite.push_back(r);
    }
  }
  void add_function(const RationalFunction1& f) {
    add_roots(f.num);
    add_roots(f.den);
    if (f.order_at(P1Point::infinity()) != 0) at_infinity = true;
  }
};

}  // namespace

Pair1Result pair1(const BivariateRational& f1, const BivariateRational& f2,
                  const BivariateRational& g1, const BivariateRational& g2,
                  const std::vector<TameComponent>& xi2_components,
                  const QuadratureOptions& opts) {
  Pair1Result out;
  if (f1.num_zero() || f2.num_zero() || g1.num_zero() || g2.num_zero())
    throw PreconditionError("pair1: symbol entries must be nonzero functions");

  // f1 = f2 kills the integrand pointwise by alternation.
  if (same_function(f1, f2)) {
    for (const TameComponent& comp : xi2_components)
      out.terms.push_back({comp.curve.label, true, "f1 = f2: integrand vanishes", {}, false});
    return out;
  }

  for (const TameComponent& comp : xi2_components) {
    Pair1Term term;
    term.label = comp.curve.label;
    if (comp.nu1 == 0 && comp.nu2 == 0) {
      term.short_circuited = true;
      term.note = "both vanishing orders are zero: trivial symbol";
      out.terms.push_back(std::move(term));
      continue;
    }
    BivariateRational h_biv = biv_symbol_power(g1, comp.nu2, g2, -comp.nu1);
    Pullback H = pull_back(h_biv, comp.curve);
    if (H.degenerate() || H.fn.is_constant()) {
      term.short_circuited = true;
      term.note = "constant symbol pullback: darg H = 0";
      out.terms.push_back(std::move(term));
      continue;
    }
    Pullback F1 = pull_back(f1, comp.curve);
    Pullback F2 = pull_back(f2, comp.curve);
    if (F1.constant() || F2.constant()) {
      term.short_circuited = true;
      term.note = "degenerate/constant pullback of f1 or f2";
      out.terms.push_back(std::move(term));
      continue;
    }
    if (F1.fn == F2.fn) {
      term.short_circuited = true;
      term.note = "f1 and f2 restrict to the same function: alternation vanishes";
      out.terms.push_back(std::move(term));
      continue;
    }

    SingularSet sing;
    if (comp.singular_supplied) {
      sing.finite = comp.singular_finite;
      sing.at_infinity = comp.singular_at_infinity;
    } else {
      sing.add_function(F1.fn);
      sing.add_function(F2.fn);
      sing.add_function(H.fn);
    }
    term.numeric_singularities = sing.numeric_fallback;
    out.numeric_singularities |= sing.numeric_fallback;

    FastRational f1t(F1.fn), f2t(F2.fn), ht(H.fn);
    Integrand2D form;
    form.singular_finite = sing.finite;
    form.singular_at_infinity = sing.at_infinity;
    form.sample = [f1t, f2t, ht](const Cx& t) {
      double log1, log2, logh;
      Cx l1, l2, lh;
      if (!f1t.log_and_dlog(t, log1, l1) || !f2t.log_and_dlog(t, log2, l2) ||
          !ht.log_and_dlog(t, logh, lh))
        throw PreconditionError("sample at a zero/pole of a pullback");
      // [log|F1| darg F2 - log|F2| darg F1] ^ darg H
      return log1 * std::imag(l2 * std::conj(lh)) - log2 * std::imag(l1 * std::conj(lh));
    };
    term.integral = integrate_2form(form, Domain::FullCurve, opts);
    out.value += term.integral.value;
    out.error_estimate += term.integral.error_estimate;
    out.terms.push_back(std::move(term));
  }
  const double scale = 1.0 / (4.0 * M_PI * M_PI);
  out.value *= scale;
  out.error_estimate *= scale;
  return out;
}

}  // namespace regpair
