#include "regpair/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace regpair {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// --- Gauss-Legendre rules on [-1, 1] -------------------------------------

const double kG7x[7] = {-0.9491079123427585, -0.7415311855993945, -0.4058451513773972,
                        0.0,
                        0.4058451513773972,  0.7415311855993945,  0.9491079123427585};
const double kG7w[7] = {0.1294849661688697, 0.2797053914892766, 0.3818300505051189,
                        0.4179591836734694,
                        0.3818300505051189, 0.2797053914892766, 0.1294849661688697};
const double kG5x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                        0.5384693101056831, 0.9061798459386640};
const double kG5w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                        0.4786286704993665, 0.2369268850561891};

// --- circular interval sets ------------------------------------------------

// Disjoint sorted non-wrapping intervals within [0, 2pi].
struct AngleSet {
  std::vector<std::pair<double, double>> iv;

  static AngleSet full() {
    AngleSet s;
    s.iv.push_back({0.0, kTwoPi});
    return s;
  }
  bool empty() const { return iv.empty(); }
  double measure() const {
    double m = 0;
    for (auto& [a, b] : iv) m += b - a;
    return m;
  }

  void intersect_window(double lo, double hi) {
    std::vector<std::pair<double, double>> out;
    for (auto& [a, b] : iv) {
      double na = std::max(a, lo), nb = std::min(b, hi);
      if (nb - na > 1e-15) out.push_back({na, nb});
    }
    iv.swap(out);
  }

  // Intersect with the arc {theta : cos(theta - center) >= cos(half)} of
  // half-width `half` around `center`.
  void intersect_arc(double center, double half) {
    if (half >= M_PI - 1e-15) return;
    if (half <= 1e-15) {
      iv.clear();
      return;
    }
    double a = std::fmod(center - half, kTwoPi);
    if (a < 0) a += kTwoPi;
    double b = a + 2 * half;
    AngleSet left = *this, right;
    if (b <= kTwoPi) {
      left.intersect_window(a, b);
      iv = left.iv;
      return;
    }
    left.intersect_window(a, kTwoPi);
    right = *this;
    right.intersect_window(0.0, b - kTwoPi);
    // right pieces come first in [0, 2pi) order
    iv = right.iv;
    iv.insert(iv.end(), left.iv.begin(), left.iv.end());
  }

};

// --- geometry of one chart half ---------------------------------------------

struct Site {
  Cx center;
  bool excised;
};

// Perpendicular bisector between c and s, as point + direction.
struct Line {
  Cx point;
  Cx dir;  // unit
};

struct HalfChart {
  double radius;                          // chart disk |u| <= radius
  std::function<double(const Cx&)> g;     // 2-form coefficient in these coords
  std::vector<Site> sites;
};

// One admissible arc [center - half, center + half] at radius r; full when
// half >= pi, empty when half <= 0.
struct Arc {
  double center;
  double half;
  bool full() const { return half >= M_PI - 1e-15; }
  bool empty() const { return half <= 1e-15; }
  double lo() const { return center - half; }
  double hi() const { return center + half; }
};

struct PatchGeometry {
  Cx center;
  bool excised;
  double chart_radius;
  std::vector<Cx> others;  // neighboring site centers

  // Condition index 0 is the chart-disk clip; 1.. are the bisector clips.
  int condition_count() const { return 1 + static_cast<int>(others.size()); }

  Arc condition_arc(int idx, double r) const {
    if (idx == 0) {
      double cc = std::abs(center);
      if (cc <= 1e-15) return {0.0, r <= chart_radius ? M_PI : 0.0};
      double x = (chart_radius * chart_radius - cc * cc - r * r) / (2 * r * cc);
      // admissible: cos(theta - arg c) <= x, an arc centered opposite to c
      if (x >= 1.0) return {0.0, M_PI};
      if (x <= -1.0) return {0.0, 0.0};
      return {std::arg(center) + M_PI, M_PI - std::acos(x)};
    }
    Cx d = center - others[idx - 1];
    double x = -std::abs(d) / (2 * r);
    // admissible: cos(theta - arg d) >= x
    if (x <= -1.0) return {0.0, M_PI};
    return {std::arg(d), std::acos(std::max(-1.0, std::min(1.0, x)))};
  }

  // Admissible angles at local radius r: inside the chart disk and closer to
  // this site than to any other.
  AngleSet angles(double r) const {
    AngleSet s = AngleSet::full();
    for (int c = 0; c < condition_count(); ++c) {
      Arc a = condition_arc(c, r);
      if (a.full()) continue;
      if (a.empty()) {
        s.iv.clear();
        return s;
      }
      s.intersect_arc(a.center, a.half);
      if (s.empty()) return s;
    }
    return s;
  }

  std::vector<double> critical_radii(double r_lo, double r_hi) const {
    std::vector<double> rs;
    auto push = [&](double r) {
      if (r > r_lo * (1 + 1e-12) && r < r_hi * (1 - 1e-12)) rs.push_back(r);
    };
    double cc = std::abs(center);
    push(chart_radius - cc);
    push(chart_radius + cc);
    std::vector<Line> lines;
    for (const Cx& o : others) {
      Cx mid = (center + o) * 0.5;
      Cx d = o - center;
      Line l{mid, Cx(0, 1) * d / std::abs(d)};
      lines.push_back(l);
      push(std::abs(d) / 2.0);
    }
    // line-line intersections: solve p.point + s p.dir = q.point + t q.dir
    for (size_t a = 0; a < lines.size(); ++a) {
      for (size_t b = a + 1; b < lines.size(); ++b) {
        const Line &p = lines[a], &q = lines[b];
        double a11 = p.dir.real(), a12 = -q.dir.real();
        double a21 = p.dir.imag(), a22 = -q.dir.imag();
        double rhs1 = q.point.real() - p.point.real();
        double rhs2 = q.point.imag() - p.point.imag();
        double D = a11 * a22 - a12 * a21;
        if (std::abs(D) < 1e-14) continue;
        double sparam = (rhs1 * a22 - a12 * rhs2) / D;
        Cx x = p.point + sparam * p.dir;
        push(std::abs(x - center));
      }
    }
    // line-circle intersections with the chart boundary
    for (const Line& l : lines) {
      // |l.point + s l.dir|^2 = radius^2
      double b = 2 * (l.point.real() * l.dir.real() + l.point.imag() * l.dir.imag());
      double c0 = std::norm(l.point) - chart_radius * chart_radius;
      double disc = b * b - 4 * c0;
      if (disc < 0) continue;
      double sq = std::sqrt(disc);
      for (double sgn : {-1.0, 1.0}) {
        double sparam = (-b + sgn * sq) / 2.0;
        Cx x = l.point + sparam * l.dir;
        push(std::abs(x - center));
      }
    }
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end(),
                         [](double a, double b) { return std::abs(a - b) < 1e-12; }),
             rs.end());
    return rs;
  }
};

// --- deterministic adaptive 2D integration ---------------------------------

struct CellTotals {
  double value = 0.0;
  double error = 0.0;
  long cells = 0;
};

struct Budget {
  long max_cells;
  long used = 0;
};

// Adaptive tensor Gauss on [x0,x1] x [y0,y1]; deterministic tree and sums.
CellTotals integrate_rectangle(const std::function<double(double, double)>& f, double x0,
                               double x1, double y0, double y1, double tol, Budget& budget) {
  struct Cell {
    double x0, x1, y0, y1;
    double v7, err;
    bool leaf = true;
    long id;
  };
  auto eval_cell = [&](double a, double b, double c, double d, double& v7, double& err) {
    double hx = 0.5 * (b - a), mx = 0.5 * (a + b);
    double hy = 0.5 * (d - c), my = 0.5 * (c + d);
    double s7 = 0.0;
    for (int i = 0; i < 7; ++i) {
      double x = mx + hx * kG7x[i];
      double row = 0.0;
      for (int j = 0; j < 7; ++j) row += kG7w[j] * f(x, my + hy * kG7x[j]);
      s7 += kG7w[i] * row;
    }
    double s5 = 0.0;
    for (int i = 0; i < 5; ++i) {
      double x = mx + hx * kG5x[i];
      double row = 0.0;
      for (int j = 0; j < 5; ++j) row += kG5w[j] * f(x, my + hy * kG5x[j]);
      s5 += kG5w[i] * row;
    }
    v7 = s7 * hx * hy;
    double v5 = s5 * hx * hy;
    err = std::abs(v7 - v5);
    if (!std::isfinite(v7) || !std::isfinite(err))
      throw Error("non-finite quadrature sample");
  };

  std::vector<Cell> cells;
  auto make_cell = [&](double a, double b, double c, double d) {
    Cell cell{a, b, c, d, 0, 0, true, static_cast<long>(cells.size())};
    eval_cell(a, b, c, d, cell.v7, cell.err);
    cells.push_back(cell);
    ++budget.used;
    if (budget.used > budget.max_cells) throw BudgetError("cell budget exhausted");
    return cells.size() - 1;
  };

  using Entry = std::pair<double, long>;  // (error, id), max-heap, id breaks ties
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);

  double total_err = 0.0;
  size_t root = make_cell(x0, x1, y0, y1);
  total_err = cells[root].err;
  heap.push({cells[root].err, cells[root].id});
  const double x_extent = x1 - x0, y_extent = y1 - y0;

  while (total_err > tol && !heap.empty()) {
    auto [err, id] = heap.top();
    heap.pop();
    if (id >= static_cast<long>(cells.size())) continue;
    Cell cur = cells[id];
    if (!cur.leaf || cur.err != err) continue;  // stale entry
    if (cur.err <= 0) break;
    cells[id].leaf = false;
    total_err -= cur.err;
    bool split_x = (cur.x1 - cur.x0) / x_extent >= (cur.y1 - cur.y0) / y_extent;
    double kids[2][4];
    if (split_x) {
      double mid = 0.5 * (cur.x0 + cur.x1);
      kids[0][0] = cur.x0; kids[0][1] = mid;    kids[0][2] = cur.y0; kids[0][3] = cur.y1;
      kids[1][0] = mid;    kids[1][1] = cur.x1; kids[1][2] = cur.y0; kids[1][3] = cur.y1;
    } else {
      double mid = 0.5 * (cur.y0 + cur.y1);
      kids[0][0] = cur.x0; kids[0][1] = cur.x1; kids[0][2] = cur.y0; kids[0][3] = mid;
      kids[1][0] = cur.x0; kids[1][1] = cur.x1; kids[1][2] = mid;    kids[1][3] = cur.y1;
    }
    for (auto& k : kids) {
      size_t ix = make_cell(k[0], k[1], k[2], k[3]);
      total_err += cells[ix].err;
      heap.push({cells[ix].err, cells[ix].id});
    }
  }

  CellTotals out;
  for (const Cell& c : cells) {
    if (!c.leaf) continue;
    out.value += c.v7;
    out.error += c.err;
    ++out.cells;
  }
  return out;
}

namespace {

double circ_dist(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

}  // namespace

// One far segment or ring of a patch: local polar coordinates, angular extent
// clipped to the patch at every radius.
//
// Between consecutive critical radii the combinatorics of the admissible set
// are constant: every interval endpoint is the lo/hi endpoint of one fixed
// clipping condition across the whole slab. Each interval is therefore
// parametrized by its generating endpoint functions, which vary smoothly in
// the radius, and the mapped integrand on [ra, rb] x [0, 1] is smooth.
CellTotals integrate_patch_band(const HalfChart& half, const PatchGeometry& geom,
                                double r_lo, double r_hi, double tol, Budget& budget) {
  CellTotals total;
  if (r_hi <= r_lo * (1 + 1e-14) || r_hi - r_lo < 1e-300) return total;
  std::vector<double> breaks{r_lo};
  for (double r : geom.critical_radii(r_lo, r_hi)) breaks.push_back(r);
  breaks.push_back(r_hi);

  struct Slab {
    double a, b;
    bool full_circle = false;
    int cond_lo = -1, cond_hi = -1;  // generating conditions of the endpoints
    double frozen_lo = 0, frozen_len = 0;  // fallback window
    double len_mid = 0;                    // window length at the mid radius
  };
  std::vector<Slab> todo;
  for (size_t k = 0; k + 1 < breaks.size(); ++k) {
    double a = breaks[k], b = breaks[k + 1];
    double rm = 0.5 * (a + b);
    AngleSet set = geom.angles(rm);
    if (set.empty()) continue;
    if (set.measure() >= kTwoPi - 1e-12) {
      Slab s{a, b};
      s.full_circle = true;
      todo.push_back(s);
      continue;
    }
    // circular intervals at the mid radius (merge the wrap pair)
    bool wrapped = set.iv.size() > 1 && set.iv.front().first <= 1e-14 &&
                   set.iv.back().second >= kTwoPi - 1e-14;
    std::vector<std::pair<double, double>> intervals;  // (lo, hi) circular
    for (size_t idx = 0; idx < set.iv.size(); ++idx) {
      if (wrapped && idx == set.iv.size() - 1) {
        intervals[0].first = set.iv[idx].first - kTwoPi;  // extend across 0
        continue;
      }
      intervals.push_back(set.iv[idx]);
    }
    for (auto& [lo, hi] : intervals) {
      // An intersection interval opens at some condition arc's lo endpoint
      // and closes at some condition arc's hi endpoint; bind the closest.
      Slab s{a, b};
      s.len_mid = hi - lo;
      double best_lo = 1e-7, best_hi = 1e-7;
      for (int c = 0; c < geom.condition_count(); ++c) {
        Arc arc = geom.condition_arc(c, rm);
        if (arc.full() || arc.empty()) continue;
        double dlo = circ_dist(arc.lo(), lo);
        double dhi = circ_dist(arc.hi(), hi);
        if (dlo < best_lo) {
          best_lo = dlo;
          s.cond_lo = c;
        }
        if (dhi < best_hi) {
          best_hi = dhi;
          s.cond_hi = c;
        }
      }
      if (s.cond_lo < 0 || s.cond_hi < 0) {
        // near-degenerate matching: freeze the mid-radius window (slabs are
        // thin between critical radii, so this stays within tolerance)
        s.cond_lo = s.cond_hi = -2;
        s.frozen_lo = lo;
        s.frozen_len = hi - lo;
      }
      todo.push_back(s);
    }
  }
  if (todo.empty()) return total;
  double tol_each = tol / static_cast<double>(todo.size());

  for (const Slab& s : todo) {
    auto window = [&](double r) -> std::pair<double, double> {  // (lo, len)
      if (s.full_circle) return {0.0, kTwoPi};
      if (s.cond_lo == -2) return {s.frozen_lo, s.frozen_len};
      Arc alo = geom.condition_arc(s.cond_lo, r);
      Arc ahi = geom.condition_arc(s.cond_hi, r);
      double lo = alo.lo();
      double hi = ahi.hi();
      double len = std::fmod(hi - lo, kTwoPi);
      if (len < 0) len += kTwoPi;
      if (len <= 0.0) len = (hi > lo) ? kTwoPi : 0.0;
      // a near-zero window flipping to near-full can only happen within
      // floating fuzz of a collision radius; its contribution is negligible
      if (len > s.len_mid + M_PI && len > 5.5) return {lo, 0.0};
      return {lo, len};
    };
    // Arc widths scale like sqrt(r - r*) at the slab edges where a clip
    // appears or dies (arccos near +-1); the smoothstep substitution has
    // vanishing derivative at both ends and restores smooth integrands.
    const double width = s.b - s.a;
    auto f = [&](double x, double sigma) {
      double step = x * x * (3.0 - 2.0 * x);
      double r = s.a + width * step;
      double jac = width * 6.0 * x * (1.0 - x);
      auto [lo, len] = window(r);
      if (len <= 0) return 0.0;
      double theta = lo + sigma * len;
      Cx q = geom.center + std::polar(r, theta);
      return half.g(q) * r * len * jac;
    };
    CellTotals part = integrate_rectangle(f, 0.0, 1.0, 0.0, 1.0, tol_each, budget);
    total.value += part.value;
    total.error += part.error;
    total.cells += part.cells;
  }
  return total;
}

// --- extrapolation ladder ----------------------------------------------------

double basis_fn(int k, double rho) {
  // k = 1: rho log rho, 2: rho, 3: rho^2 log rho, 4: rho^2, ...
  int power = (k + 1) / 2;
  bool with_log = (k % 2) == 1;
  double v = std::pow(rho, power);
  return with_log ? v * std::log(rho) : v;
}

// Weights w with extrapolant = sum w_k I_k, eliminating basis terms 1..m.
std::vector<long double> extrapolation_weights(const std::vector<double>& rhos, int m) {
  int n = m + 1;
  std::vector<std::vector<long double>> a(n, std::vector<long double>(2 * n, 0.0L));
  for (int r = 0; r < n; ++r) {
    a[r][0] = 1.0L;
    for (int c = 1; c < n; ++c) a[r][c] = basis_fn(c, rhos[r]);
    a[r][n + r] = 1.0L;
  }
  // Gauss-Jordan
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::fabs(static_cast<double>(a[r][col])) >
          std::fabs(static_cast<double>(a[piv][col])))
        piv = r;
    std::swap(a[piv], a[col]);
    long double p = a[col][col];
    if (p == 0.0L) throw Error("singular extrapolation system");
    for (int c = 0; c < 2 * n; ++c) a[col][c] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      long double factor = a[r][col];
      if (factor == 0.0L) continue;
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  // row 0 of the inverse gives the weights on I_0..I_m
  std::vector<long double> w(n);
  for (int k = 0; k < n; ++k) w[k] = a[0][n + k];
  return w;
}

}  // namespace

QuadratureResult integrate_2form(const Integrand2D& form, Domain domain,
                                 const QuadratureOptions& opts) {
  if (opts.tol <= 0) throw PreconditionError("quadrature tolerance must be positive");

  // Deduplicate singular points.
  std::vector<Cx> sing;
  for (const Cx& p : form.singular_finite) {
    bool dup = false;
    for (const Cx& q : sing)
      if (std::abs(p - q) < 1e-12) dup = true;
    if (!dup) sing.push_back(p);
  }
  std::sort(sing.begin(), sing.end(), [](const Cx& a, const Cx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  // Chart layout.
  std::vector<HalfChart> halves;
  double seam = 1.0;
  if (domain == Domain::UnitDisk) {
    HalfChart h;
    h.radius = 1.0;
    h.g = form.sample;
    for (const Cx& p : sing) {
      if (std::abs(p) >= 1.0 - 1e-9) {
        if (std::abs(p) <= 1.0 + 1e-9)
          throw PreconditionError("singular point on the chart boundary");
        continue;  // outside the disk: irrelevant
      }
      h.sites.push_back({p, true});
    }
    halves.push_back(std::move(h));
  } else {
    // place the seam in the widest log-gap of the singular moduli
    std::vector<double> moduli;
    for (const Cx& p : sing) {
      double m = std::abs(p);
      if (m > 1e-13) moduli.push_back(m);
    }
    std::sort(moduli.begin(), moduli.end());
    moduli.erase(std::unique(moduli.begin(), moduli.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12 * (a + b); }),
                 moduli.end());
    if (moduli.empty()) {
      seam = 1.0;
    } else {
      std::vector<double> candidates;
      candidates.push_back(moduli.front() / 2.0);
      for (size_t k = 0; k + 1 < moduli.size(); ++k)
        candidates.push_back(std::sqrt(moduli[k] * moduli[k + 1]));
      candidates.push_back(2.0 * moduli.back());
      double best_margin = -1.0;
      for (double cand : candidates) {
        double margin = 1e300;
        for (double m : moduli) margin = std::min(margin, std::max(m / cand, cand / m));
        if (margin > best_margin + 1e-12) {
          best_margin = margin;
          seam = cand;
        }
      }
    }
    HalfChart t_half;
    t_half.radius = seam;
    t_half.g = form.sample;
    HalfChart s_half;
    s_half.radius = 1.0 / seam;
    auto outer_sample = form.sample;
    s_half.g = [outer_sample](const Cx& v) {
      Cx t = 1.0 / v;
      double jac = std::norm(v) * std::norm(v);  // |v|^4
      return outer_sample(t) / jac;
    };
    for (const Cx& p : sing) {
      if (std::abs(p) <= seam)
        t_half.sites.push_back({p, true});
      else
        s_half.sites.push_back({1.0 / p, true});
    }
    if (form.singular_at_infinity) s_half.sites.push_back({Cx(0.0, 0.0), true});
    halves.push_back(std::move(t_half));
    halves.push_back(std::move(s_half));
  }

  // Pseudo-sites at chart centers keep every patch polar-friendly.
  for (HalfChart& h : halves) {
    bool center_taken = false;
    for (const Site& s : h.sites)
      if (std::abs(s.center) < 1e-12) center_taken = true;
    if (!center_taken) h.sites.push_back({Cx(0.0, 0.0), false});
  }

  // Global excision base radius.
  double rho0 = 1e300;
  bool any_excised = false;
  for (const HalfChart& h : halves) {
    for (size_t a = 0; a < h.sites.size(); ++a) {
      for (size_t b = a + 1; b < h.sites.size(); ++b) {
        double d = std::abs(h.sites[a].center - h.sites[b].center);
        rho0 = std::min(rho0, 0.25 * d);
      }
    }
    for (const Site& s : h.sites) {
      if (!s.excised) continue;
      any_excised = true;
      double to_seam = h.radius - std::abs(s.center);
      if (to_seam < 1e-9 * h.radius)
        throw PreconditionError("singular point on the chart seam");
      rho0 = std::min(rho0, 0.5 * to_seam);
    }
    rho0 = std::min(rho0, 0.25 * h.radius);
  }

  QuadratureResult best;
  Budget budget{opts.max_cells};

  auto run = [&]() -> QuadratureResult {
    // Far region: every patch from its excision radius (or 0) outward.
    int n_far = 0;
    for (const HalfChart& h : halves) n_far += static_cast<int>(h.sites.size());
    double tol_far = 0.3 * opts.tol / std::max(4, n_far);

    double far_value = 0.0, far_err = 0.0;
    long cells = 0;
    for (const HalfChart& h : halves) {
      for (size_t j = 0; j < h.sites.size(); ++j) {
        PatchGeometry geom;
        geom.center = h.sites[j].center;
        geom.excised = h.sites[j].excised;
        geom.chart_radius = h.radius;
        for (size_t k = 0; k < h.sites.size(); ++k)
          if (k != j) geom.others.push_back(h.sites[k].center);
        double r_lo = h.sites[j].excised ? rho0 : 0.0;
        double r_hi = h.radius + std::abs(geom.center);
        CellTotals part = integrate_patch_band(h, geom, r_lo, r_hi, tol_far, budget);
        far_value += part.value;
        far_err += part.error;
        cells += part.cells;
      }
    }

    if (!any_excised) {
      best = {far_value, far_err, cells, 0};
      return best;
    }

    // Excision ladder.
    std::vector<double> I{far_value};
    std::vector<double> inner_err{far_err};
    std::vector<double> rhos{rho0};
    double prev_extrap = far_value;
    best = {far_value, std::abs(far_value) + 1.0, cells, 1};

    int n_rings_per_level = 0;
    for (const HalfChart& h : halves)
      for (const Site& s : h.sites)
        if (s.excised) ++n_rings_per_level;
    double tol_ring = 0.3 * opts.tol / std::max(4, n_rings_per_level * opts.max_levels);

    double prev_delta = std::abs(far_value) + 1.0;
    for (int level = 1; level < opts.max_levels; ++level) {
      double rho_prev = rho0 * std::pow(0.5, level - 1);
      double rho_cur = rho_prev * 0.5;
      double ring_sum = 0.0, ring_err = 0.0;
      for (const HalfChart& h : halves) {
        for (size_t j = 0; j < h.sites.size(); ++j) {
          if (!h.sites[j].excised) continue;
          PatchGeometry geom;
          geom.center = h.sites[j].center;
          geom.excised = true;
          geom.chart_radius = h.radius;
          for (size_t k = 0; k < h.sites.size(); ++k)
            if (k != j) geom.others.push_back(h.sites[k].center);
          CellTotals part = integrate_patch_band(h, geom, rho_cur, rho_prev, tol_ring, budget);
          ring_sum += part.value;
          ring_err += part.error;
          cells += part.cells;
        }
      }
      I.push_back(I.back() + ring_sum);
      inner_err.push_back(inner_err.back() + ring_err);
      rhos.push_back(rho_cur);

      int m = level;  // extrapolant order uses I_0..I_m
      std::vector<long double> w = extrapolation_weights(rhos, m);
      long double acc = 0.0L, amp_err = 0.0L;
      for (int k = 0; k <= m; ++k) {
        acc += w[k] * static_cast<long double>(I[k]);
        amp_err += std::fabs(static_cast<double>(w[k])) * inner_err[k];
      }
      double extrap = static_cast<double>(acc);
      double delta = std::abs(extrap - prev_extrap);
      best = {extrap, delta + prev_delta + static_cast<double>(amp_err), cells, level + 1};
      // Two consecutive agreements guard against order-m plateaus that happen
      // before the right basis term has entered the fit.
      if (level >= opts.base_levels - 1 && delta < opts.tol && prev_delta < opts.tol)
        return best;
      prev_extrap = extrap;
      prev_delta = delta;
    }
    throw NonConvergenceError("excision ladder did not converge", best);
  };

  try {
    return run();
  } catch (const BudgetError&) {
    best.cells_used = budget.used;
    throw NonConvergenceError("quadrature cell budget exhausted", best);
  }
}

}  // namespace regpair
