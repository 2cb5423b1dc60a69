// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Usage: acceptance [scenarios_dir]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "regpair/currents.hpp"
#include "regpair/ledger.hpp"
#include "regpair/quadrature.hpp"
#include "regpair/scenario.hpp"
#include "regpair/surface.hpp"
#include "support/gen.hpp"

using namespace regpair;

namespace {

int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int number, const std::string& what, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", number, what.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

char buf[256];

// 1. Weil reciprocity: 100 seeded random pairs, exact product 1, < 10 s.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(1001);
  int ok = 0;
  for (int it = 0; it < 100; ++it) {
    RationalFunction1 f = gen::random_function(rng, 5);
    RationalFunction1 g = gen::random_function(rng, 5);
    if (weil_product(f, g).is_one()) ++ok;
  }
  double dt = seconds_since(t0);
  std::snprintf(buf, sizeof buf, "%d/100 products exactly 1, %.2fs", ok, dt);
  report(1, "Weil reciprocity on random pairs", ok == 100 && dt < 10.0, buf);
}

// 2. m=0 reciprocity: 100 seeded random admissible pairs, exact equality, < 10 s.
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(1002);
  int ok = 0;
  for (int it = 0; it < 100; ++it) {
    auto [f, g] = gen::disjoint_pair(rng, 5);
    if (reciprocity_check0(f, g).equal) ++ok;
  }
  double dt = seconds_since(t0);
  std::snprintf(buf, sizeof buf, "%d/100 exact equalities, %.2fs", ok, dt);
  report(2, "m=0 reciprocity, zero tolerance", ok == 100 && dt < 10.0, buf);
}

// 3. Projection formula for pi = z^k, k in {2,3,4}, 20 admissible pairs each.
void criterion3() {
  Rng rng(1003);
  int ok = 0, total = 0;
  for (long k : {2L, 3L, 4L}) {
    RationalFunction1 pk = parse_function("z").pow(k);
    int done = 0;
    while (done < 20) {
      Divisor eps;
      if (k == 3) {
        // fibers of z^3 are Q(i)-rational only over 0 and infinity
        long n = rng.range(1, 5);
        eps.add(P1Point(0L), n);
        eps.add(P1Point::infinity(), -n);
      } else {
        for (int j = 0; j < 2; ++j) {
          GaussianRational a = gen::small_gq(rng);
          if (a.is_zero()) a = GaussianRational(Rat(2), Rat(1));
          long m = rng.range(1, 2);
          eps.add(P1Point(a.pow(k)), m);
          eps.add(P1Point::infinity(), -m);
        }
      }
      Divisor pulled = pullback_divisor(pk, eps);
      std::vector<P1Point> forbidden;
      for (auto& [p, n] : pulled.mult) forbidden.push_back(p);
      for (auto& [p, n] : eps.mult) forbidden.push_back(p);
      Divisor eta = gen::random_degree0_divisor(rng, 2, forbidden);
      if (!pushforward_divisor(pk, eta).disjoint_from(eps)) continue;
      ++done;
      ++total;
      if (projection_check0(pk, eta, eps).equal) ++ok;
    }
  }
  std::snprintf(buf, sizeof buf, "%d/%d exact equalities", ok, total);
  report(3, "projection formula for z^2, z^3, z^4", ok == total && total == 60, buf);
}

// 4. Nondegeneracy witness for 50 random nonzero eta, budget 200.
void criterion4() {
  Rng rng(1004);
  int ok = 0;
  for (int it = 0; it < 50; ++it) {
    Divisor eta = gen::random_degree0_divisor(rng, 4, {}, true);  // support <= 8
    try {
      Witness w = nondegeneracy_witness(eta, 200);
      if (!w.value.is_zero() && principal_divisor(w.g).disjoint_from(eta)) ++ok;
    } catch (const Error&) {
    }
  }
  std::snprintf(buf, sizeof buf, "%d/50 witnesses found within budget", ok);
  report(4, "nondegeneracy witness search", ok == 50, buf);
}

// 5. log|h(gamma)| identity on 25 random nodal configurations + principal classes.
void criterion5() {
  Rng rng(1005);
  int ok = 0, total = 0, principal_ok = 0, principal_total = 0;
  while (total < 25) {
    P1Point a1(gen::small_gq(rng, 3)), a2(gen::small_gq(rng, 3));
    P1Point b1(gen::small_gq(rng, 3)), b2(gen::small_gq(rng, 3));
    if (a1 == a2 || b1 == b2) continue;
    CurveConfiguration c;
    c.components = {"M", "N"};
    c.nodes.push_back({"M", a1, "N", b1});
    c.nodes.push_back({"M", a2, "N", b2});
    Pic00Element gamma;
    gamma["M"] = gen::random_degree0_divisor(rng, 2, {a1, a2});
    gamma["N"] = gen::random_degree0_divisor(rng, 2, {b1, b2});
    ++total;
    if (hmap_log_identity(c, gamma).equal) ++ok;
  }
  while (principal_total < 10) {
    P1Point a1(gen::small_gq(rng, 3)), a2(gen::small_gq(rng, 3));
    if (a1 == a2) continue;
    RationalFunction1 phi = gen::random_function(rng, 3);
    if (phi.order_at(a1) != 0 || phi.order_at(a2) != 0) continue;
    GaussianRational v1 = phi.eval(a1).value, v2 = phi.eval(a2).value;
    if (v1 == v2) continue;
    GaussianRational slope = (v2 - v1) / (a2.finite() - a1.finite());
    RationalFunction1 psi(Polynomial1({v1 - slope * a1.finite(), slope}),
                          Polynomial1::constant(GaussianRational(1)));
    Divisor dpsi = principal_divisor(psi);
    if (dpsi.contains(a1) || dpsi.contains(a2)) continue;
    CurveConfiguration c;
    c.components = {"M", "N"};
    c.nodes.push_back({"M", a1, "N", a1});
    c.nodes.push_back({"M", a2, "N", a2});
    Pic00Element gamma;
    gamma["M"] = principal_divisor(phi);
    gamma["N"] = dpsi;
    ++principal_total;
    PairingCheck id = hmap_log_identity(c, gamma);
    if (id.equal && id.lhs.is_zero() && pic00_h(c, gamma).is_one()) ++principal_ok;
  }
  std::snprintf(buf, sizeof buf, "%d/25 identities exact, %d/10 principal classes exactly 0",
                ok, principal_ok);
  report(5, "log|h| pairing identity on nodal curves", ok == 25 && principal_ok == 10, buf);
}

// 6. h(gamma) equals the cross ratio [r1, r2; q2, q1] in the bundled reference
//    configuration; Mobius invariance of the cross ratio on 50 random instances.
void criterion6(const std::string& scenarios_dir) {
  bool ref_ok = false;
  std::string detail;
  try {
    Scenario s = load_scenario(scenarios_dir + "/hmap_reference.json");
    Json rep = run_scenario(s, {});
    ref_ok = report_pass(rep);
    const Json& c = rep.at("cases")[0];
    detail = "h = " + c.at("h").get<std::string>() +
             ", cross ratio = " + c.at("cross_ratio").get<std::string>();
  } catch (const Error& e) {
    detail = e.what();
  }
  Rng rng(1006);
  int inv_ok = 0, inv_total = 0;
  while (inv_total < 50) {
    P1Point a(gen::small_gq(rng, 6)), b(gen::small_gq(rng, 6)), c(gen::small_gq(rng, 6)),
        d(gen::small_gq(rng, 6));
    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
    GaussianRational ma = gen::small_gq(rng), mb = gen::small_gq(rng),
                     mc = gen::small_gq(rng), md = gen::small_gq(rng);
    if ((ma * md - mb * mc).is_zero()) continue;
    MobiusMap m(ma, mb, mc, md);
    ++inv_total;
    if (cross_ratio(m.apply(a), m.apply(b), m.apply(c), m.apply(d)) ==
        cross_ratio(a, b, c, d))
      ++inv_ok;
  }
  std::snprintf(buf, sizeof buf, "%s; invariance %d/50", detail.c_str(), inv_ok);
  report(6, "cross-ratio link and Mobius invariance", ref_ok && inv_ok == 50, buf);
}

// 7. Both ledger templates sum to exactly 0 for 1 <= m, n <= 5.
void criterion7() {
  bool ok = true;
  for (long m = 1; m <= 5; ++m)
    for (long n = 1; n <= 5; ++n)
      ok = ok && precycle_div(ledger_template("single-K3", m, n)).is_zero();
  bool nxn_seen = true;
  for (long k = 1; k <= 5; ++k) {
    auto terms = ledger_template("family", k, k);
    bool plus = false, minus = false;
    for (const LedgerTerm& t : terms) {
      auto it = t.boundary.coeff.find("NxN");
      if (it != t.boundary.coeff.end()) (it->second > 0 ? plus : minus) = true;
    }
    nxn_seen = nxn_seen && plus && minus;
    ok = ok && precycle_div(terms).is_zero();
  }
  report(7, "precycle ledger templates cancel", ok && nxn_seen,
         nxn_seen ? "all (m,n) give DIV = 0; +/-(NxN) pair present and cancelled"
                  : "(NxN) pair missing");
}

// 8. d-relation residuals: O(h^2) decay ratio in [3.5, 4.5] at >= 20 smooth
//    points; structurally zero cases give exactly 0.
void criterion8() {
  Rng rng(1008);
  int tested = 0;
  bool ok = true;
  double worst_lo = 10.0, worst_hi = 0.0;
  for (int it = 0; it < 400 && tested < 20; ++it) {
    RationalFunction1 f = gen::random_function(rng, 4);
    Cx t0(rng.real01() * 4.0 - 2.0, rng.real01() * 4.0 - 2.0);
    double safe = 1e9;
    for (const Polynomial1* p : {&f.num, &f.den}) {
      if (p->degree() < 1) continue;
      for (const Cx& r : numeric_roots(*p)) safe = std::min(safe, std::abs(r - t0));
    }
    if (safe < 0.5) continue;
    DRelationResult r1 = d_relation_check({f}, t0, 0.02);
    DRelationResult r2 = d_relation_check({f}, t0, 0.01);
    if (r1.residual < 1e-10 || r2.residual < 1e-12) continue;
    double ratio = r1.residual / r2.residual;
    worst_lo = std::min(worst_lo, ratio);
    worst_hi = std::max(worst_hi, ratio);
    ok = ok && ratio >= 3.5 && ratio <= 4.5;
    ++tested;
  }
  DRelationResult cz = d_relation_check({parse_function("5-2*i")}, Cx(0.1, 0.2), 1e-3);
  DRelationResult dz =
      d_relation_check({parse_function("z-1"), parse_function("z-1")}, Cx(0.0, 2.0), 1e-3);
  bool zeros = cz.residual == 0.0 && dz.residual == 0.0;
  std::snprintf(buf, sizeof buf, "%d points, decay ratios in [%.3f, %.3f]; exact zeros %s",
                tested, worst_lo, worst_hi, zeros ? "hold" : "FAIL");
  report(8, "current d-relation O(h^2) decay", ok && zeros && tested >= 20, buf);
}

// 9. Quadrature calibration: disk area pi and the unit-disk integral of
//    log|t| = -pi/2, each to 1e-6 at tol 1e-8 in under 30 s.
void criterion9() {
  QuadratureOptions opts;
  opts.tol = 1e-8;

  auto t0 = std::chrono::steady_clock::now();
  Integrand2D area;
  area.sample = [](const Cx&) { return 1.0; };
  QuadratureResult ra = integrate_2form(area, Domain::UnitDisk, opts);
  double dt_area = seconds_since(t0);
  double err_area = std::abs(ra.value - M_PI);

  t0 = std::chrono::steady_clock::now();
  Integrand2D logform;
  logform.sample = [](const Cx& t) { return std::log(std::abs(t)); };
  logform.singular_finite = {Cx(0.0, 0.0)};
  QuadratureResult rl = integrate_2form(logform, Domain::UnitDisk, opts);
  double dt_log = seconds_since(t0);
  double err_log = std::abs(rl.value - (-M_PI / 2.0));

  std::snprintf(buf, sizeof buf, "|area - pi| = %.2e (%.2fs), |log int + pi/2| = %.2e (%.2fs)",
                err_area, dt_area, err_log, dt_log);
  report(9, "quadrature calibration integrals",
         err_area < 1e-6 && err_log < 1e-6 && dt_area < 30.0 && dt_log < 30.0, buf);
}

// 10. m=1 reciprocity on the bundled pair1 scenarios (tol 1e-5) plus the
//     structurally vanishing cases, total under 5 minutes.
void criterion10(const std::string& scenarios_dir) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  RunOptions opts;
  opts.tol = 1e-5;
  for (const char* name : {"pair1_reference.json", "pair1_mixed.json", "pair1_lines.json"}) {
    try {
      Scenario s = load_scenario(scenarios_dir + "/" + name);
      Json rep = run_scenario(s, opts);
      bool pass = report_pass(rep);
      const Json& c = rep.at("cases")[0];
      double resid = c.contains("antisymmetry_residual")
                         ? c.at("antisymmetry_residual").get<double>()
                         : -1.0;
      char piece[96];
      std::snprintf(piece, sizeof piece, "%s |P12+P21|=%.1e; ", name, resid);
      detail += piece;
      ok = ok && pass;
    } catch (const Error& e) {
      ok = false;
      detail += std::string(name) + " error: " + e.what() + "; ";
    }
  }
  // structural vanishing: f1 = f2 and constant g1
  try {
    using Grid = std::vector<std::vector<GaussianRational>>;
    auto gq1 = GaussianRational(1);
    BivariateRational z = BivariateRational::from_grids(
        Grid{{GaussianRational(0)}, {gq1}}, Grid{{gq1}});
    BivariateRational w =
        BivariateRational::from_grids(Grid{{GaussianRational(0), gq1}}, Grid{{gq1}});
    BivariateRational w2z = BivariateRational::from_grids(
        Grid{{GaussianRational(0), gq1}, {GaussianRational(-2)}}, Grid{{gq1}});
    BivariateRational c3 =
        BivariateRational::from_grids(Grid{{GaussianRational(3)}}, Grid{{gq1}});
    ParametrizedCurveInSurface e1;
    e1.z_of_t = parse_function("t", "t");
    e1.w_of_t = parse_function("2*t", "t");
    e1.label = "{w=2z}";
    std::vector<TameComponent> comps{{e1, 0, 1}};
    Pair1Result same = pair1(z, z, w, w2z, comps, {});
    Pair1Result constg = pair1(z, w2z, c3, w2z, comps, {});
    bool zeros = same.value == 0.0 && constg.value == 0.0;
    ok = ok && zeros;
    detail += zeros ? "trivial cases exactly 0" : "trivial cases NONZERO";
  } catch (const Error& e) {
    ok = false;
    detail += std::string("trivial-case error: ") + e.what();
  }
  double dt = seconds_since(t0);
  char tail[48];
  std::snprintf(tail, sizeof tail, "; total %.1fs", dt);
  detail += tail;
  report(10, "m=1 reciprocity on bundled scenarios", ok && dt < 300.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string scenarios_dir = argc > 1 ? argv[1] : "scenarios";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6(scenarios_dir);
  criterion7();
  criterion8();
  criterion9();
  criterion10(scenarios_dir);
  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
