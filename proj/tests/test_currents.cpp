#include <doctest.h>

#include <cmath>

#include "regpair/currents.hpp"
#include "regpair/roots.hpp"
#include "support/gen.hpp"

using namespace regpair;

namespace {
RationalFunction1 rf(const std::string& s) { return parse_function(s); }
}  // namespace

TEST_SUITE("pi_p projections") {
  TEST_CASE("component selection and decomposition") {
    Cx c(3.0, 4.0);
    CHECK(pi_p(c, 0) == Cx(3.0, 0.0));
    CHECK(pi_p(c, 1) == Cx(0.0, 4.0));
    CHECK(pi_p(c, 0) + pi_p(c, 1) == c);
    CHECK(pi_p(c, 2) == pi_p(c, 0));
    CHECK(pi_p(c, -1) == pi_p(c, 1));
    CHECK(pi_p(pi_p(c, 1), 1) == pi_p(c, 1));
  }
}

TEST_SUITE("current evaluation") {
  TEST_CASE("m=1 gives log|f|") {
    FormSample s = r_current_eval({rf("z")}, Cx(2.0, 0.0));
    CHECK(s.degree == 0);
    CHECK(s.coeffs[0] == doctest::Approx(std::log(2.0)));
  }

  TEST_CASE("m=2 alternation kills the diagonal and swaps negate") {
    auto f = rf("(z-1)/(z+2)");
    auto g = rf("z-3");
    Cx t0(0.5, 0.25);
    FormSample diag = r_current_eval({f, f}, t0);
    CHECK(diag.coeffs[0] == 0.0);
    CHECK(diag.coeffs[1] == 0.0);
    FormSample ab = r_current_eval({f, g}, t0);
    FormSample ba = r_current_eval({g, f}, t0);
    CHECK(ab.coeffs[0] == -ba.coeffs[0]);
    CHECK(ab.coeffs[1] == -ba.coeffs[1]);
  }

  TEST_CASE("m=2 matches the hand formula") {
    auto f = rf("z");
    auto g = rf("1-z");
    Cx t0(0.3, 0.4);
    FormSample s = r_current_eval({f, g}, t0);
    Cx lf = 1.0 / t0;
    Cx lg = -1.0 / (1.0 - t0);
    double logf = std::log(std::abs(t0));
    double logg = std::log(std::abs(1.0 - t0));
    CHECK(s.coeffs[0] == doctest::Approx(logf * lg.imag() - logg * lf.imag()));
    CHECK(s.coeffs[1] == doctest::Approx(logf * lg.real() - logg * lf.real()));
  }

  TEST_CASE("m=3 is alternating") {
    auto a = rf("z"), b = rf("z-1"), c = rf("z+i");
    Cx t0(0.7, 0.2);
    FormSample abc = r_current_eval({a, b, c}, t0);
    FormSample bac = r_current_eval({b, a, c}, t0);
    FormSample dup = r_current_eval({a, a, c}, t0);
    CHECK(abc.degree == 2);
    CHECK(abc.coeffs[0] == doctest::Approx(-bac.coeffs[0]));
    CHECK(dup.coeffs[0] == doctest::Approx(0.0));
  }

  TEST_CASE("singular points rejected") {
    CHECK_THROWS_AS(r_current_eval({rf("z")}, Cx(0.0, 0.0)), PreconditionError);
    CHECK_THROWS_AS(omega_eval({rf("1/(z-1)")}, Cx(1.0, 0.0)), PreconditionError);
  }

  TEST_CASE("omega examples") {
    HoloFormSample w = omega_eval({rf("z")}, Cx(2.0, 0.0));
    CHECK(w.degree == 1);
    CHECK(w.coeff.real() == doctest::Approx(0.5));
    CHECK(w.coeff.imag() == doctest::Approx(0.0));
    CHECK(omega_eval({rf("z"), rf("z-1")}, Cx(2.0, 0.5)).coeff == Cx(0.0, 0.0));
    CHECK(omega_eval({rf("5")}, Cx(2.0, 0.0)).coeff == Cx(0.0, 0.0));
    // pi_0(omega_1) carries d log|f|: cross-check against the m=1 relation
    Cx L = omega_eval({rf("z-3")}, Cx(1.0, 1.0)).coeff;
    CHECK(pi_p(L, 0).real() == doctest::Approx(dlog_cx(rf("z-3"), Cx(1.0, 1.0)).real()));
  }
}

TEST_SUITE("d-relation checks") {
  TEST_CASE("m=1 second-order residual at a reference point") {
    DRelationResult r = d_relation_check({rf("z")}, Cx(2.0, 0.0), 1e-3);
    CHECK(r.residual <= 1e-5);
    CHECK(!r.exact_zero);
  }

  TEST_CASE("structural zeros") {
    DRelationResult c = d_relation_check({rf("5-2*i")}, Cx(0.3, 0.1), 1e-3);
    CHECK(c.exact_zero);
    CHECK(c.residual == 0.0);
    DRelationResult d = d_relation_check({rf("z-1"), rf("z-1")}, Cx(0.0, 2.0), 1e-3);
    CHECK(d.exact_zero);
    CHECK(d.residual == 0.0);
  }

  TEST_CASE("m=1 residual decays at second order") {
    Rng rng(41);
    int tested = 0;
    for (int it = 0; it < 200 && tested < 20; ++it) {
      RationalFunction1 f = gen::random_function(rng, 4);
      Cx t0(rng.real01() * 4.0 - 2.0, rng.real01() * 4.0 - 2.0);
      double safe = 1e9;
      for (const Polynomial1* p : {&f.num, &f.den}) {
        if (p->degree() < 1) continue;
        for (const Cx& r : numeric_roots(*p)) safe = std::min(safe, std::abs(r - t0));
      }
      if (safe < 0.5) continue;
      double h = 0.02;
      DRelationResult r1 = d_relation_check({f}, t0, h);
      DRelationResult r2 = d_relation_check({f}, t0, h / 2);
      if (r1.residual < 1e-10 || r2.residual < 1e-12) continue;  // flat point
      double ratio = r1.residual / r2.residual;
      CHECK(ratio >= 3.5);
      CHECK(ratio <= 4.5);
      ++tested;
    }
    CHECK(tested >= 20);
  }

  TEST_CASE("m=2 loop residual sits under the C h^2 envelope") {
    auto f = rf("(z-1)/(z+1)");
    auto g = rf("z-3*i");
    DRelationResult r = d_relation_check({f, g}, Cx(0.2, -0.3), 1e-2);
    CHECK(r.residual <= r.bound_constant * 1e-4 + 1e-18);
    CHECK(std::isfinite(r.bound_constant));
    DRelationResult half = d_relation_check({f, g}, Cx(0.2, -0.3), 5e-3);
    CHECK(half.residual <= std::max(r.residual, 1e-12));
  }

  TEST_CASE("singular neighborhoods are rejected") {
    CHECK_THROWS_AS(d_relation_check({rf("z")}, Cx(1e-4, 0.0), 1e-3), PreconditionError);
  }
}
