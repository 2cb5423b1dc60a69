#include <doctest.h>

#include "support/gen.hpp"

using namespace regpair;

namespace {
RationalFunction1 rf(const std::string& s) { return parse_function(s); }
GaussianRational gq(const std::string& s) { return parse_gq(s); }
P1Point pt(const std::string& s) { return parse_point(s); }

Divisor div_of(std::initializer_list<std::pair<const char*, long>> terms) {
  Divisor d;
  for (auto& [p, n] : terms) d.add(parse_point(p), n);
  return d;
}

// Two-component configuration glued at a1~b1 and a2~b2.
CurveConfiguration config2(const P1Point& a1, const P1Point& a2, const P1Point& b1,
                           const P1Point& b2) {
  CurveConfiguration c;
  c.components = {"M", "N"};
  c.nodes.push_back({"M", a1, "N", b1});
  c.nodes.push_back({"M", a2, "N", b2});
  return c;
}
}  // namespace

TEST_SUITE("pair0") {
  TEST_CASE("examples") {
    LogSum v = pair0(rf("z"), div_of({{"2", 1}, {"3", -1}}));
    CHECK(v.modulus_product() == Rat(4, 9));  // log(2/3): product of |.|^2
    CHECK(v.value() == doctest::Approx(std::log(2.0 / 3.0)));

    CHECK(pair0(rf("1"), div_of({{"2", 1}, {"5", -1}})).is_zero());
    CHECK(pair0(rf("z"), Divisor{}).is_zero());
  }

  TEST_CASE("support collision raises the typed error") {
    CHECK_THROWS_AS(pair0(rf("z"), div_of({{"0", 1}, {"3", -1}})), DisjointnessError);
  }

  TEST_CASE("bilinearity, exact") {
    Rng rng(31);
    for (int it = 0; it < 25; ++it) {
      RationalFunction1 f = gen::random_function(rng, 4);
      RationalFunction1 g = gen::random_function(rng, 4);
      std::vector<P1Point> forbidden;
      for (auto& [p, n] : principal_divisor(f).mult) forbidden.push_back(p);
      for (auto& [p, n] : principal_divisor(g).mult) forbidden.push_back(p);
      Divisor e1 = gen::random_degree0_divisor(rng, 2, forbidden);
      Divisor e2 = gen::random_degree0_divisor(rng, 2, forbidden);
      LogSum both = pair0(f * g, e1) ;
      CHECK(both.equals(pair0(f, e1) + pair0(g, e1)));
      CHECK(pair0(f, e1 + e2).equals(pair0(f, e1) + pair0(f, e2)));
    }
  }

  TEST_CASE("float rendering agrees with the exact representation") {
    Rng rng(39);
    for (int it = 0; it < 20; ++it) {
      RationalFunction1 f = gen::random_function(rng, 5);
      std::vector<P1Point> forbidden;
      for (auto& [p, n] : principal_divisor(f).mult) forbidden.push_back(p);
      Divisor e = gen::random_degree0_divisor(rng, 3, forbidden);
      LogSum v = pair0(f, e);
      double via_product = 0.5 * rat_log(v.modulus_product());
      CHECK(std::abs(v.value() - via_product) <=
            1e-12 * (1.0 + std::abs(v.value())) * double(v.terms.size() + 1));
    }
  }

  TEST_CASE("multi-component precycles pair componentwise") {
    PrecycleCurve beta;
    beta.terms.emplace_back(rf("z"), "M");
    beta.terms.emplace_back(rf("z-1"), "N");
    ComponentDivisor eps;
    eps["M"] = div_of({{"2", 1}, {"4", -1}});
    eps["N"] = div_of({{"3", 1}, {"5", -1}});
    LogSum v = pair0(beta, eps);
    // log(2/4) + log(2/4) = log(1/4)
    CHECK(v.modulus_product() == Rat(1, 16));
  }
}

TEST_SUITE("m=0 reciprocity") {
  TEST_CASE("examples") {
    PairingCheck c = reciprocity_check0(rf("z"), rf("(z-2)/(z-3)"));
    CHECK(c.equal);
    CHECK(c.lhs.modulus_product() == Rat(4, 9));
    CHECK(reciprocity_check0(rf("z"), rf("5")).equal);
    CHECK(reciprocity_check0(rf("z"), rf("5")).lhs.is_zero());
    CHECK(reciprocity_check0(rf("(z-1)/(z+1)"), rf("(z-5)/(z+5)")).equal);
  }

  TEST_CASE("collision rejected") {
    CHECK_THROWS_AS(reciprocity_check0(rf("z"), rf("z-0")), DisjointnessError);
  }

  TEST_CASE("random admissible pairs agree exactly") {
    Rng rng(32);
    for (int it = 0; it < 100; ++it) {
      auto [f, g] = gen::disjoint_pair(rng, 5);
      PairingCheck c = reciprocity_check0(f, g);
      CHECK(c.equal);
    }
  }
}

TEST_SUITE("projection formula") {
  TEST_CASE("examples") {
    // cancelling pushforward: both sides zero
    PairingCheck a = projection_check0(rf("z^2"), div_of({{"1", 1}, {"-1", -1}}),
                                       div_of({{"9", 1}, {"16", -1}}));
    CHECK(a.equal);
    CHECK(a.lhs.is_zero());

    PairingCheck b = projection_check0(rf("z^2"), div_of({{"2", 1}, {"3", -1}}),
                                       div_of({{"25", 1}, {"36", -1}}));
    CHECK(b.equal);

    PairingCheck c = projection_check0(rf("z"), div_of({{"2", 1}, {"3", -1}}),
                                       div_of({{"5", 1}, {"7", -1}}));
    CHECK(c.equal);
  }

  TEST_CASE("random instances for z^k and Mobius-composed variants") {
    Rng rng(33);
    for (long k : {2L, 3L, 4L}) {
      for (int it = 0; it < 20; ++it) {
        Divisor eps;
        if (k == 3) {
          // only 0 and infinity have Q(i)-rational fibers under z^3
          long n = rng.range(1, 4);
          eps.add(pt("0"), n);
          eps.add(P1Point::infinity(), -n);
        } else {
          for (int j = 0; j < 2; ++j) {
            GaussianRational a = gen::small_gq(rng);
            if (a.is_zero()) a = gq("2+i");
            long m = rng.range(1, 2);
            eps.add(P1Point(a.pow(k)), m);
            eps.add(P1Point::infinity(), -m);
          }
        }
        RationalFunction1 pk = rf("z").pow(k);
        Divisor pulled = pullback_divisor(pk, eps);
        std::vector<P1Point> forbidden;
        for (auto& [p, n] : pulled.mult) forbidden.push_back(p);
        for (auto& [p, n] : eps.mult) forbidden.push_back(p);
        Divisor eta = gen::random_degree0_divisor(rng, 2, forbidden);
        // keep the pushforward clear of eps as well
        if (!pushforward_divisor(pk, eta).disjoint_from(eps)) continue;
        CHECK(projection_check0(pk, eta, eps).equal);
      }
    }
    // Mobius-precomposed variant: pi = ((z+1))^2, eta upstairs shifted
    CHECK(projection_check0(compose_mobius(rf("z^2"), MobiusMap(gq("1"), gq("1"), gq("0"), gq("1"))),
                            div_of({{"1", 1}, {"2", -1}}), div_of({{"25", 1}, {"36", -1}}))
              .equal);
  }
}

TEST_SUITE("nondegeneracy witness") {
  TEST_CASE("examples") {
    Witness w = nondegeneracy_witness(div_of({{"0", 1}, {"1", -1}}));
    CHECK(!w.value.is_zero());
    CHECK(w.g == rf("z-2"));  // first grid candidate already works
    Witness w2 = nondegeneracy_witness(div_of({{"1", 1}, {"-1", -1}}));
    CHECK(!w2.value.is_zero());
    CHECK_THROWS_AS(nondegeneracy_witness(Divisor{}), PreconditionError);
  }

  TEST_CASE("divisor of the witness avoids eta") {
    Rng rng(34);
    for (int it = 0; it < 50; ++it) {
      Divisor eta = gen::random_degree0_divisor(rng, 4, {}, true);
      Witness w = nondegeneracy_witness(eta);
      CHECK(!w.value.is_zero());
      CHECK(principal_divisor(w.g).disjoint_from(eta));
      CHECK(w.candidates_tried <= 200);
    }
  }
}

TEST_SUITE("nodal Pic00") {
  TEST_CASE("reference three-quarters example") {
    CurveConfiguration c = config2(pt("0"), pt("1"), pt("0"), pt("1"));
    Pic00Element gamma;
    gamma["N"] = div_of({{"2", 1}, {"3", -1}});
    GaussianRational h = pic00_h(c, gamma);
    CHECK(h == gq("3/4"));

    PairingCheck id = hmap_log_identity(c, gamma);
    CHECK(id.equal);
    CHECK(id.lhs.modulus_product() == Rat(9, 16));

    // h equals the cross ratio [r1, r2; q2, q1] in this convention
    CHECK(cross_ratio(pt("0"), pt("1"), pt("3"), pt("2")) == h);

    // nodal regulator scales by deg(delta . N)
    CHECK(nodal_regulator(c, gamma, 0).is_zero());
    LogSum two = nodal_regulator(c, gamma, 2);
    CHECK(two.modulus_product() == Rat(81, 256));
  }

  TEST_CASE("trivial class maps to 1") {
    CurveConfiguration c = config2(pt("0"), pt("1"), pt("0"), pt("1"));
    Pic00Element gamma;
    CHECK(pic00_h(c, gamma).is_one());
    CHECK(hmap_log_identity(c, gamma).lhs.is_zero());
  }

  TEST_CASE("homomorphism: h(2 gamma) = h(gamma)^2") {
    CurveConfiguration c = config2(pt("0"), pt("1"), pt("0"), pt("1"));
    Pic00Element gamma, dbl;
    gamma["N"] = div_of({{"2", 1}, {"3", -1}});
    dbl["N"] = div_of({{"2", 2}, {"3", -2}});
    CHECK(pic00_h(c, dbl) == pic00_h(c, gamma) * pic00_h(c, gamma));

    Pic00Element other, sum;
    other["M"] = div_of({{"5", 1}, {"-2", -1}});
    sum["N"] = gamma["N"];
    sum["M"] = other["M"];
    CHECK(pic00_h(c, sum) == pic00_h(c, gamma) * pic00_h(c, other));
  }

  TEST_CASE("principal classes land on h = 1 and pairing 0") {
    // phi on M and psi on N agreeing at both nodes: glued function exists
    Rng rng(35);
    for (int it = 0; it < 25; ++it) {
      P1Point a1(gen::small_gq(rng, 3)), a2(gen::small_gq(rng, 3));
      if (a1 == a2) continue;
      RationalFunction1 phi = gen::random_function(rng, 3);
      if (phi.order_at(a1) != 0 || phi.order_at(a2) != 0) continue;
      GaussianRational v1 = phi.eval(a1).value;
      GaussianRational v2 = phi.eval(a2).value;
      if (v1 == v2) continue;
      // psi linear with psi(a1) = v1, psi(a2) = v2 (same node coordinates)
      GaussianRational slope = (v2 - v1) / (a2.finite() - a1.finite());
      Polynomial1 psi_poly({v1 - slope * a1.finite(), slope});
      RationalFunction1 psi(psi_poly, Polynomial1::constant(gq("1")));
      Divisor dpsi = principal_divisor(psi);
      if (dpsi.contains(a1) || dpsi.contains(a2)) continue;

      CurveConfiguration c = config2(a1, a2, a1, a2);
      Pic00Element gamma;
      gamma["M"] = principal_divisor(phi);
      gamma["N"] = dpsi;
      CHECK(pic00_h(c, gamma).is_one());
      PairingCheck id = hmap_log_identity(c, gamma);
      CHECK(id.equal);
      CHECK(id.rhs.is_zero());
      CHECK(nodal_regulator(c, gamma, 5).is_zero());
    }
  }

  TEST_CASE("identity holds on random nodal configurations") {
    Rng rng(36);
    for (int it = 0; it < 25; ++it) {
      P1Point a1(gen::small_gq(rng, 3)), a2(gen::small_gq(rng, 3));
      P1Point b1(gen::small_gq(rng, 3)), b2(gen::small_gq(rng, 3));
      if (a1 == a2 || b1 == b2) continue;
      Pic00Element gamma;
      gamma["M"] = gen::random_degree0_divisor(rng, 2, {a1, a2});
      gamma["N"] = gen::random_degree0_divisor(rng, 2, {b1, b2});
      CurveConfiguration c = config2(a1, a2, b1, b2);
      PairingCheck id = hmap_log_identity(c, gamma);
      CHECK(id.equal);
    }
  }

  TEST_CASE("shape validation") {
    CurveConfiguration c = config2(pt("0"), pt("0"), pt("0"), pt("1"));
    CHECK_THROWS_AS(c.validate_two_component(), PreconditionError);
    CurveConfiguration good = config2(pt("0"), pt("1"), pt("0"), pt("1"));
    Pic00Element touching;
    touching["M"] = div_of({{"0", 1}, {"5", -1}});
    CHECK_THROWS_AS(pic00_h(good, touching), PreconditionError);
  }
}
