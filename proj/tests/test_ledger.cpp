#include <doctest.h>

#include "regpair/ledger.hpp"

using namespace regpair;

TEST_SUITE("cycle ledger") {
  TEST_CASE("single-K3 template cancels for independent m, n") {
    for (long m = 1; m <= 5; ++m)
      for (long n = 1; n <= 5; ++n)
        CHECK(precycle_div(ledger_template("single-K3", m, n)).is_zero());
  }

  TEST_CASE("family template cancels and carries the NxN pair") {
    for (long k = 1; k <= 5; ++k) {
      auto terms = ledger_template("family", k, k);
      long plus = 0, minus = 0;
      for (const LedgerTerm& t : terms) {
        auto it = t.boundary.coeff.find("NxN");
        if (it == t.boundary.coeff.end()) continue;
        if (it->second > 0) plus = it->second;
        if (it->second < 0) minus = it->second;
      }
      CHECK(plus == k);
      CHECK(minus == -k);
      CHECK(precycle_div(terms).is_zero());
    }
  }

  TEST_CASE("family requires m = n") {
    CHECK_THROWS_AS(ledger_template("family", 1, 2), PreconditionError);
    CHECK_THROWS_AS(ledger_template("single-K3", 0, 1), PreconditionError);
    CHECK_THROWS_AS(ledger_template("no-such", 1, 1), PreconditionError);
  }

  TEST_CASE("empty term list sums to zero") { CHECK(precycle_div({}).is_zero()); }

  TEST_CASE("precycle_div is additive") {
    auto a = ledger_template("single-K3", 2, 3);
    auto b = ledger_template("family", 2, 2);
    FormalCycle da = precycle_div(a);
    FormalCycle db = precycle_div(b);
    std::vector<LedgerTerm> both = a;
    both.insert(both.end(), b.begin(), b.end());
    CHECK(precycle_div(both) == da + db);
  }

  TEST_CASE("the uncorrected sign fails to cancel") {
    // flip the eta boundary to the opposite sign convention: the sum
    // must then be nonzero (this is exactly what the correction fixes)
    auto terms = ledger_template("single-K3", 2, 3);
    for (LedgerTerm& t : terms) {
      if (t.label.rfind("eta", 0) == 0) {
        FormalCycle flipped;
        for (auto& [g, c] : t.boundary.coeff) flipped.add(g, -c);
        t.boundary = flipped;
      }
    }
    CHECK(!precycle_div(terms).is_zero());
  }
}
