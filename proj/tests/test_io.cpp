#include <doctest.h>

#include <cstdlib>

#include "regpair/scenario.hpp"

using namespace regpair;

TEST_SUITE("scenario io") {
  TEST_CASE("minimal weil scenario runs and passes") {
    Scenario s = parse_scenario(R"js({"kind":"weil","f":"z","g":"1-z"})js", ".");
    Json report = run_scenario(s, {});
    CHECK(report_pass(report));
    CHECK(report.at("cases").size() == 1);
    CHECK(report.at("cases")[0].at("product") == "1");
  }

  TEST_CASE("empty input is a parse error") {
    CHECK_THROWS_AS(parse_scenario("", "."), ParseError);
    CHECK_THROWS_AS(parse_scenario("{\"kind\":", "."), ParseError);
  }

  TEST_CASE("parse errors carry line and column") {
    try {
      parse_scenario("{\n  \"kind\": \"weil\",\n  oops\n}", ".");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line == 3);
    }
  }

  TEST_CASE("unknown fields are rejected in strict mode") {
    CHECK_THROWS_WITH_AS(parse_scenario(R"js({"kind":"weil","f":"z","g":"1-z","x":1})js", "."),
                         doctest::Contains("unknown field \"x\""), ParseError);
  }

  TEST_CASE("missing fields are named") {
    CHECK_THROWS_WITH_AS(
        parse_scenario(
            R"js({"kind":"pair1","f1":{"num":[["0"]],"den":[["1"]]},"f2":{"num":[["0"]],"den":[["1"]]},"g1":{"num":[["0"]],"den":[["1"]]},"g2":{"num":[["0"]],"den":[["1"]]},"curves_xi1":[]})js",
            "."),
        doctest::Contains("curves_xi2"), ParseError);
  }

  TEST_CASE("case errors are captured without aborting") {
    // overlapping supports: the case fails with a disjointness error message
    Scenario s = parse_scenario(R"js({"kind":"reciprocity0","f":"z","g":"z-1+1"})js", ".");
    Json report = run_scenario(s, {});
    CHECK(!report_pass(report));
    CHECK(report.at("cases")[0].contains("error"));
  }

  TEST_CASE("reports are deterministic modulo timing") {
    Scenario s = parse_scenario(R"js({"kind":"weil","f":"(z-2)/(z-3)","g":"z-5","seed":7})js", ".");
    Json a = run_scenario(s, {});
    Json b = run_scenario(s, {});
    a.erase("timing_ms");
    b.erase("timing_ms");
    CHECK(a == b);
  }

  TEST_CASE("report text and json round trip") {
    Scenario s = parse_scenario(R"js({"kind":"ledger","template":"family","m":2,"n":2})js", ".");
    Json report = run_scenario(s, {});
    CHECK(report_pass(report));
    Json reparsed = Json::parse(report.dump());
    CHECK(reparsed == report);
    std::string text = report_to_text(report);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("ALL PASS") != std::string::npos);
  }

  TEST_CASE("hmap scenario with expectations") {
    Scenario s = parse_scenario(R"js({
      "kind": "hmap",
      "config": {"components": ["M","N"],
                 "nodes": [{"M":"0","N":"0"},{"M":"1","N":"1"}]},
      "gamma": {"M": [], "N": [{"point":"2","mult":1},{"point":"3","mult":-1}]},
      "expect_h": "3/4",
      "cross_ratio": ["0","1","3","2"],
      "deg_delta_n": 2
    })js", ".");
    Json report = run_scenario(s, {});
    CHECK(report_pass(report));
    CHECK(report.at("cases")[0].at("h") == "3/4");
  }

  TEST_CASE("hmap marked points resolve in cross-ratio checks") {
    Scenario s = parse_scenario(R"js({
      "kind": "hmap",
      "config": {"components": ["M","N"],
                 "nodes": [{"M":"0","N":"0"},{"M":"1","N":"1"}],
                 "marked": {"r1": {"component":"N","point":"0"},
                            "r2": {"component":"N","point":"1"},
                            "q1": {"component":"N","point":"2"},
                            "q2": {"component":"N","point":"3"}}},
      "gamma": {"M": [], "N": [{"point":"2","mult":1},{"point":"3","mult":-1}]},
      "cross_ratio": ["r1","r2","q2","q1"]
    })js", ".");
    Json report = run_scenario(s, {});
    CHECK(report_pass(report));
    CHECK(report.at("cases")[0].at("cross_ratio") == "3/4");

    Scenario bad = parse_scenario(R"js({
      "kind": "hmap",
      "config": {"components": ["M","N"],
                 "nodes": [{"M":"0","N":"0"},{"M":"1","N":"1"}],
                 "marked": {"r1": {"component":"X","point":"0"}}},
      "gamma": {}
    })js", ".");
    Json rep = run_scenario(bad, {});
    CHECK(!report_pass(rep));
    std::string err = rep.at("cases")[0].at("error").get<std::string>();
    CHECK(err.find("unknown component") != std::string::npos);
  }

  TEST_CASE("unknown kind rejected") {
    CHECK_THROWS_AS(parse_scenario(R"js({"kind":"mystery"})js", "."), ParseError);
  }

  TEST_CASE("pair1 component with both coordinates infinite is rejected") {
    Scenario s = parse_scenario(R"js({
      "kind":"pair1",
      "f1":{"num":[["0"],["1"]],"den":[["1"]]},
      "f2":{"num":[["0","1"]],"den":[["1"]]},
      "g1":{"num":[["0","1"]],"den":[["1"]]},
      "g2":{"num":[["0"],["1"]],"den":[["1"]]},
      "curves_xi1":[],
      "curves_xi2":[{"label":"pt","z":"inf","w":"inf","nu1":1,"nu2":0}]
    })js", ".");
    Json rep = run_scenario(s, {});
    CHECK(!report_pass(rep));
    CHECK(rep.at("cases")[0].at("error").get<std::string>().find("not a curve") !=
          std::string::npos);
  }

  TEST_CASE("bundled reference suite passes with at least ten cases") {
    const char* dir = std::getenv("REGPAIR_SCENARIOS");
    if (!dir) return;  // only wired up under ctest
    Scenario s = load_scenario(std::string(dir) + "/reference_suite.json");
    Json report = run_scenario(s, {});
    CHECK(report_pass(report));
    CHECK(report.at("cases").size() >= 10);
  }
}
