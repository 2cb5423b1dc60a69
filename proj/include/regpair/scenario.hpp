#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "regpair/errors.hpp"

namespace regpair {

using Json = nlohmann::ordered_json;

// A validated scenario: one verification job for the toolkit. The payload has
// passed strict schema validation (unknown fields rejected) for its kind.
struct Scenario {
  std::string kind;
  uint64_t seed = 0;
  std::optional<double> tol;
  Json payload;
  std::string base_dir;  // for suite members
};

struct RunOptions {
  std::optional<double> tol;
  std::optional<uint64_t> seed;
  long max_cells = 600000;
};

// Parses and validates; throws ParseError with line/column on bad JSON and a
// message naming the offending field on schema violations.
Scenario load_scenario(const std::string& path);
Scenario parse_scenario(const std::string& text, const std::string& base_dir);

// Executes the scenario and returns the full report. Per-case errors are
// captured in the report; the batch never aborts on a case failure.
Json run_scenario(const Scenario& s, const RunOptions& opts);

bool report_pass(const Json& report);
std::string report_to_text(const Json& report);

}  // namespace regpair
