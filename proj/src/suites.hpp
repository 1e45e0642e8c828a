#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "serialize.hpp"

namespace conjforge::suites {

struct CaseResult {
  std::string label;
  bool pass = false;
  std::string detail;
};

// One suite run. Reports carry no timing or environment data, so a re-run
// with the same seed serializes byte-identically.
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;

  bool passed() const;
  io::json to_json() const;
};

// Suites runnable individually; "all" runs every one of them, and
// "determinism" re-runs each suite twice and compares the serialized
// reports byte for byte.
std::vector<std::string> suite_names();

// samples <= 0 selects each suite's built-in case counts (the counts the
// acceptance criteria pin); positive values rescale the seeded-case suites.
Report run_suite(const std::string& name, std::uint64_t seed, int samples = 0);

}  // namespace conjforge::suites
