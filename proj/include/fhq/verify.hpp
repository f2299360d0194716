#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fhq::verify {

struct Options {
  std::uint64_t seed = 7;
  int max_n = 5;
};

struct Outcome {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // 0: no budget
};

struct Check {
  std::string id;
  std::string title;
  double budget_seconds;
};

// Acceptance criteria, in order: 1 .. 8, 9a, 9b, 10, 11.
const std::vector<Check>& acceptance_checks();
// Module invariants, parameterised by max_n and seed.
const std::vector<Check>& property_checks();

// Runs one check; exceptions become failures carrying the message. A check
// that exceeds its budget fails.
Outcome run(const std::string& id, const Options& options = {});

}  // namespace fhq::verify
