// Runs the acceptance criteria and prints one line per criterion.
//   acceptance            all criteria
//   acceptance 4 9b       selected criteria
#include <iomanip>
#include <iostream>

#include "fhq/verify.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids;
  for (int i = 1; i < argc; ++i) ids.emplace_back(argv[i]);
  if (ids.empty())
    for (const auto& c : fhq::verify::acceptance_checks()) ids.push_back(c.id);
  bool all = true;
  for (const auto& id : ids) {
    const auto r = fhq::verify::run(id);
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << std::left << std::setw(3) << r.id << " "
              << r.title << "  [" << std::fixed << std::setprecision(2) << r.seconds << " s / budget "
              << std::setprecision(0) << r.budget_seconds << " s]  " << r.detail << std::endl;
  }
  return all ? 0 : 1;
}
