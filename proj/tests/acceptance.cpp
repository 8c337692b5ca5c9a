#include "polytot/verify.hpp"

#include <algorithm>
#include <iostream>

// Runs every suite at full range and prints one line per acceptance criterion.
int main() {
  std::vector<polytot::CriterionResult> results;
  for (const auto& suite : polytot::suite_names())
    for (auto& r : polytot::run_suite(suite)) results.push_back(std::move(r));
  std::sort(results.begin(), results.end(),
            [](const auto& a, const auto& b) { return std::stoi(a.id) < std::stoi(b.id); });

  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " (" << r.detail << ")\n";
    failed += !r.passed;
  }
  std::cout << results.size() - failed << '/' << results.size() << " criteria passed\n";
  return failed == 0 && results.size() == 9 ? 0 : 1;
}
