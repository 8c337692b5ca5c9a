#pragma once

#include "polytot/bignat.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polytot {

struct CriterionResult {
  std::string id;  // acceptance criterion number
  std::string title;
  bool passed = false;
  std::string detail;
};

// Caps that shrink a suite's ranges; unset means the full acceptance range.
struct VerifyBudget {
  std::optional<unsigned> max_degree;
  std::optional<BigNat> max_n;
  std::optional<BigNat> max_y;
};

// collisions, preimage, sierpinski, erdos, density, lemmas.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite name.
std::vector<CriterionResult> run_suite(std::string_view name, const VerifyBudget& budget = {});

}  // namespace polytot
