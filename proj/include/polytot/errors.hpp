#pragma once

#include <stdexcept>

namespace polytot {

// A mathematical check failed: a counting theorem, a bound, or an agreement
// between a formula and its brute-force oracle.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polytot
