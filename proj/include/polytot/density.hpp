#pragma once

#include "polytot/bignat.hpp"
#include "polytot/field.hpp"

#include <string>
#include <vector>

namespace polytot {

struct DensityReport {
  BigNat y;
  unsigned k = 0;  // floor(log_q y)
  BigNat V;        // |Phi(A) ∩ [1, y]|
  double bound = 0;  // 2 q k (e^2/2)^{k/2}
  double ratio = 0;  // V / y
  // False when k = 0: the bound degenerates to 0 there and is not checked.
  bool bound_checked = false;
  bool holds = true;
};

// Phi(A) ∩ [1, y], by depth-first search over factored forms (j, {m_d}).
std::vector<BigNat> phi_values_up_to(const BigNat& y, const Field& field);

// The same set from enumerating monic f with deg f <= degree_bound(y).
std::vector<BigNat> phi_values_bruteforce(const BigNat& y, const Field& field);

double density_bound(std::uint32_t q, unsigned k);

// Throws CheckFailure if V exceeds the guard-banded bound.
DensityReport density_report(const BigNat& y, const Field& field);

std::string density_csv_header();
std::string density_csv_row(const DensityReport& r);

}  // namespace polytot
