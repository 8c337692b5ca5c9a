#pragma once

#include "polytot/bignat.hpp"
#include "polytot/field.hpp"
#include "polytot/poly.hpp"

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace polytot {

// The families describing Phi(A) ∩ sigma(A). Over F_2 they are listed in the
// order tried by the matcher; M_d = 2^d - 1.
enum class ErdosFamily {
  q3_pair,               // (3^d1 - 1)(3^d2 - 1), d1, d2 >= 1
  q2_mersenne,           // M_d, d >= 2
  q2_three_single,       // 3 M_d, d >= 3, 2 | d or 3 | d
  q2_twentyone_single,   // 3 * 7 * M_d, d >= 3
  q2_pair,               // M_d1 M_d2, d1 >= 2, d2 >= 3
  q2_twentyone_pair,     // 3 * 7 * M_d1 M_d2, d1 >= 3, d2 >= 4
  q2_three_pair,         // 3 M_d1 M_d2, d1, d2 >= 4, 2 | d1 or 3 | d1
  q2_three_triple,       // 3 M_d1 M_d2 M_d3, d1, d2, d3 >= 4, 2 | d1 or 3 | d1
};

const char* to_string(ErdosFamily f);

struct IntersectionVerdict {
  bool member = false;
  std::optional<ErdosFamily> family;
  std::vector<unsigned> params;
};

// Evaluates a family at the given parameters.
BigNat family_value(ErdosFamily family, const std::vector<unsigned>& params);

IntersectionVerdict intersection_member(const BigNat& n, const Field& field);

// Family members <= y, sorted and deduplicated.
std::vector<BigNat> intersection_up_to(const BigNat& y, const Field& field);

// (f, g) with Phi(f) = sigma(g) = n when n is in the intersection.
std::optional<std::pair<Poly, Poly>> erdos_witness(const BigNat& n, const Field& field);

// sigma(g) <= y over monic g; sigma(g) >= |g| bounds deg g by floor(log_q y).
std::set<BigNat> sigma_values_bruteforce(const BigNat& y, const Field& field);

// Largest k with q^k <= y (y >= 1).
unsigned floor_log(const BigNat& y, std::uint32_t q);

}  // namespace polytot
