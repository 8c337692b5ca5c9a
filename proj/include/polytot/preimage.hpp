#pragma once

#include "polytot/bignat.hpp"
#include "polytot/field.hpp"
#include "polytot/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polytot {

// One way of writing n = q^j * prod (q^d - 1)^{m_d} with 1 <= m_d <= pi_q(d).
struct Decomposition {
  unsigned j = 0;
  std::map<unsigned, unsigned> counts;

  BigNat evaluate(std::uint32_t q) const;
  bool operator==(const Decomposition&) const = default;
};

// Canonical form of a totient value.
//   q >= 4: the decomposition itself (it is unique).
//   q == 3: 2^i 3^j prod_{d>=3} (3^d - 1)^{m_d} with i = m_1 + 3 m_2; counts hold d >= 3.
//   q == 2: 2^j prod_{d>=2} (2^d - 1)^{m_d}; m_1 is left free; counts hold d >= 2.
// `expansions` lists the full decompositions behind it that belong to Phi(A).
struct Representation {
  unsigned j = 0;
  std::map<unsigned, unsigned> counts;
  std::optional<unsigned> merged_i;
  std::vector<Decomposition> expansions;

  BigNat evaluate(std::uint32_t q) const;
};

// All decompositions of n respecting the pi_q caps, with no membership filter.
std::vector<Decomposition> decompositions(const BigNat& n, const Field& field);

// Non-constant, and j splits as sum d * j_d over degrees with m_d > 0.
bool is_member_decomposition(const Decomposition& dec);

std::vector<Representation> represent(const BigNat& n, const Field& field);

// Monic f with signature matching the decomposition:
// sum over j = sum d j_d of prod C_d binom(pi_q(d), m_d).
BigNat count_for_decomposition(const Decomposition& dec, const Field& field);

BigNat preimage_count(const BigNat& n, const Field& field);

// Brute force: every monic f with deg f <= degree_bound(n) and Phi(f) = n.
std::vector<Poly> preimage_list(const BigNat& n, const Field& field);

// Smallest Phi value over monic polynomials of degree D, for D = 0..max_degree
// (entry 0 is unused). Exact knapsack over (d, m_d, extra exponent).
std::vector<BigNat> min_phi_by_degree(const Field& field, unsigned max_degree);

// Largest D with minPhi(D) <= n, scanning until three consecutive degrees exceed n.
unsigned degree_bound(const BigNat& n, const Field& field);

// Count of monic polynomials of degree 1..max_degree per Phi value, brute force.
std::map<BigNat, std::uint64_t> phi_census(const Field& field, unsigned max_degree);

enum class CountClass {
  empty,
  unique,
  exactly_q,
  at_least_binom,
  unclassified,  // q = 3 only: a count in (1, 3), which no theorem excludes
  exactly_three,
  above_three,
};

const char* to_string(CountClass c);

struct CountProfile {
  BigNat n;
  BigNat count;
  CountClass cls = CountClass::empty;
  // The explicit uniqueness condition holds for n (always false for q = 2).
  bool uniqueness_condition = false;
  std::optional<BigNat> oracle_count;
};

// Explicit condition under which exactly one monic polynomial has Phi = n.
bool uniqueness_condition(const Representation& rep, const Field& field);

// Throws CheckFailure on a gap-theorem violation, a q = 2 floor violation, a
// uniqueness mismatch, or (with_oracle) a formula/oracle disagreement.
CountProfile count_profile(const BigNat& n, const Field& field, bool with_oracle = false);

enum class SierpinskiGoal {
  exact_count,        // q = 2: count l, l >= 3
  q_power,            // q != 2: count q^l, l >= 1
  binomial_multiple,  // q != 2: count C(q,2)(l+1), l >= 0
};

struct SierpinskiWitness {
  BigNat n;
  BigNat expected_count;
};

SierpinskiWitness sierpinski_witness(const Field& field, SierpinskiGoal goal, unsigned l);

}  // namespace polytot
