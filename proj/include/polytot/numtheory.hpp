#pragma once

#include "polytot/bignat.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace polytot {

/// Prime factorization: prime -> exponent, ordered by prime.
struct IntFactorization {
  std::map<BigNat, unsigned> factors;

  BigNat value() const;
};

/// Non-negative integer solutions of weights . x <= budget.
struct SolutionCountQuery {
  std::vector<std::uint64_t> weights;
  std::uint64_t budget = 0;
};

struct StirlingBounds {
  double lower = 0;
  double upper = 0;
};

// Relative guard band applied to every floating-point bound comparison, always
// on the side that makes the check harder to pass.
inline constexpr double kGuardBand = 1e-9;

int mobius(std::uint64_t n);

IntFactorization factor_int(const BigNat& n);

bool is_prime(const BigNat& n);
bool is_prime(std::uint64_t n);

/// Primes dividing a^n - 1 that divide no a^k - 1 with 1 <= k < n.
std::vector<BigNat> primitive_prime_divisors(std::uint64_t a, unsigned n);

/// Whether a^n - b^n has a primitive prime divisor, decided by factoring.
/// Requires gcd(a, b) = 1, a > b >= 1, n >= 2.
bool zsigmondy_has_primitive(std::uint64_t a, std::uint64_t b, unsigned n);

/// Robbins' two-sided Stirling bounds for n!.
StirlingBounds stirling_bounds(unsigned n);

/// Exact count by budget-indexed DP.
BigNat count_solutions(const SolutionCountQuery& query);

/// Checks n^k / (k! prod a) <= N <= (n + sum a)^k / (k! prod a) exactly, in
/// cleared-denominator integer form.
bool solution_count_sandwich_holds(const SolutionCountQuery& query, const BigNat& count);

/// N(n): solutions of x_1 + 2 x_2 + ... + n x_n <= n.
BigNat triangular_solution_count(unsigned n);

/// 2 (e^2/2)^(n/2), the upper bound on N(n).
double triangular_bound(unsigned n);

/// lhs < rhs with lhs inflated by the guard band.
bool strictly_below(double lhs, const BigNat& rhs);
/// lhs < rhs with rhs deflated by the guard band.
bool strictly_below(const BigNat& lhs, double rhs);

}  // namespace polytot
