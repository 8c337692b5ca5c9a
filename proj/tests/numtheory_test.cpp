#include "polytot/numtheory.hpp"

#include "doctest.h"

#include <random>
#include <set>

using namespace polytot;

namespace {

// Trial-division factorization, independent of factor_int.
std::map<std::uint64_t, unsigned> naive_factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

std::uint64_t naive_count(const std::vector<std::uint64_t>& w, std::size_t idx, std::uint64_t budget) {
  if (idx == w.size()) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t used = 0; used <= budget; used += w[idx]) total += naive_count(w, idx + 1, budget - used);
  return total;
}

}  // namespace

TEST_CASE("mobius examples") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK_THROWS_AS(mobius(0), std::invalid_argument);
}

TEST_CASE("mobius agrees with factor_int up to 10^4") {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto f = factor_int(BigNat(static_cast<unsigned long>(n)));
    int expected = 1;
    for (const auto& [p, e] : f.factors) expected = e > 1 ? 0 : -expected;
    if (expected == 0) {
      REQUIRE(mobius(n) == 0);
    } else {
      REQUIRE(mobius(n) == expected);
    }
  }
}

TEST_CASE("factor_int") {
  auto f63 = factor_int(63);
  CHECK(f63.factors == std::map<BigNat, unsigned>{{3, 2}, {7, 1}});
  CHECK(factor_int(2).factors == std::map<BigNat, unsigned>{{2, 1}});
  CHECK(factor_int(pow_ui(2, 6) - 1).factors == f63.factors);
  CHECK_THROWS_AS(factor_int(1), std::invalid_argument);

  SUBCASE("matches trial division") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
      const std::uint64_t n = rng() % 1'000'000'000'000ULL + 2;
      const auto got = factor_int(from_u64(n));
      std::map<std::uint64_t, unsigned> converted;
      for (const auto& [p, e] : got.factors) converted[to_u64(p)] = e;
      REQUIRE(converted == naive_factor(n));
    }
  }

  SUBCASE("beyond trial division range") {
    // (2^31 - 1)(2^61 - 1), both Mersenne primes
    const BigNat a = pow_ui(2, 31) - 1, b = pow_ui(2, 61) - 1;
    const auto f = factor_int(a * b * 9);
    CHECK(f.factors == std::map<BigNat, unsigned>{{3, 2}, {a, 1}, {b, 1}});
    CHECK(f.value() == a * b * 9);
  }
}

TEST_CASE("primitive prime divisors") {
  CHECK(primitive_prime_divisors(2, 6).empty());
  CHECK(primitive_prime_divisors(2, 2) == std::vector<BigNat>{3});
  CHECK(primitive_prime_divisors(2, 4) == std::vector<BigNat>{5});
  CHECK(primitive_prime_divisors(2, 1).empty());  // 2 - 1 = 1
  CHECK(primitive_prime_divisors(3, 1) == std::vector<BigNat>{2});
}

TEST_CASE("zsigmondy") {
  CHECK_FALSE(zsigmondy_has_primitive(2, 1, 6));
  CHECK_FALSE(zsigmondy_has_primitive(3, 1, 2));
  CHECK(zsigmondy_has_primitive(5, 1, 2));
  CHECK_THROWS_AS(zsigmondy_has_primitive(6, 4, 3), std::invalid_argument);
  CHECK(zsigmondy_has_primitive(3, 2, 3));  // 19

  SUBCASE("exception set over a <= 12, n <= 20") {
    for (std::uint64_t a = 2; a <= 12; ++a)
      for (unsigned n = 2; n <= 20; ++n) {
        const bool expected_exception = (a == 2 && n == 6) || (n == 2 && ((a + 1) & a) == 0);
        INFO("a=" << a << " n=" << n);
        REQUIRE(zsigmondy_has_primitive(a, 1, n) == !expected_exception);
        REQUIRE(zsigmondy_has_primitive(a, 1, n) == !primitive_prime_divisors(a, n).empty());
      }
  }
}

TEST_CASE("stirling sandwich up to 30") {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto b = stirling_bounds(n);
    INFO("n=" << n);
    CHECK(strictly_below(b.lower, factorial(n)));
    CHECK(strictly_below(factorial(n), b.upper));
  }
}

TEST_CASE("count_solutions") {
  CHECK(count_solutions({{1}, 1}) == 2);
  CHECK(count_solutions({{1, 2}, 2}) == 4);
  CHECK(count_solutions({{1, 2, 3}, 3}) == 7);
  CHECK_THROWS_AS(count_solutions({{}, 3}), std::invalid_argument);
  CHECK_THROWS_AS(count_solutions({{1, 0}, 3}), std::invalid_argument);

  SUBCASE("random queries against nested enumeration") {
    std::mt19937 rng(99);
    for (int i = 0; i < 200; ++i) {
      SolutionCountQuery q;
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int j = 0; j < k; ++j) q.weights.push_back(std::uniform_int_distribution<int>(1, 6)(rng));
      q.budget = std::uniform_int_distribution<int>(0, 40)(rng);
      const BigNat got = count_solutions(q);
      REQUIRE(got == from_u64(naive_count(q.weights, 0, q.budget)));
      REQUIRE(solution_count_sandwich_holds(q, got));
    }
  }
}

TEST_CASE("triangular solution count") {
  CHECK(triangular_solution_count(1) == 2);
  CHECK(triangular_solution_count(2) == 4);
  CHECK(triangular_solution_count(3) == 7);
  for (unsigned n = 1; n <= 60; ++n) CHECK(strictly_below(triangular_solution_count(n), triangular_bound(n)));
}
