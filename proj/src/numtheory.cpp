#include "polytot/numtheory.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace polytot {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

BigNat gcd(const BigNat& a, const BigNat& b) {
  BigNat r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of the odd
// composite n, trying the polynomial x^2 + c for c = 1, 2, ... in turn.
BigNat pollard_rho(const BigNat& n) {
  for (unsigned long c = 1;; ++c) {
    BigNat y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](const BigNat& v) {
      BigNat t = v * v + c;
      mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
      return t;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          BigNat diff = x > y ? BigNat(x - y) : BigNat(y - x);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        BigNat diff = x > ys ? BigNat(x - ys) : BigNat(ys - x);
        g = gcd(diff, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigNat& n, std::map<BigNat, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigNat d = pollard_rho(n);
  factor_into(d, out);
  factor_into(BigNat(n / d), out);
}

}  // namespace

BigNat IntFactorization::value() const {
  BigNat v = 1;
  for (const auto& [prime, exp] : factors) v *= pow_ui(prime, exp);
  return v;
}

bool is_prime(const BigNat& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

bool is_prime(std::uint64_t n) { return is_prime(from_u64(n)); }

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be positive");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

IntFactorization factor_int(const BigNat& n) {
  if (n < 2) throw std::invalid_argument("factor_int: n must be at least 2");
  IntFactorization result;
  BigNat rest = n;
  for (std::uint64_t p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigNat(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++result.factors[BigNat(p)];
    }
  }
  factor_into(rest, result.factors);
  return result;
}

std::vector<BigNat> primitive_prime_divisors(std::uint64_t a, unsigned n) {
  if (a < 2 || n < 1) throw std::invalid_argument("primitive_prime_divisors: need a >= 2, n >= 1");
  const BigNat value = pow_ui(a, n) - 1;
  std::vector<BigNat> out;
  if (value < 2) return out;
  for (const auto& [prime, exp] : factor_int(value).factors) {
    bool primitive = true;
    for (unsigned k = 1; k < n && primitive; ++k) {
      BigNat r;
      mpz_powm_ui(r.get_mpz_t(), BigNat(a).get_mpz_t(), k, prime.get_mpz_t());
      if (r == 1) primitive = false;
    }
    if (primitive) out.push_back(prime);
  }
  return out;
}

bool zsigmondy_has_primitive(std::uint64_t a, std::uint64_t b, unsigned n) {
  if (std::gcd(a, b) != 1) throw std::invalid_argument("zsigmondy_has_primitive: gcd(a, b) must be 1");
  if (a <= b || b < 1 || n < 2) throw std::invalid_argument("zsigmondy_has_primitive: need a > b >= 1, n >= 2");
  const BigNat A = from_u64(a), B = from_u64(b);
  const BigNat value = pow_ui(A, n) - pow_ui(B, n);
  if (value < 2) return false;
  for (const auto& [prime, exp] : factor_int(value).factors) {
    bool primitive = true;
    for (unsigned k = 1; k < n && primitive; ++k) {
      BigNat earlier = pow_ui(A, k) - pow_ui(B, k);
      if (mpz_divisible_p(earlier.get_mpz_t(), prime.get_mpz_t())) primitive = false;
    }
    if (primitive) return true;
  }
  return false;
}

StirlingBounds stirling_bounds(unsigned n) {
  if (n < 1) throw std::invalid_argument("stirling_bounds: n must be positive");
  const double x = n;
  const double core = std::sqrt(2 * std::numbers::pi * x) * std::pow(x / std::numbers::e, x);
  return {core * std::exp(1.0 / (12 * x + 1)), core * std::exp(1.0 / (12 * x))};
}

BigNat count_solutions(const SolutionCountQuery& query) {
  if (query.weights.empty()) throw std::invalid_argument("count_solutions: weights must be non-empty");
  for (auto w : query.weights)
    if (w < 1) throw std::invalid_argument("count_solutions: weights must be positive");
  // ways[t] = number of vectors with weighted sum exactly t
  std::vector<BigNat> ways(query.budget + 1, 0);
  ways[0] = 1;
  for (auto w : query.weights)
    for (std::uint64_t t = w; t <= query.budget; ++t) ways[t] += ways[t - w];
  BigNat total = 0;
  for (const auto& v : ways) total += v;
  return total;
}

bool solution_count_sandwich_holds(const SolutionCountQuery& query, const BigNat& count) {
  const auto k = query.weights.size();
  BigNat denom = factorial(k), weight_sum = 0;
  for (auto w : query.weights) {
    denom *= from_u64(w);
    weight_sum += from_u64(w);
  }
  const BigNat scaled = count * denom;
  return pow_ui(from_u64(query.budget), k) <= scaled &&
         scaled <= pow_ui(BigNat(from_u64(query.budget) + weight_sum), k);
}

BigNat triangular_solution_count(unsigned n) {
  if (n < 1) throw std::invalid_argument("triangular_solution_count: n must be positive");
  SolutionCountQuery q;
  for (unsigned i = 1; i <= n; ++i) q.weights.push_back(i);
  q.budget = n;
  return count_solutions(q);
}

double triangular_bound(unsigned n) {
  return 2 * std::pow(std::exp(2.0) / 2, n / 2.0);
}

bool strictly_below(double lhs, const BigNat& rhs) {
  return cmp(rhs, lhs * (1 + kGuardBand)) > 0;
}

bool strictly_below(const BigNat& lhs, double rhs) {
  return cmp(lhs, rhs * (1 - kGuardBand)) < 0;
}

}  // namespace polytot
