#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace polytot {

// Exact non-negative integers. Every count and totient value lives here.
using BigNat = mpz_class;

inline BigNat pow_ui(const BigNat& base, unsigned long exp) {
  BigNat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigNat pow_ui(unsigned long base, unsigned long exp) {
  BigNat r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigNat binomial(unsigned long n, unsigned long k) {
  BigNat r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigNat binomial(const BigNat& n, unsigned long k) {
  BigNat r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigNat factorial(unsigned long n) {
  BigNat r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_decimal(const BigNat& v) { return v.get_str(10); }

// Multiplicity of the prime p in n (n > 0).
inline unsigned long valuation(const BigNat& n, unsigned long p) {
  BigNat rest = n;
  unsigned long v = 0;
  while (rest != 0 && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    ++v;
  }
  return v;
}

inline bool fits_u64(const BigNat& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const BigNat& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline BigNat from_u64(std::uint64_t v) {
  BigNat r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

}  // namespace polytot
