#pragma once

#include "polytot/bignat.hpp"
#include "polytot/poly.hpp"

#include <map>

namespace polytot {

// deg f together with m_d(f), the number of distinct monic irreducible
// divisors of degree d. Absent keys mean m_d = 0.
struct Signature {
  unsigned degree = 0;
  std::map<unsigned, unsigned> counts;

  // sum of d * m_d.
  unsigned prime_degree() const;
  bool operator==(const Signature&) const = default;
};

// Factored totient value q^j * prod (q^d - 1)^{m_d}.
struct PhiValue {
  unsigned j = 0;
  std::map<unsigned, unsigned> counts;

  BigNat evaluate(std::uint32_t q) const;
  bool operator==(const PhiValue&) const = default;
};

struct PhiResult {
  PhiValue factored;
  BigNat value;
};

// sigma(g) = prod (q^d - 1)^{k_d}, with sum k_d = 0.
struct SigmaExponents {
  std::map<unsigned, int> exps;

  BigNat evaluate(std::uint32_t q) const;
  int total() const;
};

// Throws std::invalid_argument if the signature is impossible over F_q.
void validate_signature(const Signature& sig, std::uint32_t q);

Signature signature(const Poly& f);
PhiResult phi(const Poly& f);
PhiResult phi_from_signature(const Signature& sig, std::uint32_t q);

// |f| prod (1 - 1/|P|), evaluated directly from the factorization.
BigNat phi_direct(const Poly& f);

BigNat sigma(const Poly& g);
SigmaExponents sigma_exponents(const Poly& g);

}  // namespace polytot
