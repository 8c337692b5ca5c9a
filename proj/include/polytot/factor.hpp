#pragma once

#include "polytot/bignat.hpp"
#include "polytot/poly.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace polytot {

struct FactorPart {
  Poly prime;  // monic irreducible
  unsigned exponent = 1;
};

// unit * prod prime^exponent, parts sorted canonically and pairwise distinct.
struct Factorization {
  Elem unit = 1;
  std::vector<FactorPart> parts;

  Poly expand(const Field& field) const;
};

bool is_irreducible(const Poly& f);

// Square-free decomposition, distinct-degree, then equal-degree splitting.
Factorization factor(const Poly& f);

// Monic polynomials of one degree, in canonical order. A stream covers a
// half-open index range so enumeration can be split into blocks.
class MonicStream {
 public:
  MonicStream(Field field, unsigned degree, std::uint64_t first = 0, std::uint64_t last = UINT64_MAX);

  // q^degree.
  std::uint64_t size() const { return total_; }
  bool next(Poly& out);

 private:
  Field field_;
  unsigned degree_;
  std::uint64_t total_;
  std::uint64_t cursor_;
  std::uint64_t last_;
};

// The index-th monic of the given degree in canonical order.
Poly monic_at(const Field& field, unsigned degree, std::uint64_t index);

std::vector<Poly> enumerate_monic(const Field& field, unsigned degree);
std::vector<Poly> enumerate_irreducibles(const Field& field, unsigned degree);

// Number of monic irreducibles of degree d, from the Moebius sum.
BigNat pi_q(std::uint32_t q, unsigned d);
inline BigNat pi_q(const Field& field, unsigned d) { return pi_q(field.q(), d); }

// Memoized pi_q values for one field order. Not synchronized.
class PiTable {
 public:
  explicit PiTable(std::uint32_t q) : q_(q) {}
  const BigNat& at(unsigned d);
  std::uint32_t q() const { return q_; }

 private:
  std::uint32_t q_;
  std::map<unsigned, BigNat> cache_;
};

// p | pi_q(d) or 4 | pi_q(d). Rejects q = 2.
bool pi_divisibility_check(const Field& field, unsigned d);

}  // namespace polytot
