#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace polytot {

// Field elements are integer codes in [0, q). The base-p digits of a code are
// its coordinates on the power basis 1, t, t^2, ... of the modulus root t.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

// The finite field F_q, q = p^s. Immutable; copies share one set of tables.
class Field {
 public:
  // For s > 1 the modulus is the lexicographically smallest monic irreducible
  // of degree s over F_p, comparing coefficients from the constant term up.
  static Field make(std::uint32_t p, std::uint32_t s = 1);

  std::uint32_t p() const { return data_->p; }
  std::uint32_t s() const { return data_->s; }
  std::uint32_t q() const { return data_->q; }
  // Low-degree-first coefficients of the modulus over F_p; empty when s == 1.
  const std::vector<Elem>& modulus() const { return data_->modulus; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return data_->neg[a]; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  // Inverse of the Frobenius a -> a^p.
  Elem pth_root(Elem a) const;

  bool operator==(const Field& other) const {
    return data_ == other.data_ || (p() == other.p() && s() == other.s());
  }

 private:
  struct Data {
    std::uint32_t p = 0, s = 0, q = 0;
    std::vector<Elem> modulus;
    std::vector<Elem> neg;
    // Extension fields only: discrete log / antilog w.r.t. a primitive element.
    std::vector<std::uint32_t> log;
    std::vector<Elem> exp;
  };

  explicit Field(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace polytot
