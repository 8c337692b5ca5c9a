#pragma once

#include "polytot/bignat.hpp"
#include "polytot/field.hpp"

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polytot {

// Degree reported for the zero polynomial.
inline constexpr int kZeroDegree = -1;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A univariate polynomial over a finite field, stored low-degree-first with no
// trailing zero coefficients.
class Poly {
 public:
  explicit Poly(Field field) : field_(std::move(field)) {}
  Poly(Field field, std::vector<Elem> coeffs);

  static Poly constant(const Field& field, Elem c);
  static Poly monomial(const Field& field, Elem c, unsigned k);
  static Poly x(const Field& field) { return monomial(field, 1, 1); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

  // |f| = q^deg f.
  BigNat norm() const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Elem c) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }

  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
  // Canonical order: by degree, then coefficient codes from the constant term up.
  std::strong_ordering operator<=>(const Poly& o) const;

 private:
  void trim();

  Field field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, const BigNat& exp, const Poly& modulus);
Poly pow(const Poly& base, unsigned exp);

std::string to_string(const Poly& f);
Poly parse_poly(std::string_view text, const Field& field);

}  // namespace polytot
