#include "polytot/field.hpp"

#include "polytot/factor.hpp"
#include "polytot/numtheory.hpp"
#include "polytot/poly.hpp"

#include <stdexcept>
#include <string>

namespace polytot {

namespace {

std::vector<Elem> digits_of(Elem code, std::uint32_t p, std::uint32_t s) {
  std::vector<Elem> d(s);
  for (auto& v : d) {
    v = code % p;
    code /= p;
  }
  return d;
}

Elem code_of(const std::vector<Elem>& digits, std::uint32_t p) {
  Elem code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p + digits[i];
  return code;
}

// Lexicographically smallest monic irreducible of degree s over F_p, with the
// constant term compared first.
std::vector<Elem> smallest_irreducible(const Field& prime_field, std::uint32_t s) {
  const std::uint32_t p = prime_field.p();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // Most significant base-p digit of idx is the constant term.
    std::vector<Elem> coeffs(s + 1, 0);
    coeffs[s] = 1;
    std::uint64_t rest = idx;
    for (std::uint32_t k = s; k-- > 0;) {
      coeffs[k] = static_cast<Elem>(rest % p);
      rest /= p;
    }
    Poly f(prime_field, coeffs);
    if (is_irreducible(f)) return coeffs;
  }
  throw std::logic_error("no irreducible polynomial found");
}

// Product of two extension-field codes via polynomial arithmetic mod the modulus.
Elem slow_mul(Elem a, Elem b, const Field& prime_field, const Poly& modulus, std::uint32_t s) {
  const std::uint32_t p = prime_field.p();
  Poly pa(prime_field, digits_of(a, p, s)), pb(prime_field, digits_of(b, p, s));
  Poly r = (pa * pb) % modulus;
  std::vector<Elem> digits(s, 0);
  for (std::uint32_t i = 0; i < s; ++i) digits[i] = r.coeff(i);
  return code_of(digits, p);
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw std::invalid_argument("field: s must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field: q = p^s exceeds 2^16");
  }

  auto data = std::make_shared<Data>();
  data->p = p;
  data->s = s;
  data->q = static_cast<std::uint32_t>(q);
  data->neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    auto d = digits_of(a, p, s);
    for (auto& v : d) v = (p - v) % p;
    data->neg[a] = code_of(d, p);
  }
  if (s == 1) return Field(std::move(data));

  const Field prime_field = make(p, 1);
  data->modulus = smallest_irreducible(prime_field, s);
  const Poly modulus(prime_field, data->modulus);

  // Find a primitive element and fill the log tables.
  const std::uint64_t order = q - 1;
  std::vector<std::uint64_t> cofactors;
  if (order > 1)
    for (const auto& [r, e] : factor_int(from_u64(order)).factors) cofactors.push_back(order / to_u64(r));
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem result = 1, base = a;
    while (e) {
      if (e & 1) result = slow_mul(result, base, prime_field, modulus, s);
      base = slow_mul(base, base, prime_field, modulus, s);
      e >>= 1;
    }
    return result;
  };
  Elem generator = 0;
  for (Elem g = 2; g < q && generator == 0; ++g) {
    bool primitive = true;
    for (auto c : cofactors)
      if (slow_pow(g, c) == 1) primitive = false;
    if (primitive) generator = g;
  }
  if (generator == 0) throw std::logic_error("field: no primitive element");
  data->exp.resize(order);
  data->log.assign(q, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    data->exp[i] = cur;
    data->log[cur] = static_cast<std::uint32_t>(i);
    cur = slow_mul(cur, generator, prime_field, modulus, s);
  }
  return Field(std::move(data));
}

Elem Field::add(Elem a, Elem b) const {
  const auto& d = *data_;
  if (d.s == 1) {
    const Elem r = a + b;
    return r >= d.p ? r - d.p : r;
  }
  if (d.p == 2) return a ^ b;
  Elem out = 0, weight = 1;
  for (std::uint32_t i = 0; i < d.s; ++i) {
    out += ((a % d.p + b % d.p) % d.p) * weight;
    a /= d.p;
    b /= d.p;
    weight *= d.p;
  }
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  const auto& d = *data_;
  if (d.s == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % d.p);
  if (a == 0 || b == 0) return 0;
  return d.exp[(static_cast<std::uint64_t>(d.log[a]) + d.log[b]) % (d.q - 1)];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("field: inverse of zero");
  const auto& d = *data_;
  if (d.s == 1) return pow(a, d.p - 2);
  return d.exp[(d.q - 1 - d.log[a]) % (d.q - 1)];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem result = 1;
  while (e) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::pth_root(Elem a) const {
  // a^(p^(s-1)) inverts the Frobenius on F_{p^s}.
  std::uint64_t e = 1;
  for (std::uint32_t i = 1; i < s(); ++i) e *= p();
  return pow(a, e);
}

}  // namespace polytot
