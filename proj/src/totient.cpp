#include "polytot/totient.hpp"

#include "polytot/factor.hpp"

#include <stdexcept>
#include <string>

namespace polytot {

namespace {

void require_nonconstant(const Poly& f, const char* what) {
  if (f.is_constant()) throw std::invalid_argument(std::string(what) + ": undefined for constant polynomials");
}

BigNat q_pow_minus_one(std::uint32_t q, unsigned d) { return pow_ui(q, d) - 1; }

}  // namespace

unsigned Signature::prime_degree() const {
  unsigned total = 0;
  for (const auto& [d, m] : counts) total += d * m;
  return total;
}

BigNat PhiValue::evaluate(std::uint32_t q) const {
  BigNat v = pow_ui(q, j);
  for (const auto& [d, m] : counts) v *= pow_ui(q_pow_minus_one(q, d), m);
  return v;
}

BigNat SigmaExponents::evaluate(std::uint32_t q) const {
  BigNat num = 1, den = 1;
  for (const auto& [d, k] : exps) {
    if (k > 0) num *= pow_ui(q_pow_minus_one(q, d), static_cast<unsigned>(k));
    if (k < 0) den *= pow_ui(q_pow_minus_one(q, d), static_cast<unsigned>(-k));
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("sigma exponents do not evaluate to an integer");
  return num / den;
}

int SigmaExponents::total() const {
  int t = 0;
  for (const auto& [d, k] : exps) t += k;
  return t;
}

void validate_signature(const Signature& sig, std::uint32_t q) {
  if (sig.degree < 1) throw std::invalid_argument("signature: degree must be positive");
  if (sig.counts.empty()) throw std::invalid_argument("signature: needs at least one irreducible divisor");
  if (sig.prime_degree() > sig.degree) throw std::invalid_argument("signature: sum of d*m_d exceeds the degree");
  for (const auto& [d, m] : sig.counts) {
    if (d < 1 || m < 1) throw std::invalid_argument("signature: entries need d >= 1 and m_d >= 1");
    if (BigNat(m) > pi_q(q, d))
      throw std::invalid_argument("signature: m_" + std::to_string(d) + " exceeds pi_q(" + std::to_string(d) + ")");
  }
}

Signature signature(const Poly& f) {
  require_nonconstant(f, "signature");
  Signature sig;
  sig.degree = static_cast<unsigned>(f.degree());
  for (const auto& part : factor(f).parts) ++sig.counts[static_cast<unsigned>(part.prime.degree())];
  return sig;
}

PhiResult phi_from_signature(const Signature& sig, std::uint32_t q) {
  validate_signature(sig, q);
  PhiResult r;
  r.factored.j = sig.degree - sig.prime_degree();
  r.factored.counts = sig.counts;
  r.value = r.factored.evaluate(q);
  return r;
}

PhiResult phi(const Poly& f) {
  require_nonconstant(f, "phi");
  return phi_from_signature(signature(f), f.field().q());
}

BigNat phi_direct(const Poly& f) {
  require_nonconstant(f, "phi");
  // |f| prod (|P| - 1) / |P|; the product of the |P| divides |f|.
  BigNat num = f.norm(), den = 1;
  for (const auto& part : factor(f).parts) {
    const BigNat norm = part.prime.norm();
    num *= norm - 1;
    den *= norm;
  }
  return num / den;
}

BigNat sigma(const Poly& g) {
  require_nonconstant(g, "sigma");
  BigNat v = 1;
  for (const auto& part : factor(g).parts) {
    const BigNat norm = part.prime.norm();
    v *= (pow_ui(norm, part.exponent + 1) - 1) / (norm - 1);
  }
  return v;
}

SigmaExponents sigma_exponents(const Poly& g) {
  require_nonconstant(g, "sigma_exponents");
  SigmaExponents out;
  for (const auto& part : factor(g).parts) {
    const auto d = static_cast<unsigned>(part.prime.degree());
    out.exps[d * (part.exponent + 1)] += 1;
    out.exps[d] -= 1;
  }
  std::erase_if(out.exps, [](const auto& kv) { return kv.second == 0; });

  const std::uint32_t q = g.field().q();
  for (const auto& [d, k] : out.exps) {
    if (k >= 0) continue;
    if (BigNat(-k) > pi_q(q, d)) throw std::logic_error("sigma exponents: -k_d exceeds pi_q(d)");
    bool covered = false;
    for (const auto& [j, kj] : out.exps)
      if (kj > 0 && j % d == 0) covered = true;
    if (!covered) throw std::logic_error("sigma exponents: negative k_d without a positive multiple");
  }
  if (out.total() != 0) throw std::logic_error("sigma exponents do not sum to zero");
  return out;
}

}  // namespace polytot
