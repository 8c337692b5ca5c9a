#include "polytot/factor.hpp"

#include "polytot/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace polytot {

namespace {

// x^(q^k) mod f for k = 0..count, by successive q-th powers.
std::vector<Poly> frobenius_powers(const Poly& f, unsigned count) {
  const Field& F = f.field();
  const BigNat q = F.q();
  std::vector<Poly> out{Poly::x(F) % f};
  for (unsigned i = 0; i < count; ++i) out.push_back(powmod(out.back(), q, f));
  return out;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Deterministic pseudorandom coefficients for equal-degree splitting.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : state_(seed | 1) {}
  std::uint32_t next(std::uint32_t bound) {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>((state_ >> 33) % bound);
  }

 private:
  std::uint64_t state_;
};

std::uint64_t seed_for(const Poly& f) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ULL;
  };
  mix(f.field().q());
  mix(static_cast<std::uint64_t>(f.degree()));
  for (auto c : f.coeffs()) mix(c);
  return h;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const unsigned p = F.p();
  std::vector<Elem> out(f.coeffs().size() / p + 1, 0);
  for (std::size_t k = 0; k < f.coeffs().size(); k += p) out[k / p] = F.pth_root(f.coeffs()[k]);
  return Poly(F, std::move(out));
}

// Square-free decomposition of a monic f: (square-free factor, multiplicity).
void squarefree_parts(const Poly& f, unsigned scale, std::vector<std::pair<Poly, unsigned>>& out) {
  const Field& F = f.field();
  if (f.degree() < 1) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) squarefree_parts(pth_root(c.monic()).monic(), scale * F.p(), out);
}

// Distinct-degree factorization of a monic square-free f.
std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
  const Field& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  const BigNat q = F.q();
  Poly h = Poly::x(F) % f;
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(f.degree()); ++d) {
    h = powmod(h, q, f);
    Poly g = gcd(f, h - Poly::x(F));
    if (!g.is_one()) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
  return out;
}

// Splitting polynomial for equal-degree factorization.
Poly split_candidate(const Poly& a, const Poly& f, unsigned d) {
  const Field& F = f.field();
  if (F.p() == 2) {
    // Absolute trace a + a^2 + ... + a^(2^(s d - 1)) mod f.
    Poly t = a, acc = a;
    for (unsigned i = 1; i < F.s() * d; ++i) {
      t = (t * t) % f;
      acc += t;
    }
    return acc;
  }
  BigNat e = (pow_ui(F.q(), d) - 1) / 2;
  return powmod(a, e, f) - Poly::constant(F, 1);
}

void equal_degree(const Poly& f, unsigned d, Lcg& rng, std::vector<Poly>& out) {
  const Field& F = f.field();
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(f.degree()));
    for (auto& c : coeffs) c = rng.next(F.q());
    Poly a(F, std::move(coeffs));
    if (a.is_constant()) continue;
    Poly g = gcd(a, f);
    if (g.is_one()) g = gcd(split_candidate(a, f, d), f);
    if (!g.is_one() && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::expand(const Field& field) const {
  Poly r = Poly::constant(field, unit);
  for (const auto& part : parts) r *= pow(part.prime, part.exponent);
  return r;
}

bool is_irreducible(const Poly& f) {
  if (f.is_constant()) throw std::invalid_argument("is_irreducible: constant polynomial");
  const Poly g = f.monic();
  const Field& F = g.field();
  const unsigned d = static_cast<unsigned>(g.degree());
  const Poly x = Poly::x(F) % g;
  const auto powers = frobenius_powers(g, d);
  if (powers[d] != x) return false;
  for (unsigned r : prime_divisors(d))
    if (!gcd(g, powers[d / r] - x).is_one()) return false;
  return true;
}

Factorization factor(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("factor: zero polynomial");
  Factorization result;
  result.unit = f.lead();
  const Poly g = f.monic();
  std::map<Poly, unsigned> primes;

  std::vector<std::pair<Poly, unsigned>> sqfree;
  squarefree_parts(g, 1, sqfree);
  Lcg rng(seed_for(g));
  for (const auto& [part, mult] : sqfree) {
    for (const auto& [block, d] : distinct_degree(part)) {
      std::vector<Poly> irreducibles;
      equal_degree(block, d, rng, irreducibles);
      for (auto& P : irreducibles) primes[P.monic()] += mult;
    }
  }
  for (auto& [P, e] : primes) result.parts.push_back({P, e});
  return result;
}

MonicStream::MonicStream(Field field, unsigned degree, std::uint64_t first, std::uint64_t last)
    : field_(std::move(field)), degree_(degree), cursor_(first), last_(last) {
  const BigNat total = pow_ui(field_.q(), degree_);
  if (!fits_u64(total)) throw std::invalid_argument("MonicStream: q^degree too large to enumerate");
  total_ = to_u64(total);
  last_ = std::min(last_, total_);
}

bool MonicStream::next(Poly& out) {
  if (cursor_ >= last_) return false;
  out = monic_at(field_, degree_, cursor_++);
  return true;
}

Poly monic_at(const Field& field, unsigned degree, std::uint64_t index) {
  // The constant term is the most significant base-q digit of the index.
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = 1;
  for (unsigned k = degree; k-- > 0;) {
    coeffs[k] = static_cast<Elem>(index % field.q());
    index /= field.q();
  }
  return Poly(field, std::move(coeffs));
}

std::vector<Poly> enumerate_monic(const Field& field, unsigned degree) {
  std::vector<Poly> out;
  MonicStream stream(field, degree);
  out.reserve(stream.size());
  Poly f(field);
  while (stream.next(f)) out.push_back(f);
  return out;
}

std::vector<Poly> enumerate_irreducibles(const Field& field, unsigned degree) {
  if (degree < 1) throw std::invalid_argument("enumerate_irreducibles: degree must be positive");
  std::vector<Poly> out;
  MonicStream stream(field, degree);
  Poly f(field);
  while (stream.next(f))
    if (is_irreducible(f)) out.push_back(f);
  return out;
}

BigNat pi_q(std::uint32_t q, unsigned d) {
  if (d < 1) throw std::invalid_argument("pi_q: degree must be positive");
  BigNat sum = 0;
  for (unsigned j = 1; j <= d; ++j) {
    if (d % j) continue;
    const int mu = mobius(j);
    if (mu > 0) sum += pow_ui(q, d / j);
    if (mu < 0) sum -= pow_ui(q, d / j);
  }
  return sum / d;
}

const BigNat& PiTable::at(unsigned d) {
  auto it = cache_.find(d);
  if (it == cache_.end()) it = cache_.emplace(d, pi_q(q_, d)).first;
  return it->second;
}

bool pi_divisibility_check(const Field& field, unsigned d) {
  if (field.q() == 2) throw std::invalid_argument("pi_divisibility_check: q must not be 2");
  const BigNat v = pi_q(field, d);
  return mpz_divisible_ui_p(v.get_mpz_t(), field.p()) || mpz_divisible_ui_p(v.get_mpz_t(), 4);
}

}  // namespace polytot
