#include "polytot/preimage.hpp"

#include "polytot/errors.hpp"
#include "polytot/factor.hpp"
#include "polytot/totient.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace polytot {

namespace {

BigNat base_of(std::uint32_t q, unsigned d) { return pow_ui(q, d) - 1; }

std::map<unsigned, unsigned> counts_from(const std::map<unsigned, unsigned>& counts, unsigned from) {
  std::map<unsigned, unsigned> out;
  for (const auto& [d, m] : counts)
    if (d >= from) out.emplace(d, m);
  return out;
}

unsigned count_at(const std::map<unsigned, unsigned>& counts, unsigned d) {
  auto it = counts.find(d);
  return it == counts.end() ? 0 : it->second;
}

// Whether j is a non-negative combination of the given degrees.
bool composable(unsigned j, const std::vector<unsigned>& degrees) {
  std::vector<char> ok(j + 1, 0);
  ok[0] = 1;
  for (unsigned d : degrees)
    for (unsigned t = d; t <= j; ++t) ok[t] = ok[t] || ok[t - d];
  return ok[j] != 0;
}

}  // namespace

BigNat Decomposition::evaluate(std::uint32_t q) const {
  BigNat v = pow_ui(q, j);
  for (const auto& [d, m] : counts) v *= pow_ui(base_of(q, d), m);
  return v;
}

BigNat Representation::evaluate(std::uint32_t q) const {
  BigNat v = pow_ui(q, j);
  if (merged_i) v *= pow_ui(2, *merged_i);
  for (const auto& [d, m] : counts) v *= pow_ui(base_of(q, d), m);
  return v;
}

std::vector<Decomposition> decompositions(const BigNat& n, const Field& field) {
  if (n < 1) throw std::invalid_argument("decompositions: n must be positive");
  const std::uint32_t q = field.q();
  const auto vp = valuation(n, field.p());
  if (vp % field.s() != 0) return {};
  const auto j = static_cast<unsigned>(vp / field.s());
  const BigNat cofactor = n / pow_ui(q, j);

  std::vector<unsigned> degrees;
  for (unsigned d = 1; base_of(q, d) <= cofactor; ++d) degrees.push_back(d);

  std::vector<Decomposition> out;
  Decomposition current{j, {}};
  // Depth-first from the largest degree down, dividing out q^d - 1 while the
  // cap m_d <= pi_q(d) allows.
  std::function<void(std::size_t, const BigNat&)> rec = [&](std::size_t idx, const BigNat& rest) {
    if (idx == 0) {
      if (rest == 1) out.push_back(current);
      return;
    }
    const unsigned d = degrees[idx - 1];
    const BigNat base = base_of(q, d);
    const BigNat cap = pi_q(q, d);
    std::vector<BigNat> quotients{rest};
    if (base == 1) {
      // q = 2, d = 1: the factor is 1 and m_1 ranges freely up to pi_2(1).
      for (unsigned m = 1; BigNat(m) <= cap; ++m) quotients.push_back(rest);
    } else {
      BigNat r = rest;
      while (BigNat(quotients.size() - 1) < cap && mpz_divisible_p(r.get_mpz_t(), base.get_mpz_t())) {
        r /= base;
        quotients.push_back(r);
      }
    }
    for (std::size_t m = quotients.size(); m-- > 0;) {
      if (m > 0) current.counts[d] = static_cast<unsigned>(m);
      rec(idx - 1, quotients[m]);
      current.counts.erase(d);
    }
  };
  rec(degrees.size(), cofactor);
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    return std::tie(a.j, a.counts) < std::tie(b.j, b.counts);
  });
  return out;
}

bool is_member_decomposition(const Decomposition& dec) {
  if (dec.counts.empty()) return false;
  std::vector<unsigned> support;
  for (const auto& [d, m] : dec.counts) support.push_back(d);
  return composable(dec.j, support);
}

std::vector<Representation> represent(const BigNat& n, const Field& field) {
  const std::uint32_t q = field.q();
  using Key = std::tuple<unsigned, unsigned, std::map<unsigned, unsigned>>;
  std::map<Key, Representation> grouped;
  for (const auto& dec : decompositions(n, field)) {
    if (!is_member_decomposition(dec)) continue;
    Representation rep;
    rep.j = dec.j;
    unsigned i = 0;
    if (q == 3) {
      i = count_at(dec.counts, 1) + 3 * count_at(dec.counts, 2);
      rep.merged_i = i;
      rep.counts = counts_from(dec.counts, 3);
    } else if (q == 2) {
      rep.counts = counts_from(dec.counts, 2);
    } else {
      rep.counts = dec.counts;
    }
    Key key{rep.j, i, rep.counts};
    auto [it, inserted] = grouped.try_emplace(key, std::move(rep));
    it->second.expansions.push_back(dec);
  }
  std::vector<Representation> out;
  for (auto& [key, rep] : grouped) out.push_back(std::move(rep));
  return out;
}

BigNat count_for_decomposition(const Decomposition& dec, const Field& field) {
  if (!is_member_decomposition(dec)) return 0;
  const std::uint32_t q = field.q();
  BigNat choose = 1;
  std::vector<std::pair<unsigned, unsigned>> support;  // (d, m_d), largest d first
  for (auto it = dec.counts.rbegin(); it != dec.counts.rend(); ++it) {
    choose *= binomial(pi_q(q, it->first), it->second);
    support.emplace_back(it->first, it->second);
  }
  // ways[idx][r]: sum over j_d for support[idx..] with sum d j_d = r of prod C_d,
  // where C_d = binom(j_d + m_d - 1, m_d - 1). Degrees outside the support have
  // m_d = 0 and must take j_d = 0 (C_d = 1).
  const unsigned j = dec.j;
  std::vector<BigNat> next(j + 1, 0);
  next[0] = 1;
  for (std::size_t idx = support.size(); idx-- > 0;) {
    const auto [d, m] = support[idx];
    std::vector<BigNat> cur(j + 1, 0);
    for (unsigned r = 0; r <= j; ++r)
      for (unsigned jd = 0; jd * d <= r; ++jd)
        if (next[r - jd * d] != 0) cur[r] += binomial(jd + m - 1, m - 1) * next[r - jd * d];
    next = std::move(cur);
  }
  return choose * next[j];
}

BigNat preimage_count(const BigNat& n, const Field& field) {
  BigNat total = 0;
  for (const auto& rep : represent(n, field))
    for (const auto& dec : rep.expansions) total += count_for_decomposition(dec, field);
  return total;
}

std::vector<BigNat> min_phi_by_degree(const Field& field, unsigned max_degree) {
  const std::uint32_t q = field.q();
  const BigNat Q = q;
  // best[t]: least prod over chosen prime powers of total degree t. Each prime
  // P of degree d with exponent e contributes q^{d(e-1)} (q^d - 1).
  std::vector<std::optional<BigNat>> best(max_degree + 1);
  best[0] = BigNat(1);
  for (unsigned d = 1; d <= max_degree; ++d) {
    const BigNat base = base_of(q, d);
    const BigNat qd = pow_ui(q, d);
    const BigNat cap = pi_q(q, d);
    auto next = best;
    for (unsigned m = 1; BigNat(m) <= cap && m * d <= max_degree; ++m) {
      BigNat factor = pow_ui(base, m);
      for (unsigned extra = 0; (m + extra) * d <= max_degree; ++extra) {
        const unsigned used = (m + extra) * d;
        for (unsigned t = 0; t + used <= max_degree; ++t) {
          if (!best[t]) continue;
          BigNat candidate = *best[t] * factor;
          if (!next[t + used] || candidate < *next[t + used]) next[t + used] = candidate;
        }
        factor *= qd;
      }
    }
    best = std::move(next);
  }
  std::vector<BigNat> out(max_degree + 1, 0);
  for (unsigned t = 1; t <= max_degree; ++t) out[t] = *best[t];
  return out;
}

unsigned degree_bound(const BigNat& n, const Field& field) {
  if (n < 1) throw std::invalid_argument("degree_bound: n must be positive");
  unsigned horizon = 16;
  for (;;) {
    const auto table = min_phi_by_degree(field, horizon);
    unsigned last_ok = 0, misses = 0;
    for (unsigned D = 1; D <= horizon; ++D) {
      if (table[D] <= n) {
        last_ok = D;
        misses = 0;
      } else if (++misses == 3) {
        return last_ok;
      }
    }
    horizon *= 2;
  }
}

std::vector<Poly> preimage_list(const BigNat& n, const Field& field) {
  std::vector<Poly> out;
  const unsigned bound = degree_bound(n, field);
  for (unsigned d = 1; d <= bound; ++d) {
    MonicStream stream(field, d);
    Poly f(field);
    while (stream.next(f))
      if (phi(f).value == n) out.push_back(f);
  }
  return out;
}

std::map<BigNat, std::uint64_t> phi_census(const Field& field, unsigned max_degree) {
  std::map<BigNat, std::uint64_t> census;
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicStream stream(field, d);
    Poly f(field);
    while (stream.next(f)) ++census[phi(f).value];
  }
  return census;
}

const char* to_string(CountClass c) {
  switch (c) {
    case CountClass::empty: return "empty";
    case CountClass::unique: return "unique";
    case CountClass::exactly_q: return "exactly-q";
    case CountClass::at_least_binom: return "at-least-binom";
    case CountClass::unclassified: return "unclassified";
    case CountClass::exactly_three: return "exactly-3";
    case CountClass::above_three: return "above-3";
  }
  return "?";
}

bool uniqueness_condition(const Representation& rep, const Field& field) {
  const std::uint32_t q = field.q();
  if (q == 2 || rep.j != 0) return false;
  for (const auto& [d, m] : rep.counts)
    if (BigNat(m) != pi_q(q, d)) return false;
  if (q == 3) {
    // m_1 = m_2 with each in {0, pi_3(1) = pi_3(2) = 3}: i = 0 or i = 12;
    // and k >= 2 rules out the bare i = 0 case with nothing above it.
    if (*rep.merged_i == 12) return true;
    return *rep.merged_i == 0 && !rep.counts.empty();
  }
  return !rep.counts.empty();
}

CountProfile count_profile(const BigNat& n, const Field& field, bool with_oracle) {
  const std::uint32_t q = field.q();
  CountProfile profile;
  profile.n = n;
  const auto reps = represent(n, field);
  for (const auto& rep : reps)
    for (const auto& dec : rep.expansions) profile.count += count_for_decomposition(dec, field);
  const BigNat& count = profile.count;
  const std::string where = " at q=" + std::to_string(q) + ", n=" + to_decimal(n);

  if (q == 2) {
    if (count == 0) profile.cls = CountClass::empty;
    else if (count == 3) profile.cls = CountClass::exactly_three;
    else if (count > 3) profile.cls = CountClass::above_three;
    else throw CheckFailure("count " + to_decimal(count) + " below the q=2 floor of 3" + where);
    if (count == 3 && n != 1) throw CheckFailure("count 3 away from n = 1" + where);
  } else {
    const BigNat pair_count = binomial(q, 2);
    if (count == 0) profile.cls = CountClass::empty;
    else if (count == 1) profile.cls = CountClass::unique;
    else if (count == q) profile.cls = CountClass::exactly_q;
    else if (count >= pair_count) profile.cls = CountClass::at_least_binom;
    else if (q == 3) profile.cls = CountClass::unclassified;
    else throw CheckFailure("count " + to_decimal(count) + " falls in a forbidden gap" + where);

    for (const auto& rep : reps) profile.uniqueness_condition = profile.uniqueness_condition || uniqueness_condition(rep, field);
    if ((count == 1) != profile.uniqueness_condition)
      throw CheckFailure("uniqueness condition disagrees with count " + to_decimal(count) + where);
  }

  if (with_oracle) {
    profile.oracle_count = BigNat(static_cast<unsigned long>(preimage_list(n, field).size()));
    if (*profile.oracle_count != count)
      throw CheckFailure("formula count " + to_decimal(count) + " but oracle count " + to_decimal(*profile.oracle_count) +
                         " (class " + to_string(profile.cls) + ")" + where);
  }
  return profile;
}

SierpinskiWitness sierpinski_witness(const Field& field, SierpinskiGoal goal, unsigned l) {
  const std::uint32_t q = field.q();
  switch (goal) {
    case SierpinskiGoal::exact_count:
      if (q != 2) throw std::invalid_argument("sierpinski: the exact-count construction needs q = 2");
      if (l < 3) throw std::invalid_argument("sierpinski: the exact-count construction needs l >= 3");
      return {pow_ui(2, l - 3), BigNat(l)};
    case SierpinskiGoal::q_power: {
      if (q == 2) throw std::invalid_argument("sierpinski: the q^l construction needs q != 2");
      if (l < 1) throw std::invalid_argument("sierpinski: the q^l construction needs l >= 1");
      BigNat n = pow_ui(q, l);
      for (unsigned d = 1; d <= l; ++d) n *= pow_ui(base_of(q, d), to_u64(pi_q(q, d)));
      return {n, pow_ui(q, l)};
    }
    case SierpinskiGoal::binomial_multiple:
      if (q == 2) throw std::invalid_argument("sierpinski: the binomial construction needs q != 2");
      return {pow_ui(q, l) * (q - 1) * (q - 1), binomial(q, 2) * (l + 1)};
  }
  throw std::invalid_argument("sierpinski: unknown goal");
}

}  // namespace polytot
