#include "polytot/collision.hpp"

#include "polytot/factor.hpp"

#include <stdexcept>

namespace polytot {

namespace {

unsigned count_at(const Signature& s, unsigned d) {
  auto it = s.counts.find(d);
  return it == s.counts.end() ? 0 : it->second;
}

bool counts_agree_from(const Signature& a, const Signature& b, unsigned from) {
  auto tail = [from](const Signature& s) {
    std::map<unsigned, unsigned> t;
    for (const auto& [d, m] : s.counts)
      if (d >= from) t.emplace(d, m);
    return t;
  };
  return tail(a) == tail(b);
}

}  // namespace

bool same_phi(const Signature& a, const Signature& b, const Field& field) {
  const long long deg_a = a.degree, deg_b = b.degree;
  switch (field.q()) {
    case 2:
      return counts_agree_from(a, b, 2) && deg_a - count_at(a, 1) == deg_b - count_at(b, 1);
    case 3:
      return counts_agree_from(a, b, 3) && count_at(a, 1) + 3 * count_at(a, 2) == count_at(b, 1) + 3 * count_at(b, 2) &&
             deg_a + count_at(a, 2) == deg_b + count_at(b, 2);
    default:
      return a.degree == b.degree && a.counts == b.counts;
  }
}

std::map<BigNat, std::vector<Poly>> phi_classes(const Field& field, unsigned max_degree) {
  if (max_degree < 1) throw std::invalid_argument("phi_classes: max_degree must be positive");
  std::map<BigNat, std::vector<Poly>> classes;
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicStream stream(field, d);
    Poly f(field);
    while (stream.next(f)) classes[phi(f).value].push_back(f);
  }
  return classes;
}

}  // namespace polytot
