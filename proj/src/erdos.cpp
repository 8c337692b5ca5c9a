#include "polytot/erdos.hpp"

#include "polytot/errors.hpp"
#include "polytot/factor.hpp"
#include "polytot/preimage.hpp"
#include "polytot/totient.hpp"

#include <array>
#include <stdexcept>

namespace polytot {

namespace {

BigNat mersenne(std::uint32_t q, unsigned d) { return pow_ui(q, d) - 1; }

bool two_or_three_divides(unsigned d) { return d % 2 == 0 || d % 3 == 0; }

constexpr std::array kBinaryFamilies = {
    ErdosFamily::q2_mersenne,   ErdosFamily::q2_three_single,   ErdosFamily::q2_twentyone_single,
    ErdosFamily::q2_pair,       ErdosFamily::q2_twentyone_pair, ErdosFamily::q2_three_pair,
    ErdosFamily::q2_three_triple,
};

struct FamilyShape {
  std::vector<unsigned> min_params;
};

FamilyShape shape_of(ErdosFamily f) {
  switch (f) {
    case ErdosFamily::q3_pair: return {{1, 1}};
    case ErdosFamily::q2_mersenne: return {{2}};
    case ErdosFamily::q2_three_single: return {{3}};
    case ErdosFamily::q2_twentyone_single: return {{3}};
    case ErdosFamily::q2_pair: return {{2, 3}};
    case ErdosFamily::q2_twentyone_pair: return {{3, 4}};
    case ErdosFamily::q2_three_pair: return {{4, 4}};
    case ErdosFamily::q2_three_triple: return {{4, 4, 4}};
  }
  throw std::invalid_argument("unknown family");
}

bool side_condition(ErdosFamily f, const std::vector<unsigned>& params) {
  switch (f) {
    case ErdosFamily::q2_three_single:
    case ErdosFamily::q2_three_pair:
    case ErdosFamily::q2_three_triple:
      return two_or_three_divides(params[0]);
    default:
      return true;
  }
}

// Calls visit(params, value) for every admissible instantiation with all
// parameters <= max_param and value <= limit; stops early if visit returns true.
template <typename Visit>
bool for_each_instance(ErdosFamily family, unsigned max_param, const BigNat& limit, Visit&& visit) {
  const auto shape = shape_of(family);
  std::vector<unsigned> params(shape.min_params.size());
  auto rec = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == params.size()) {
      if (!side_condition(family, params)) return false;
      const BigNat v = family_value(family, params);
      return v <= limit && visit(params, v);
    }
    for (unsigned d = shape.min_params[idx]; d <= max_param; ++d) {
      params[idx] = d;
      if (self(self, idx + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

const char* to_string(ErdosFamily f) {
  switch (f) {
    case ErdosFamily::q3_pair: return "(3^d1-1)(3^d2-1)";
    case ErdosFamily::q2_mersenne: return "2^d-1";
    case ErdosFamily::q2_three_single: return "(2^2-1)(2^d-1)";
    case ErdosFamily::q2_twentyone_single: return "(2^2-1)(2^3-1)(2^d-1)";
    case ErdosFamily::q2_pair: return "(2^d1-1)(2^d2-1)";
    case ErdosFamily::q2_twentyone_pair: return "(2^2-1)(2^3-1)(2^d1-1)(2^d2-1)";
    case ErdosFamily::q2_three_pair: return "(2^2-1)(2^d1-1)(2^d2-1)";
    case ErdosFamily::q2_three_triple: return "(2^2-1)(2^d1-1)(2^d2-1)(2^d3-1)";
  }
  return "?";
}

BigNat family_value(ErdosFamily family, const std::vector<unsigned>& params) {
  const std::uint32_t q = family == ErdosFamily::q3_pair ? 3 : 2;
  BigNat v = 1;
  for (unsigned d : params) v *= mersenne(q, d);
  switch (family) {
    case ErdosFamily::q2_three_single:
    case ErdosFamily::q2_three_pair:
    case ErdosFamily::q2_three_triple:
      v *= 3;
      break;
    case ErdosFamily::q2_twentyone_single:
    case ErdosFamily::q2_twentyone_pair:
      v *= 21;
      break;
    default:
      break;
  }
  return v;
}

unsigned floor_log(const BigNat& y, std::uint32_t q) {
  if (y < 1) throw std::invalid_argument("floor_log: y must be positive");
  unsigned k = 0;
  BigNat power = q;
  while (power <= y) {
    power *= q;
    ++k;
  }
  return k;
}

IntersectionVerdict intersection_member(const BigNat& n, const Field& field) {
  if (n < 1) throw std::invalid_argument("intersection_member: n must be positive");
  IntersectionVerdict verdict;
  const std::uint32_t q = field.q();
  if (q != 2 && q != 3) return verdict;
  const unsigned max_param = floor_log(BigNat(n + 1), q) + 1;
  auto record = [&](ErdosFamily family) {
    return [&verdict, &n, family](const std::vector<unsigned>& params, const BigNat& v) {
      if (v != n) return false;
      verdict.member = true;
      verdict.family = family;
      verdict.params = params;
      return true;
    };
  };
  if (q == 3) {
    for_each_instance(ErdosFamily::q3_pair, max_param, n, record(ErdosFamily::q3_pair));
    return verdict;
  }
  for (auto family : kBinaryFamilies)
    if (for_each_instance(family, max_param, n, record(family))) break;
  return verdict;
}

std::vector<BigNat> intersection_up_to(const BigNat& y, const Field& field) {
  if (y < 1) throw std::invalid_argument("intersection_up_to: y must be positive");
  const std::uint32_t q = field.q();
  std::set<BigNat> values;
  if (q == 2 || q == 3) {
    const unsigned max_param = floor_log(BigNat(y + 1), q) + 1;
    auto collect = [&values](const std::vector<unsigned>&, const BigNat& v) {
      values.insert(v);
      return false;
    };
    if (q == 3) {
      for_each_instance(ErdosFamily::q3_pair, max_param, y, collect);
    } else {
      for (auto family : kBinaryFamilies) for_each_instance(family, max_param, y, collect);
    }
  }
  return {values.begin(), values.end()};
}

std::optional<std::pair<Poly, Poly>> erdos_witness(const BigNat& n, const Field& field) {
  if (!intersection_member(n, field).member) return std::nullopt;
  const auto preimages = preimage_list(n, field);
  if (preimages.empty()) throw CheckFailure("intersection member " + to_decimal(n) + " has no Phi preimage");
  const unsigned max_degree = floor_log(n, field.q());
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicStream stream(field, d);
    Poly g(field);
    while (stream.next(g))
      if (sigma(g) == n) return std::make_pair(preimages.front(), g);
  }
  throw CheckFailure("intersection member " + to_decimal(n) + " has no sigma preimage");
}

std::set<BigNat> sigma_values_bruteforce(const BigNat& y, const Field& field) {
  std::set<BigNat> values;
  const unsigned max_degree = floor_log(y, field.q());
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicStream stream(field, d);
    Poly g(field);
    while (stream.next(g)) {
      const BigNat s = sigma(g);
      if (s < g.norm()) throw CheckFailure("sigma(g) < |g| for g = " + to_string(g));
      if (s <= y) values.insert(s);
    }
  }
  return values;
}

}  // namespace polytot
