#include "polytot/density.hpp"

#include "polytot/erdos.hpp"
#include "polytot/errors.hpp"
#include "polytot/factor.hpp"
#include "polytot/numtheory.hpp"
#include "polytot/preimage.hpp"
#include "polytot/totient.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace polytot {

namespace {

std::string format_fixed(double v, int precision) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace

std::vector<BigNat> phi_values_up_to(const BigNat& y, const Field& field) {
  if (y < 1) throw std::invalid_argument("phi_values_up_to: y must be positive");
  const std::uint32_t q = field.q();
  std::vector<unsigned> degrees;
  for (unsigned d = 1; pow_ui(q, d) - 1 <= y; ++d) degrees.push_back(d);

  std::set<BigNat> values;
  std::vector<unsigned> support;
  auto finish = [&](const BigNat& product) {
    if (support.empty()) return;
    std::vector<char> composable;
    BigNat v = product;
    for (unsigned j = 0; v <= y; ++j, v *= q) {
      // j must split as sum d j_d over the support.
      composable.push_back(j == 0);
      for (unsigned d : support)
        if (j >= d && composable[j - d]) composable[j] = 1;
      if (composable[j]) values.insert(v);
    }
  };
  auto rec = [&](auto&& self, std::size_t idx, const BigNat& product) -> void {
    if (idx == degrees.size()) {
      finish(product);
      return;
    }
    const unsigned d = degrees[idx];
    const BigNat base = pow_ui(q, d) - 1;
    const BigNat cap = pi_q(q, d);
    self(self, idx + 1, product);
    BigNat p = product;
    support.push_back(d);
    for (unsigned m = 1; BigNat(m) <= cap; ++m) {
      p *= base;
      if (p > y) break;
      self(self, idx + 1, p);
    }
    support.pop_back();
  };
  rec(rec, 0, BigNat(1));
  return {values.begin(), values.end()};
}

std::vector<BigNat> phi_values_bruteforce(const BigNat& y, const Field& field) {
  std::set<BigNat> values;
  const unsigned bound = degree_bound(y, field);
  for (unsigned d = 1; d <= bound; ++d) {
    MonicStream stream(field, d);
    Poly f(field);
    while (stream.next(f)) {
      BigNat v = phi(f).value;
      if (v <= y) values.insert(std::move(v));
    }
  }
  return {values.begin(), values.end()};
}

double density_bound(std::uint32_t q, unsigned k) {
  return 2.0 * q * k * std::pow(std::exp(2.0) / 2, k / 2.0);
}

DensityReport density_report(const BigNat& y, const Field& field) {
  DensityReport r;
  r.y = y;
  r.k = floor_log(y, field.q());
  r.V = BigNat(static_cast<unsigned long>(phi_values_up_to(y, field).size()));
  r.bound = density_bound(field.q(), r.k);
  mpq_class ratio(r.V, y);
  r.ratio = ratio.get_d();
  r.bound_checked = r.k >= 1;
  if (r.bound_checked) {
    r.holds = cmp(r.V, r.bound * (1 - kGuardBand)) <= 0;
    if (!r.holds)
      throw CheckFailure("V(" + to_decimal(y) + ") = " + to_decimal(r.V) + " exceeds the bound " + format_fixed(r.bound, 6));
  }
  return r;
}

std::string density_csv_header() { return "y,k,V,bound,ratio"; }

std::string density_csv_row(const DensityReport& r) {
  return to_decimal(r.y) + ',' + std::to_string(r.k) + ',' + to_decimal(r.V) + ',' + format_fixed(r.bound, 6) + ',' +
         format_fixed(r.ratio, 9);
}

}  // namespace polytot
