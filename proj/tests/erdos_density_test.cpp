#include "polytot/density.hpp"
#include "polytot/erdos.hpp"
#include "polytot/totient.hpp"

#include "doctest.h"

#include <set>

using namespace polytot;

namespace {

Poly P(const Field& f, const char* text) { return parse_poly(text, f); }

std::vector<BigNat> nums(std::initializer_list<unsigned long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("intersection membership") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f5 = Field::make(5, 1);
  CHECK_FALSE(intersection_member(24, f5).member);

  const auto v16 = intersection_member(16, f3);
  CHECK(v16.member);
  CHECK(v16.family == ErdosFamily::q3_pair);
  CHECK(v16.params == std::vector<unsigned>{1, 2});

  const auto v3 = intersection_member(3, f2);
  CHECK(v3.member);
  CHECK(v3.family == ErdosFamily::q2_mersenne);
  CHECK(v3.params == std::vector<unsigned>{2});

  CHECK_FALSE(intersection_member(5, f2).member);
  CHECK(family_value(ErdosFamily::q2_three_triple, {4, 4, 5}) == 3 * 15 * 15 * 31);
}

TEST_CASE("intersection listing") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f5 = Field::make(5, 1);
  CHECK(intersection_up_to(10000, f5).empty());
  CHECK(intersection_up_to(100, f3) == nums({4, 16, 52, 64}));
  const auto small2 = intersection_up_to(10, f2);
  CHECK(std::find(small2.begin(), small2.end(), BigNat(3)) != small2.end());
  CHECK(std::find(small2.begin(), small2.end(), BigNat(7)) != small2.end());
}

TEST_CASE("intersection listing matches double enumeration") {
  for (auto [q, y] : std::vector<std::pair<std::uint32_t, unsigned long>>{{2, 400}, {3, 400}, {5, 2000}}) {
    const Field F = Field::make(q, 1);
    const auto phis = phi_values_bruteforce(BigNat(y), F);
    const auto sigmas = sigma_values_bruteforce(BigNat(y), F);
    std::vector<BigNat> both;
    for (const auto& v : phis)
      if (sigmas.count(v)) both.push_back(v);
    INFO("q=" << q);
    CHECK(both == intersection_up_to(BigNat(y), F));
  }
}

TEST_CASE("erdos witnesses") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f5 = Field::make(5, 1);
  const auto w2 = erdos_witness(3, f2);
  REQUIRE(w2);
  CHECK(w2->first == P(f2, "x^2+x+1"));
  CHECK(w2->second == P(f2, "x"));

  const auto w3 = erdos_witness(4, f3);
  REQUIRE(w3);
  CHECK(w3->first == P(f3, "x^2+x"));
  CHECK(w3->second == P(f3, "x"));
  CHECK(phi(w3->first).value == 4);
  CHECK(sigma(w3->second) == 4);

  CHECK_FALSE(erdos_witness(24, f5));
  CHECK_FALSE(erdos_witness(4, f5));
}

TEST_CASE("floor_log") {
  CHECK(floor_log(1, 2) == 0);
  CHECK(floor_log(7, 2) == 2);
  CHECK(floor_log(8, 2) == 3);
  CHECK(floor_log(BigNat(100000), 10) == 5);
  CHECK(floor_log(BigNat(99999), 10) == 4);
}

TEST_CASE("phi values up to y") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  CHECK(phi_values_up_to(10, f2) == nums({1, 2, 3, 4, 6, 7, 8}));
  CHECK(phi_values_up_to(2, f3) == nums({2}));
  CHECK(phi_values_up_to(1, f2) == nums({1}));
  CHECK(phi_values_up_to(1, f3).empty());

  for (std::uint32_t q : {2u, 3u})
    for (unsigned long y : {1ul, 7ul, 50ul, 333ul, 1000ul}) {
      const Field F = Field::make(q, 1);
      INFO("q=" << q << " y=" << y);
      CHECK(phi_values_up_to(BigNat(y), F) == phi_values_bruteforce(BigNat(y), F));
    }
}

TEST_CASE("density reports") {
  const Field f2 = Field::make(2, 1);
  const auto r = density_report(10, f2);
  CHECK(r.V == 7);
  CHECK(r.k == 3);
  CHECK(r.bound == doctest::Approx(85.2).epsilon(0.001));
  CHECK(r.bound_checked);
  CHECK(r.holds);

  const auto edge = density_report(1, f2);
  CHECK(edge.V == 1);
  CHECK(edge.k == 0);
  CHECK_FALSE(edge.bound_checked);

  const auto r3 = density_report(pow_ui(3, 6), Field::make(3, 1));
  CHECK(r3.holds);
  CHECK(r3.k == 6);

  CHECK(density_csv_header() == "y,k,V,bound,ratio");
  CHECK(density_csv_row(r).rfind("10,3,7,85.", 0) == 0);
}

TEST_CASE("density ratio decays along powers of two") {
  const Field f2 = Field::make(2, 1);
  mpq_class prev = 2;
  for (unsigned k = 0; k <= 16; ++k) {
    const BigNat y = pow_ui(2, k);
    const mpq_class ratio(BigNat(static_cast<unsigned long>(phi_values_up_to(y, f2).size())), y);
    INFO("k=" << k);
    CHECK(ratio <= prev);
    prev = ratio;
  }
}

TEST_CASE("density bound holds on powers of q") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const Field F = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
    for (BigNat y = q; y <= 100000; y *= q) CHECK_NOTHROW(density_report(y, F));
  }
}
