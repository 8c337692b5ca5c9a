#include "polytot/factor.hpp"
#include "polytot/field.hpp"
#include "polytot/poly.hpp"

#include "doctest.h"

using namespace polytot;

namespace {

Poly P(const Field& f, const char* text) { return parse_poly(text, f); }

// Irreducible iff no monic divisor of degree 1..deg/2, by exhaustive trial division.
bool irreducible_by_trial_division(const Poly& f) {
  const unsigned n = static_cast<unsigned>(f.degree());
  for (unsigned d = 1; 2 * d <= n; ++d)
    for (const auto& g : enumerate_monic(f.field(), d))
      if ((f % g).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("field construction") {
  const Field f2 = Field::make(2, 1);
  CHECK(f2.q() == 2);
  CHECK(f2.modulus().empty());
  const Field f4 = Field::make(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == std::vector<Elem>{1, 1, 1});  // t^2 + t + 1
  // Over F_2, t^3 + t^2 + 1 precedes t^3 + t + 1 comparing the constant term first.
  CHECK(Field::make(2, 3).modulus() == std::vector<Elem>{1, 0, 1, 1});
  CHECK(Field::make(3, 2).modulus() == std::vector<Elem>{1, 0, 1});  // t^2 + 1
  CHECK(Field::make(3, 1).q() == 3);
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 17), std::invalid_argument);
}

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
    const Field F = Field::make(p, s);
    const Elem q = F.q();
    INFO("q=" << q);
    for (Elem a = 0; a < q; ++a) {
      REQUIRE(F.add(a, F.neg(a)) == 0);
      REQUIRE(F.pow(a, q) == a);
      REQUIRE(F.pow(F.pth_root(a), p) == a);
      if (a) REQUIRE(F.mul(a, F.inv(a)) == 1);
      for (Elem b = 0; b < q; ++b) {
        REQUIRE(F.add(a, b) == F.add(b, a));
        REQUIRE(F.mul(a, b) == F.mul(b, a));
        for (Elem c = 0; c < q; c += (q > 9 ? 3 : 1))
          REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const Field f2 = Field::make(2, 1);
  CHECK(gcd(P(f2, "x^2+x"), P(f2, "x")) == P(f2, "x"));
  CHECK(P(f2, "x+1") * P(f2, "x+1") == P(f2, "x^2+1"));
  const auto qr = divmod(P(f2, "x^3"), P(f2, "x^2+x+1"));
  CHECK(qr.quotient == P(f2, "x+1"));
  CHECK(qr.remainder == P(f2, "1"));
  CHECK_THROWS_AS(divmod(P(f2, "x"), Poly(f2)), std::domain_error);

  const Field f3 = Field::make(3, 1);
  CHECK(gcd(P(f3, "2*x^2+2"), P(f3, "x^2+2*x+1")).is_one());
  CHECK(powmod(P(f3, "x"), 9, P(f3, "x^2+1")) == P(f3, "x") % P(f3, "x^2+1") * P(f3, "x^8") % P(f3, "x^2+1"));
  CHECK(P(f3, "x^2").derivative() == P(f3, "2*x"));
  CHECK(P(f3, "x^3+x").derivative() == P(f3, "1"));

  SUBCASE("division identity") {
    const Field f4 = Field::make(2, 2);
    for (const auto& a : enumerate_monic(f4, 4))
      for (const auto& b : enumerate_monic(f4, 2)) {
        const auto [quo, rem] = divmod(a.scaled(3), b);
        REQUIRE(quo * b + rem == a.scaled(3));
        REQUIRE(rem.degree() < b.degree());
      }
  }
}

TEST_CASE("polynomial text") {
  const Field f3 = Field::make(3, 1);
  CHECK(to_string(P(f3, "x^3 + 2*x + 1")) == "x^3+2*x+1");
  CHECK(to_string(P(f3, "1 + x^2 + x^2")) == "2*x^2+1");
  CHECK(to_string(P(f3, "x+2*x")) == "0");
  CHECK(to_string(P(f3, "0")) == "0");
  CHECK(P(f3, "0").degree() == kZeroDegree);
  CHECK_THROWS_AS(P(f3, "3*x"), ParseError);
  CHECK_THROWS_AS(P(f3, "x^"), ParseError);
  CHECK_THROWS_AS(P(f3, "x+"), ParseError);
  CHECK_THROWS_AS(P(f3, "y"), ParseError);
  CHECK_THROWS_AS(P(f3, ""), ParseError);
  CHECK_THROWS_AS(P(f3, "2x"), ParseError);

  SUBCASE("printed polynomials re-parse identically") {
    const Field f9 = Field::make(3, 2);
    for (unsigned d = 0; d <= 2; ++d)
      for (const auto& f : enumerate_monic(f9, d)) {
        for (Elem c = 1; c < 9; ++c) {
          const Poly g = f.scaled(c);
          REQUIRE(parse_poly(to_string(g), f9) == g);
        }
      }
  }
}

TEST_CASE("irreducibility") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  CHECK(is_irreducible(P(f2, "x^2+x+1")));
  CHECK_FALSE(is_irreducible(P(f2, "x^2+1")));
  CHECK(is_irreducible(P(f3, "x^2+1")));
  CHECK(is_irreducible(P(f3, "2*x+1")));
  CHECK_THROWS_AS(is_irreducible(P(f3, "2")), std::invalid_argument);

  SUBCASE("agrees with trial division up to degree 5") {
    for (const Field& F : {f2, f3})
      for (unsigned d = 1; d <= 5; ++d)
        for (const auto& f : enumerate_monic(F, d)) REQUIRE(is_irreducible(f) == irreducible_by_trial_division(f));
  }
}

TEST_CASE("factorization") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  auto fx = factor(P(f2, "x^2+x"));
  REQUIRE(fx.parts.size() == 2);
  CHECK(fx.parts[0].prime == P(f2, "x"));
  CHECK(fx.parts[1].prime == P(f2, "x+1"));

  // x^6+x^5+x^3+x^2 = x^2 (x+1)^2 (x^2+x+1), confirmed by re-expansion.
  const Poly f = P(f2, "x^6+x^5+x^3+x^2");
  const auto ff = factor(f);
  CHECK(ff.expand(f2) == f);
  REQUIRE(ff.parts.size() == 3);
  CHECK(ff.parts[0].prime == P(f2, "x"));
  CHECK(ff.parts[0].exponent == 2);
  CHECK(ff.parts[1].prime == P(f2, "x+1"));
  CHECK(ff.parts[1].exponent == 2);
  CHECK(ff.parts[2].prime == P(f2, "x^2+x+1"));
  CHECK(ff.parts[2].exponent == 1);

  auto g = factor(P(f3, "x^2+2"));
  REQUIRE(g.parts.size() == 2);
  CHECK(g.parts[0].prime == P(f3, "x+1"));
  CHECK(g.parts[1].prime == P(f3, "x+2"));

  const auto unit = factor(P(f3, "2*x^3+2*x"));
  CHECK(unit.unit == 2);
  CHECK(unit.expand(f3) == P(f3, "2*x^3+2*x"));

  CHECK_THROWS_AS(factor(Poly(f3)), std::invalid_argument);

  SUBCASE("round trip for every monic of degree <= 6 over F_2, F_3, F_4") {
    for (const Field& F : {f2, f3, Field::make(2, 2)})
      for (unsigned d = 1; d <= 6; ++d)
        for (const auto& h : enumerate_monic(F, d)) {
          const auto fac = factor(h);
          REQUIRE(fac.expand(F) == h);
          for (std::size_t i = 0; i < fac.parts.size(); ++i) {
            REQUIRE(fac.parts[i].prime.is_monic());
            REQUIRE(is_irreducible(fac.parts[i].prime));
            if (i) REQUIRE(fac.parts[i - 1].prime < fac.parts[i].prime);
          }
        }
  }

  SUBCASE("p-th power inputs in odd characteristic and extension fields") {
    const Field f9 = Field::make(3, 2);
    const Poly h = pow(P(f9, "x^2+x+5"), 6) * pow(P(f9, "x+7"), 3);
    CHECK(factor(h).expand(f9) == h);
    const Field f8 = Field::make(2, 3);
    const Poly k = pow(P(f8, "x^3+5*x+1"), 4) * P(f8, "x^2+3");
    CHECK(factor(k).expand(f8) == k);
  }
}

TEST_CASE("monic enumeration") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  const auto lin = enumerate_monic(f2, 1);
  REQUIRE(lin.size() == 2);
  CHECK(to_string(lin[0]) == "x");
  CHECK(to_string(lin[1]) == "x+1");
  CHECK(enumerate_monic(f2, 2).size() == 4);
  CHECK(enumerate_monic(f3, 2).size() == 9);
  CHECK(enumerate_monic(f3, 0).size() == 1);

  const auto all = enumerate_monic(f3, 3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  // Blocks of the stream concatenate to the full enumeration.
  std::vector<Poly> joined;
  for (std::uint64_t start = 0; start < 27; start += 10) {
    MonicStream block(f3, 3, start, start + 10);
    Poly f(f3);
    while (block.next(f)) joined.push_back(f);
  }
  CHECK(joined == all);
}

TEST_CASE("irreducible enumeration and pi_q") {
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1);
  const auto quad = enumerate_irreducibles(f2, 2);
  REQUIRE(quad.size() == 1);
  CHECK(to_string(quad[0]) == "x^2+x+1");
  CHECK(enumerate_irreducibles(f2, 3).size() == 2);
  const auto lin3 = enumerate_irreducibles(f3, 1);
  REQUIRE(lin3.size() == 3);
  CHECK(to_string(lin3[2]) == "x+2");

  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) CHECK(pi_q(q, 1) == q);
  CHECK(pi_q(2, 6) == 9);
  CHECK(pi_q(3, 2) == 3);
  CHECK(pi_q(3, 3) == 8);
  CHECK(pi_q(5, 2) == 10);

  PiTable table(2);
  CHECK(table.at(6) == 9);
  CHECK(table.at(6) == 9);

  SUBCASE("sum over d | D of d pi_q(d) is q^D") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u})
      for (unsigned D = 1; D <= 12; ++D) {
        BigNat sum = 0;
        for (unsigned d = 1; d <= D; ++d)
          if (D % d == 0) sum += pi_q(q, d) * d;
        REQUIRE(sum == pow_ui(q, D));
      }
  }

  SUBCASE("enumeration length matches pi_q for d <= 8") {
    for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
      const Field F = Field::make(p, s);
      for (unsigned d = 1; d <= 8; ++d) {
        INFO("q=" << F.q() << " d=" << d);
        REQUIRE(BigNat(static_cast<unsigned long>(enumerate_irreducibles(F, d).size())) == pi_q(F, d));
      }
    }
  }
}

TEST_CASE("pi divisibility") {
  CHECK(pi_divisibility_check(Field::make(3, 1), 3));
  CHECK(pi_divisibility_check(Field::make(5, 1), 2));
  CHECK(pi_divisibility_check(Field::make(3, 2), 4));
  CHECK_THROWS_AS(pi_divisibility_check(Field::make(2, 1), 3), std::invalid_argument);
  for (auto [p, s] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}})
    for (unsigned d = 1; d <= 24; ++d) CHECK(pi_divisibility_check(Field::make(p, s), d));
}
