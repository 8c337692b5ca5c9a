#include "polytot/verify.hpp"

#include "polytot/collision.hpp"
#include "polytot/density.hpp"
#include "polytot/erdos.hpp"
#include "polytot/errors.hpp"
#include "polytot/factor.hpp"
#include "polytot/numtheory.hpp"
#include "polytot/preimage.hpp"
#include "polytot/totient.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polytot {

namespace {

// Collects the outcome of many sub-checks behind one criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) notes_.push_back(what);
  }
  void note(const std::string& s) { info_.push_back(s); }

  CriterionResult result(std::string id, std::string title) const {
    CriterionResult r{std::move(id), std::move(title), failures_ == 0, {}};
    std::ostringstream os;
    os << checks_ << " checks, " << failures_ << " failures";
    for (const auto& s : info_) os << "; " << s;
    for (const auto& s : notes_) os << "; FAIL " << s;
    r.detail = os.str();
    return r;
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::vector<std::string> notes_, info_;
};

BigNat capped(const BigNat& full, const std::optional<BigNat>& cap) { return cap && *cap < full ? *cap : full; }
unsigned capped(unsigned full, const std::optional<unsigned>& cap) { return cap ? std::min(full, *cap) : full; }

std::string join(const std::vector<BigNat>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : ",") + to_decimal(x);
  return s;
}

// Runs body, turning any exception into a failed criterion.
CriterionResult guarded(std::string id, std::string title, const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {std::move(id), std::move(title), false, std::string("exception: ") + e.what()};
  }
}

std::vector<CriterionResult> collisions(const VerifyBudget& budget) {
  return {guarded("1", "collision criterion decided from signatures", [&] {
    Tally t;
    const std::pair<std::uint32_t, unsigned> grid[] = {{2, 7}, {3, 5}, {4, 4}, {5, 3}};
    for (auto [q, full_degree] : grid) {
      const unsigned max_degree = capped(full_degree, budget.max_degree);
      const Field field = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
      std::vector<Signature> sigs;
      std::vector<BigNat> values;
      std::vector<Poly> polys;
      for (unsigned d = 1; d <= max_degree; ++d) {
        MonicStream stream(field, d);
        Poly f(field);
        while (stream.next(f)) {
          sigs.push_back(signature(f));
          values.push_back(phi_direct(f));
          polys.push_back(f);
        }
      }
      std::size_t pairs = 0;
      for (std::size_t a = 0; a < sigs.size(); ++a)
        for (std::size_t b = a; b < sigs.size(); ++b, ++pairs)
          t.check(same_phi(sigs[a], sigs[b], field) == (values[a] == values[b]),
                  "q=" + std::to_string(q) + " " + to_string(polys[a]) + " vs " + to_string(polys[b]));
      t.note("q=" + std::to_string(q) + " deg<=" + std::to_string(max_degree) + ": " + std::to_string(polys.size()) +
             " monics, " + std::to_string(pairs) + " pairs");
    }
    return t.result("1", "collision criterion decided from signatures");
  })};
}

std::vector<CriterionResult> preimage_suite(const VerifyBudget& budget) {
  std::vector<CriterionResult> out;
  out.push_back(guarded("2", "formula count equals brute-force count", [&] {
    Tally t;
    const std::pair<std::uint32_t, unsigned long> grid[] = {{2, 200}, {3, 500}, {5, 1000}};
    for (auto [q, full_n] : grid) {
      const BigNat max_n = capped(BigNat(full_n), budget.max_n);
      const Field field = Field::make(q, 1);
      const unsigned degree = degree_bound(max_n, field);
      const auto census = phi_census(field, degree);
      std::size_t values = 0;
      for (BigNat n = 1; n <= max_n; ++n) {
        const BigNat formula = preimage_count(n, field);
        auto it = census.find(n);
        const BigNat oracle = it == census.end() ? BigNat(0) : BigNat(static_cast<unsigned long>(it->second));
        if (oracle != 0) ++values;
        t.check(formula == oracle, "q=" + std::to_string(q) + " n=" + to_decimal(n) + " formula " + to_decimal(formula) +
                                       " oracle " + to_decimal(oracle));
      }
      t.note("q=" + std::to_string(q) + " n<=" + to_decimal(max_n) + " (oracle deg<=" + std::to_string(degree) + ", " +
             std::to_string(values) + " totient values)");
    }
    return t.result("2", "formula count equals brute-force count");
  }));

  out.push_back(guarded("3", "q=2: exactly x, x+1, x^2+x have totient 1", [&] {
    Tally t;
    const Field f2 = Field::make(2, 1);
    const auto list = preimage_list(1, f2);
    std::vector<std::string> names;
    for (const auto& p : list) names.push_back(to_string(p));
    t.check(preimage_count(1, f2) == 3, "preimage_count(1) = " + to_decimal(preimage_count(1, f2)));
    t.check(names == std::vector<std::string>{"x", "x+1", "x^2+x"}, "preimage_list(1) has " + std::to_string(names.size()) + " entries");
    return t.result("3", "q=2: exactly x, x+1, x^2+x have totient 1");
  }));

  out.push_back(guarded("5", "preimage counts avoid the forbidden gaps", [&] {
    Tally t;
    for (std::uint32_t q : {4u, 5u}) {
      const Field field = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
      const BigNat max_n = capped(BigNat(10000), budget.max_n);
      const BigNat pair_count = binomial(q, 2);
      std::map<std::string, std::size_t> histogram;
      for (BigNat n = 1; n <= max_n; ++n) {
        // count_profile throws on a gap value or a uniqueness mismatch.
        try {
          const auto profile = count_profile(n, field);
          const BigNat& c = profile.count;
          ++histogram[to_string(profile.cls)];
          t.check(c == 0 || c == 1 || c == q || c >= pair_count, "q=" + std::to_string(q) + " n=" + to_decimal(n));
        } catch (const CheckFailure& e) {
          t.check(false, e.what());
        }
      }
      std::string h;
      for (const auto& [k, v] : histogram) h += (h.empty() ? "" : " ") + k + ":" + std::to_string(v);
      t.note("q=" + std::to_string(q) + " n<=" + to_decimal(max_n) + " {" + h + "}");
    }
    const Field f2 = Field::make(2, 1);
    const BigNat max_n = capped(BigNat(1000), budget.max_n);
    for (BigNat n = 1; n <= max_n; ++n) {
      const BigNat c = preimage_count(n, f2);
      t.check(c == 0 || c >= 3, "q=2 n=" + to_decimal(n) + " count " + to_decimal(c));
      t.check((c == 3) == (n == 1), "q=2 n=" + to_decimal(n) + " count " + to_decimal(c));
    }
    t.note("q=2 n<=" + to_decimal(max_n));
    return t.result("5", "preimage counts avoid the forbidden gaps");
  }));
  return out;
}

std::vector<CriterionResult> sierpinski(const VerifyBudget&) {
  return {guarded("4", "Sierpinski constructions hit their predicted counts", [&] {
    Tally t;
    // Brute-force cross-check whenever the oracle enumeration is small.
    auto verify = [&](const Field& field, SierpinskiGoal goal, unsigned l) {
      const auto w = sierpinski_witness(field, goal, l);
      const BigNat got = preimage_count(w.n, field);
      const std::string tag = "q=" + std::to_string(field.q()) + " l=" + std::to_string(l) + " n=" + to_decimal(w.n);
      t.check(got == w.expected_count, tag + " count " + to_decimal(got) + " expected " + to_decimal(w.expected_count));
      const unsigned degree = degree_bound(w.n, field);
      if (pow_ui(field.q(), degree) <= 200000) {
        const auto oracle = preimage_list(w.n, field).size();
        t.check(BigNat(static_cast<unsigned long>(oracle)) == w.expected_count, tag + " oracle " + std::to_string(oracle));
      }
    };
    const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f5 = Field::make(5, 1);
    for (unsigned l = 3; l <= 12; ++l) verify(f2, SierpinskiGoal::exact_count, l);
    for (unsigned l = 1; l <= 2; ++l) verify(f3, SierpinskiGoal::q_power, l);
    for (const Field& f : {f3, f5})
      for (unsigned l = 0; l <= 2; ++l) verify(f, SierpinskiGoal::binomial_multiple, l);
    return t.result("4", "Sierpinski constructions hit their predicted counts");
  })};
}

std::vector<CriterionResult> erdos(const VerifyBudget& budget) {
  return {guarded("6", "Phi/sigma intersection matches the family description", [&] {
    Tally t;
    const std::pair<std::uint32_t, unsigned long> grid[] = {{5, 10000}, {3, 1000}, {2, 1000}};
    for (auto [q, full_y] : grid) {
      const Field field = Field::make(q, 1);
      const BigNat y = capped(BigNat(full_y), budget.max_y);
      const auto phis = phi_values_bruteforce(y, field);
      const auto sigmas = sigma_values_bruteforce(y, field);
      std::vector<BigNat> both;
      std::set_intersection(phis.begin(), phis.end(), sigmas.begin(), sigmas.end(), std::back_inserter(both));
      const auto families = intersection_up_to(y, field);
      t.check(both == families, "q=" + std::to_string(q) + " enumerated {" + join(both) + "} vs families {" + join(families) + "}");
      for (const auto& n : families) {
        const auto verdict = intersection_member(n, field);
        t.check(verdict.member && family_value(*verdict.family, verdict.params) == n,
                "q=" + std::to_string(q) + " verdict for " + to_decimal(n));
      }
      t.note("q=" + std::to_string(q) + " y=" + to_decimal(y) + ": " + std::to_string(both.size()) + " common values");
    }
    return t.result("6", "Phi/sigma intersection matches the family description");
  })};
}

std::vector<CriterionResult> density(const VerifyBudget& budget) {
  return {guarded("7", "value density: V(10), the V(y) bound, dual enumeration", [&] {
    Tally t;
    const Field f2 = Field::make(2, 1);
    const auto v10 = density_report(10, f2);
    t.check(v10.V == 7, "V(10) = " + to_decimal(v10.V));
    t.check(phi_values_bruteforce(10, f2).size() == 7, "brute-force V(10)");

    const BigNat y_cap = capped(BigNat(100000), budget.max_y);
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
      const Field field = q == 4 ? Field::make(2, 2) : Field::make(q, 1);
      unsigned samples = 0;
      for (BigNat y = q; y <= y_cap; y *= q, ++samples) {
        try {
          const auto r = density_report(y, field);
          t.check(r.bound_checked && r.holds, "q=" + std::to_string(q) + " y=" + to_decimal(y));
        } catch (const CheckFailure& e) {
          t.check(false, e.what());
        }
      }
      t.note("q=" + std::to_string(q) + " bound at " + std::to_string(samples) + " powers");
    }

    const BigNat y_dual = capped(BigNat(1000), budget.max_y);
    for (std::uint32_t q : {2u, 3u}) {
      const Field field = Field::make(q, 1);
      const auto dfs = phi_values_up_to(y_dual, field);
      const auto brute = phi_values_bruteforce(y_dual, field);
      t.check(dfs == brute, "q=" + std::to_string(q) + " dual enumeration differs (" + std::to_string(dfs.size()) + " vs " +
                                std::to_string(brute.size()) + ")");
      t.note("q=" + std::to_string(q) + " V(" + to_decimal(y_dual) + ")=" + std::to_string(dfs.size()));
    }
    return t.result("7", "value density: V(10), the V(y) bound, dual enumeration");
  })};
}

std::vector<CriterionResult> lemmas(const VerifyBudget&) {
  std::vector<CriterionResult> out;
  out.push_back(guarded("8", "pi_q values and the p | pi or 4 | pi divisibility", [&] {
    Tally t;
    const Field f2 = Field::make(2, 1);
    const unsigned expected[] = {2, 1, 2, 3, 6, 9};
    for (unsigned d = 1; d <= 6; ++d) {
      t.check(pi_q(f2, d) == expected[d - 1], "pi_2(" + std::to_string(d) + ") formula");
      t.check(enumerate_irreducibles(f2, d).size() == expected[d - 1], "pi_2(" + std::to_string(d) + ") enumeration");
    }
    const std::pair<std::uint32_t, std::uint32_t> fields[] = {{3, 1}, {2, 2}, {5, 1}, {7, 1}, {3, 2}};
    for (auto [p, s] : fields) {
      const Field field = Field::make(p, s);
      for (unsigned d = 1; d <= 24; ++d)
        t.check(pi_divisibility_check(field, d), "q=" + std::to_string(field.q()) + " d=" + std::to_string(d));
    }
    return t.result("8", "pi_q values and the p | pi or 4 | pi divisibility");
  }));

  out.push_back(guarded("9", "Zsigmondy exceptions, Stirling, solution-count bounds", [&] {
    Tally t;
    std::set<std::pair<unsigned, unsigned>> exceptions, expected;
    for (unsigned a = 2; a <= 12; ++a)
      for (unsigned n = 2; n <= 20; ++n) {
        const bool has = zsigmondy_has_primitive(a, 1, n);
        t.check(has == !primitive_prime_divisors(a, n).empty(), "a=" + std::to_string(a) + " n=" + std::to_string(n));
        if (!has) exceptions.emplace(a, n);
        const unsigned s = a + 1;
        if ((a == 2 && n == 6) || (n == 2 && (s & (s - 1)) == 0)) expected.emplace(a, n);
      }
    t.check(exceptions == expected, "Zsigmondy exception set differs");
    std::string ex;
    for (auto [a, n] : exceptions) ex += (ex.empty() ? "" : " ") + std::string("(") + std::to_string(a) + "," + std::to_string(n) + ")";
    t.note("exceptions {" + ex + "}");

    for (unsigned n = 1; n <= 30; ++n) {
      const auto b = stirling_bounds(n);
      const BigNat f = factorial(n);
      t.check(strictly_below(b.lower, f) && strictly_below(f, b.upper), "Stirling n=" + std::to_string(n));
    }

    std::mt19937 rng(20240229);
    for (int trial = 0; trial < 200; ++trial) {
      SolutionCountQuery query;
      const int k = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int i = 0; i < k; ++i) query.weights.push_back(std::uniform_int_distribution<std::uint64_t>(1, 6)(rng));
      query.budget = std::uniform_int_distribution<std::uint64_t>(0, 40)(rng);
      const BigNat count = count_solutions(query);
      t.check(solution_count_sandwich_holds(query, count), "sandwich trial " + std::to_string(trial));
    }

    for (unsigned n = 1; n <= 60; ++n)
      t.check(strictly_below(triangular_solution_count(n), triangular_bound(n)), "N(" + std::to_string(n) + ")");
    return t.result("9", "Zsigmondy exceptions, Stirling, solution-count bounds");
  }));
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"collisions", "preimage", "sierpinski", "erdos", "density", "lemmas"};
  return names;
}

std::vector<CriterionResult> run_suite(std::string_view name, const VerifyBudget& budget) {
  if (name == "collisions") return collisions(budget);
  if (name == "preimage") return preimage_suite(budget);
  if (name == "sierpinski") return sierpinski(budget);
  if (name == "erdos") return erdos(budget);
  if (name == "density") return density(budget);
  if (name == "lemmas") return lemmas(budget);
  throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

}  // namespace polytot
