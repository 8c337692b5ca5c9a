#include "cli.hpp"

#include "polytot/collision.hpp"
#include "polytot/density.hpp"
#include "polytot/erdos.hpp"
#include "polytot/errors.hpp"
#include "polytot/factor.hpp"
#include "polytot/preimage.hpp"
#include "polytot/totient.hpp"
#include "polytot/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace polytot::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint32_t p = 2;
  std::uint32_t s = 1;
  std::string format = "json";
  std::vector<std::string> polys;
  std::string n, y;
  unsigned d = 1;
  std::string goal;
  unsigned l = 0;
  bool oracle = false;
  bool sweep = false;
  std::string suite;
  std::optional<unsigned> budget_degree;
  std::string budget_n, budget_y;
};

// A command's result: the JSON document and the exit code it implies.
struct Outcome {
  Json doc;
  int code = kOk;
};

BigNat parse_nat(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string(flag) + " is required");
  if (!std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError(std::string(flag) + " must be a decimal integer");
  BigNat v(text, 10);
  if (v < 1) throw UsageError(std::string(flag) + " must be positive");
  return v;
}

Json counts_json(const std::map<unsigned, unsigned>& counts) {
  Json m = Json::object();
  for (const auto& [d, c] : counts) m[std::to_string(d)] = c;
  return m;
}

Json strings(const std::vector<BigNat>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_decimal(x));
  return a;
}

Json polys_json(const std::vector<Poly>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(to_string(f));
  return a;
}

class Runner {
 public:
  explicit Runner(const Options& o) : o_(o), field_(Field::make(o.p, o.s)) {}

  Poly poly(std::size_t idx = 0) const {
    if (o_.polys.size() <= idx) throw UsageError("--poly is required");
    return parse_poly(o_.polys[idx], field_);
  }
  BigNat n() const { return parse_nat(o_.n, "--n"); }
  BigNat y() const { return parse_nat(o_.y, "--y"); }

  Outcome phi_cmd() const {
    const auto r = phi(poly());
    return {Json{{"value", to_decimal(r.value)}, {"factored", {{"j", r.factored.j}, {"m", counts_json(r.factored.counts)}}}}};
  }

  Outcome sigma_cmd() const {
    const Poly g = poly();
    Json k = Json::object();
    for (const auto& [d, e] : sigma_exponents(g).exps) k[std::to_string(d)] = e;
    return {Json{{"value", to_decimal(sigma(g))}, {"exponents", k}}};
  }

  Outcome factor_cmd() const {
    const auto fac = factor(poly());
    Json parts = Json::array();
    for (const auto& part : fac.parts) parts.push_back({{"poly", to_string(part.prime)}, {"exponent", part.exponent}});
    return {Json{{"unit", fac.unit}, {"factors", parts}}};
  }

  Outcome signature_cmd() const {
    const auto sig = signature(poly());
    return {Json{{"degree", sig.degree}, {"m", counts_json(sig.counts)}}};
  }

  Outcome same_phi_cmd() const {
    if (o_.polys.size() != 2) throw UsageError("same-phi needs exactly two --poly values");
    const Poly a = poly(0), b = poly(1);
    const bool same = same_phi(signature(a), signature(b), field_);
    return {Json{{"same", same}, {"phi", {to_decimal(phi(a).value), to_decimal(phi(b).value)}}}};
  }

  Outcome pi_cmd() const {
    if (o_.d < 1) throw UsageError("--d must be positive");
    Json doc{{"pi", to_decimal(pi_q(field_, o_.d))}};
    if (field_.q() != 2) doc["divisibility"] = pi_divisibility_check(field_, o_.d);
    return {doc};
  }

  Outcome preimage_count_cmd() const { return {Json{{"count", to_decimal(preimage_count(n(), field_))}}}; }

  Outcome preimage_list_cmd() const {
    const auto list = preimage_list(n(), field_);
    return {Json{{"count", std::to_string(list.size())}, {"preimages", polys_json(list)}}};
  }

  Outcome preimage_profile_cmd() const {
    const auto prof = count_profile(n(), field_, o_.oracle);
    Json doc{{"n", to_decimal(prof.n)},
             {"count", to_decimal(prof.count)},
             {"class", to_string(prof.cls)},
             {"uniqueness_condition", prof.uniqueness_condition}};
    if (prof.oracle_count) doc["oracle_count"] = to_decimal(*prof.oracle_count);
    return {doc};
  }

  Outcome preimage_represent_cmd() const {
    Json reps = Json::array();
    for (const auto& rep : represent(n(), field_)) {
      Json r{{"j", rep.j}};
      if (rep.merged_i) r["i"] = *rep.merged_i;
      r["m"] = counts_json(rep.counts);
      Json ex = Json::array();
      for (const auto& dec : rep.expansions) ex.push_back({{"j", dec.j}, {"m", counts_json(dec.counts)}});
      r["expansions"] = ex;
      reps.push_back(r);
    }
    return {Json{{"representations", reps}}};
  }

  Outcome sierpinski_cmd() const {
    static const std::map<std::string, SierpinskiGoal> goals = {{"exact", SierpinskiGoal::exact_count},
                                                                 {"q-power", SierpinskiGoal::q_power},
                                                                 {"binomial", SierpinskiGoal::binomial_multiple}};
    const auto it = goals.find(o_.goal);
    if (it == goals.end()) throw UsageError("--goal must be exact, q-power or binomial");
    const auto w = sierpinski_witness(field_, it->second, o_.l);
    const BigNat count = preimage_count(w.n, field_);
    Json doc{{"n", to_decimal(w.n)}, {"expected", to_decimal(w.expected_count)}, {"count", to_decimal(count)}};
    bool holds = count == w.expected_count;
    if (o_.oracle) {
      const auto listed = preimage_list(w.n, field_).size();
      doc["oracle_count"] = std::to_string(listed);
      holds = holds && BigNat(static_cast<unsigned long>(listed)) == count;
    }
    doc["holds"] = holds;
    return {doc, holds ? kOk : kCheckFailed};
  }

  Outcome erdos_member_cmd() const {
    const auto v = intersection_member(n(), field_);
    if (!v.member) return {Json{{"member", false}}, kCheckFailed};
    return {Json{{"member", true}, {"family", to_string(*v.family)}, {"params", v.params}}};
  }

  Outcome erdos_scan_cmd() const { return {Json{{"values", strings(intersection_up_to(y(), field_))}}}; }

  Outcome erdos_witness_cmd() const {
    const auto w = erdos_witness(n(), field_);
    if (!w) return {Json{{"witness", nullptr}}, kCheckFailed};
    return {Json{{"witness", {{"f", to_string(w->first)}, {"g", to_string(w->second)}}}}};
  }

  std::vector<DensityReport> density_reports() const {
    const BigNat top = y();
    if (!o_.sweep) return {density_report(top, field_)};
    std::vector<DensityReport> out;
    for (BigNat v = field_.q(); v <= top; v *= field_.q()) out.push_back(density_report(v, field_));
    return out;
  }

  static Json density_json(const DensityReport& r) {
    Json doc{{"y", to_decimal(r.y)}, {"k", r.k}, {"V", to_decimal(r.V)}, {"bound", r.bound},
             {"ratio", r.ratio}, {"bound_checked", r.bound_checked}};
    if (r.bound_checked) doc["holds"] = r.holds;
    return doc;
  }

 private:
  const Options& o_;
  Field field_;
};

Outcome verify_cmd(const Options& o) {
  VerifyBudget budget;
  budget.max_degree = o.budget_degree;
  if (!o.budget_n.empty()) budget.max_n = parse_nat(o.budget_n, "--budget-n");
  if (!o.budget_y.empty()) budget.max_y = parse_nat(o.budget_y, "--budget-y");
  if (o.budget_degree && *o.budget_degree == 0) throw UsageError("--budget-degree must be positive");

  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end()) {
    suites = {o.suite};
  } else {
    throw UsageError("unknown suite: " + o.suite);
  }

  Json results = Json::array();
  bool all_passed = true;
  for (const auto& name : suites)
    for (const auto& r : run_suite(name, budget)) {
      all_passed = all_passed && r.passed;
      results.push_back({{"suite", name}, {"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
    }
  return {Json{{"passed", all_passed}, {"results", results}}, all_passed ? kOk : kCheckFailed};
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_text(const Json& doc, std::ostream& out) {
  if (doc.contains("results") && doc["results"].is_array()) {
    for (const auto& r : doc["results"])
      out << (r["passed"].get<bool>() ? "PASS" : "FAIL") << ' ' << r["criterion"].get<std::string>() << ' '
          << r["title"].get<std::string>() << ": " << r["detail"].get<std::string>() << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ':';
    if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& e) { return e.is_primitive(); })) {
      for (const auto& e : value) out << ' ' << scalar_text(e);
    } else {
      out << ' ' << scalar_text(value);
    }
    out << '\n';
  }
}

void add_field_options(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "field characteristic")->capture_default_str();
  sub->add_option("--s", o.s, "extension degree, q = p^s")->capture_default_str();
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Totient and sigma values of polynomials over finite fields", "polytot"};
  app.require_subcommand(1);

  // Each leaf subcommand registers the action it performs.
  std::function<Outcome(Runner&)> action;
  std::function<Outcome()> plain_action;
  bool density = false;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto method) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_field_options(sub, o);
    sub->callback([&, method] { action = [method](Runner& r) { return (r.*method)(); }; });
    return sub;
  };
  auto with_poly = [&](CLI::App* sub, std::size_t count = 1) {
    sub->add_option("--poly", o.polys, "polynomial, e.g. \"x^3+2*x+1\"")->required()->expected(static_cast<int>(count));
  };
  auto with_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "positive integer")->required(); };
  auto with_y = [&](CLI::App* sub) { sub->add_option("--y", o.y, "upper limit")->required(); };

  with_poly(leaf(&app, "phi", "Euler totient of a polynomial", &Runner::phi_cmd));
  with_poly(leaf(&app, "sigma", "sum of monic divisor norms", &Runner::sigma_cmd));
  with_poly(leaf(&app, "factor", "factor into monic irreducibles", &Runner::factor_cmd));
  with_poly(leaf(&app, "signature", "degree and irreducible divisor counts", &Runner::signature_cmd));
  {
    CLI::App* sub = leaf(&app, "same-phi", "decide equal totients from signatures", &Runner::same_phi_cmd);
    sub->add_option("--poly", o.polys, "two polynomials")->required()->expected(2);
  }
  leaf(&app, "pi", "number of monic irreducibles of degree d", &Runner::pi_cmd)
      ->add_option("--d", o.d, "degree")
      ->required();

  CLI::App* pre = app.add_subcommand("preimage", "monic preimages of n under the totient");
  pre->require_subcommand(1);
  with_n(leaf(pre, "count", "count by formula", &Runner::preimage_count_cmd));
  with_n(leaf(pre, "list", "list by enumeration", &Runner::preimage_list_cmd));
  {
    CLI::App* sub = leaf(pre, "profile", "count with its class", &Runner::preimage_profile_cmd);
    with_n(sub);
    sub->add_flag("--oracle", o.oracle, "cross-check against enumeration");
  }
  with_n(leaf(pre, "represent", "factored forms of n", &Runner::preimage_represent_cmd));

  {
    CLI::App* sub = leaf(&app, "sierpinski", "n with a prescribed preimage count", &Runner::sierpinski_cmd);
    sub->add_option("--goal", o.goal, "exact, q-power or binomial")->required();
    sub->add_option("--l", o.l, "construction parameter")->required();
    sub->add_flag("--oracle", o.oracle, "also count by enumeration");
  }

  CLI::App* erd = app.add_subcommand("erdos", "values shared by the totient and sigma");
  erd->require_subcommand(1);
  with_n(leaf(erd, "member", "membership with its family", &Runner::erdos_member_cmd));
  with_y(leaf(erd, "scan", "all shared values up to y", &Runner::erdos_scan_cmd));
  with_n(leaf(erd, "witness", "f, g with phi(f) = sigma(g) = n", &Runner::erdos_witness_cmd));

  {
    CLI::App* sub = app.add_subcommand("density", "count of totient values up to y");
    add_field_options(sub, o);
    with_y(sub);
    sub->add_flag("--sweep", o.sweep, "report every power of q up to y");
    sub->callback([&] { density = true; });
  }

  {
    CLI::App* sub = app.add_subcommand("verify", "run acceptance suites");
    sub->add_option("suite", o.suite, "collisions, preimage, sierpinski, erdos, density, lemmas or all")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--budget-degree", o.budget_degree, "cap on polynomial degree");
    sub->add_option("--budget-n", o.budget_n, "cap on n");
    sub->add_option("--budget-y", o.budget_y, "cap on y");
    sub->callback([&] { plain_action = [&] { return verify_cmd(o); }; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Outcome result;
    if (density) {
      Runner r(o);
      const auto reports = r.density_reports();
      if (o.format == "csv") {
        out << density_csv_header() << '\n';
        for (const auto& rep : reports) out << density_csv_row(rep) << '\n';
        return kOk;
      }
      if (o.sweep) {
        Json arr = Json::array();
        for (const auto& rep : reports) arr.push_back(Runner::density_json(rep));
        result.doc = Json{{"reports", arr}};
      } else {
        result.doc = Runner::density_json(reports.front());
      }
    } else if (plain_action) {
      result = plain_action();
    } else {
      if (o.format == "csv") throw UsageError("csv output is only available for density");
      Runner r(o);
      result = action(r);
    }
    if (o.format == "text") {
      print_text(result.doc, out);
    } else {
      out << result.doc.dump() << '\n';
    }
    return result.code;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
}

}  // namespace polytot::cli
