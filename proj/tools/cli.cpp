#include "cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "degen/appell.hpp"
#include "degen/errors.hpp"
#include "degen/eulerian.hpp"
#include "degen/wire.hpp"

namespace degen::cli {

namespace {

std::string render_entry(const LambdaPoly& p, const std::optional<Rational>& lambda) {
  return lambda ? render(at_lambda(p, *lambda)) : render(p, 'L');
}

Triangle build_triangle(Family family, std::size_t rows) {
  switch (family) {
    case Family::S2Lambda: return s2_triangle(rows);
    case Family::S1Lambda: return s1_triangle(rows);
    case Family::BracketLambda: return bracket_triangle(rows);
    case Family::EulerianLambda: return eulerian_triangle(rows);
  }
  throw BadParameter("unknown family");
}

nlohmann::ordered_json param_json(const ParamValue& v) {
  return std::visit(
      [](const auto& value) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, std::uint64_t>) {
          return value;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return value.str();
        } else {
          auto arr = nlohmann::ordered_json::array();
          for (const Rational& r : value) arr.push_back(r.str());
          return arr;
        }
      },
      v);
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_arg(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError&) {
    throw Usage(std::string("invalid rational for ") + flag + ": '" + text + "'");
  }
}

std::optional<Rational> optional_rational(const std::optional<std::string>& text, const char* flag) {
  if (!text) return std::nullopt;
  return rational_arg(*text, flag);
}

// --- table ---------------------------------------------------------------

struct TableArgs {
  std::string family;
  std::size_t rows = 0;
  std::optional<std::string> lambda;
  std::string format = "json";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
  static const std::map<std::string, Family, std::less<>> families{{"s1", Family::S1Lambda},
                                                                   {"s2", Family::S2Lambda},
                                                                   {"bracket", Family::BracketLambda},
                                                                   {"eulerian", Family::EulerianLambda}};
  const auto it = families.find(a.family);
  if (it == families.end()) throw Usage("unknown family '" + a.family + "'");
  if (a.rows > kMaxRows) throw Usage("--rows must be at most " + std::to_string(kMaxRows));
  const auto lambda = optional_rational(a.lambda, "--lambda");
  const Triangle t = build_triangle(it->second, a.rows);
  out << (a.format == "csv" ? triangle_csv(t, lambda) : triangle_json(t, lambda) + "\n");
  return kOk;
}

// --- eval ----------------------------------------------------------------

struct EvalArgs {
  std::string family;
  std::size_t n = 0;
  std::optional<std::string> u;
  std::optional<std::string> x;
  std::optional<std::string> lambda;
  std::string format = "text";
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  if (a.n > kMaxRows) throw Usage("--n must be at most " + std::to_string(kMaxRows));
  XPoly p;
  if (a.family == "bernoulli") {
    p = bernoulli_poly(a.n, bernoulli_numbers(a.n));
  } else if (a.family == "frobenius") {
    if (!a.u) throw Usage("frobenius requires --u");
    const Rational u = rational_arg(*a.u, "--u");
    if (u == Rational{1}) throw Usage("--u must differ from 1");
    p = frobenius_poly(a.n, frobenius_numbers(a.n, u));
  } else if (a.family == "eulerian-poly") {
    p = eulerian_poly_explicit(a.n).poly;
  } else if (a.family == "carlitz") {
    p = carlitz_poly(a.n, 2 * a.n + 2);
  } else {
    throw Usage("unknown family '" + a.family + "'");
  }

  const auto x = optional_rational(a.x, "--x");
  const auto lambda = optional_rational(a.lambda, "--lambda");
  nlohmann::ordered_json j;
  j["family"] = a.family;
  j["n"] = a.n;
  std::string text;
  if (x && lambda) {
    const Rational v = at_lambda(p.eval(LambdaPoly(*x)), *lambda);
    text = render(v);
    j["value"] = text;
  } else if (x) {
    const LambdaPoly v = p.eval(LambdaPoly(*x));
    text = render(v, 'L');
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& c : v.coefficients()) arr.push_back(c.str());
    j["coefficients"] = arr;
  } else if (lambda) {
    const Poly<Rational> v = at_lambda(p, *lambda);
    text = render(v, 'x');
    auto arr = nlohmann::ordered_json::array();
    for (const Rational& c : v.coefficients()) arr.push_back(c.str());
    j["coefficients"] = arr;
  } else {
    text = render(p);
    auto arr = nlohmann::ordered_json::array();
    for (const LambdaPoly& c : p.coefficients()) arr.push_back(render(c, 'L'));
    j["coefficients"] = arr;
  }
  out << (a.format == "json" ? j.dump() : text) << "\n";
  return kOk;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::string> report;
  SuiteConfig config;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const auto suite = parse_suite(a.suite);
  if (!suite) throw Usage("unknown suite '" + a.suite + "'");
  std::ofstream file;
  if (a.report) {
    file.open(*a.report, std::ios::binary | std::ios::trunc);
    if (!file) throw Usage("cannot write report to '" + *a.report + "'");
  }
  const std::vector<IdentityResult> results = run_suite(a.config, *suite);
  const std::string report = to_jsonl(results);
  const std::size_t failures = unexpected_failures(results);
  if (a.report) {
    file << report;
    file.close();
    if (!file) throw Usage("failed writing report to '" + *a.report + "'");
    const auto expected = std::count_if(results.begin(), results.end(), [](const auto& r) { return r.expected_fail; });
    out << results.size() << " checks, " << failures << " unexpected failures, " << expected
        << " expected failures\n";
  } else {
    out << report;
  }
  return failures == 0 ? kOk : kVerificationFailed;
}

}  // namespace

std::string triangle_json(const Triangle& t, const std::optional<Rational>& lambda) {
  nlohmann::ordered_json j;
  j["family"] = std::string(to_string(t.family()));
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t n = 0; n <= t.size(); ++n) {
    auto row = nlohmann::ordered_json::array();
    for (const LambdaPoly& e : t.row(n)) row.push_back(render_entry(e, lambda));
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j.dump();
}

std::string triangle_csv(const Triangle& t, const std::optional<Rational>& lambda) {
  std::string out;
  for (std::size_t n = 0; n <= t.size(); ++n) {
    const auto& row = t.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += '"' + render_entry(row[k], lambda) + '"';
    }
    out += '\n';
  }
  return out;
}

nlohmann::ordered_json to_json(const IdentityResult& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  auto params = nlohmann::ordered_json::object();
  for (const Parameter& p : r.parameters) params[p.name] = param_json(p.value);
  j["parameters"] = std::move(params);
  j["passed"] = r.passed;
  if (r.expected_fail) j["expected_fail"] = true;
  if (r.lhs) j["lhs"] = *r.lhs;
  if (r.rhs) j["rhs"] = *r.rhs;
  return j;
}

std::string to_jsonl(const std::vector<IdentityResult>& results) {
  std::string out;
  for (const IdentityResult& r : results) out += to_json(r).dump() + "\n";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate Stirling, Bernoulli, Frobenius-Euler and Eulerian tables with exact identity checks",
               "degen"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("table", "Print a triangle of lambda-polynomials");
  table_cmd->add_option("--family", table.family, "s1 | s2 | bracket | eulerian")->required();
  table_cmd->add_option("--rows", table.rows, "Last row index (<= 64)")->required();
  table_cmd->add_option("--lambda", table.lambda, "Specialize lambda to this rational");
  table_cmd->add_option("--format", table.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Print a polynomial of a family, optionally evaluated");
  eval_cmd->add_option("--family", eval.family, "bernoulli | frobenius | eulerian-poly | carlitz")->required();
  eval_cmd->add_option("--n", eval.n, "Index")->required();
  eval_cmd->add_option("--u", eval.u, "Frobenius-Euler parameter (!= 1)");
  eval_cmd->add_option("--x", eval.x, "Evaluate at x (t for Eulerian polynomials)");
  eval_cmd->add_option("--lambda", eval.lambda, "Specialize lambda");
  eval_cmd->add_option("--format", eval.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the identity suite and emit a JSONL report");
  verify_cmd->add_option("--suite", verify.suite, "all | thm1 | thm2-4 | thm5 | thm7 | thm11 | misc | gf");
  verify_cmd->add_option("--seed", verify.config.seed, "Sampling seed");
  verify_cmd->add_option("--report", verify.report, "Write JSONL here instead of stdout");
  verify_cmd->add_option("--alpha-max", verify.config.alpha_max);
  verify_cmd->add_option("--m-max", verify.config.m_max);
  verify_cmd->add_option("--n-max", verify.config.n_max);
  verify_cmd->add_option("--samples", verify.config.sample_count);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, out);
    if (*eval_cmd) return cmd_eval(eval, out);
    return cmd_verify(verify, out);
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace degen::cli
