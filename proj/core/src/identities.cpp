#include "degen/identities.hpp"

#include <algorithm>

#include "degen/errors.hpp"
#include "degen/eulerian.hpp"
#include "degen/factorial.hpp"
#include "degen/wire.hpp"

namespace degen {

namespace {

std::string render_value(const LambdaPoly& p) { return render(p, 'L'); }
std::string render_value(const XPoly& p) { return render(p); }

template <typename V>
IdentityResult compare(std::string id, std::vector<Parameter> params, const V& lhs, const V& rhs) {
  IdentityResult r{std::move(id), std::move(params), lhs == rhs, false, std::nullopt, std::nullopt};
  if (!r.passed) {
    r.lhs = render_value(lhs);
    r.rhs = render_value(rhs);
  }
  return r;
}

Parameter nat(std::string name, std::size_t v) { return {std::move(name), ParamValue{std::uint64_t{v}}}; }
Parameter rat(std::string name, const Rational& v) { return {std::move(name), ParamValue{v}}; }

Rational sign_pow(std::size_t e) { return e % 2 == 0 ? Rational{1} : Rational{-1}; }

const LambdaPoly kLambda = LambdaPoly::variable();

// x^k as an XPoly.
XPoly x_pow(std::size_t k) { return XPoly::monomial(LambdaPoly(Rational{1}), k); }

XPoly one_minus_x_pow(std::size_t k) {
  return pow(XPoly{LambdaPoly(Rational{1}), LambdaPoly(Rational{-1})}, static_cast<unsigned>(k));
}

// Sum over k = alpha..m of (k)_{alpha,L} * weight(k); the direct-summation side.
template <typename W>
LambdaPoly direct_falling_sum(std::size_t alpha, std::size_t m, W&& weight) {
  LambdaPoly sum;
  for (std::size_t k = alpha; k <= m; ++k) sum += falling(Rational{k}, alpha) * weight(k);
  return sum;
}

void require(bool condition, const char* message) {
  if (!condition) throw BadParameter(message);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

std::size_t get(const MiscParams& params, std::string_view name) {
  const auto it = params.find(name);
  if (it == params.end()) throw BadParameter("missing parameter '" + std::string(name) + "'");
  return static_cast<std::size_t>(it->second);
}

}  // namespace

BaseTables BaseTables::build(std::size_t rows) {
  return BaseTables{s2_triangle(rows), s1_triangle(rows), bracket_triangle(rows), eulerian_triangle(rows),
                    bernoulli_numbers(rows)};
}

std::vector<XPoly> BaseTables::eulerian_polys() const {
  std::vector<XPoly> out;
  out.reserve(eulerian.size() + 1);
  for (std::size_t n = 0; n <= eulerian.size(); ++n) out.emplace_back(eulerian.row(n));
  return out;
}

IdentityResult verify_thm1(const BaseTables& tables, std::size_t alpha, std::size_t m,
                           const std::vector<Rational>& seq) {
  require(alpha >= 1 && alpha <= m, "verify_thm1 requires 1 <= alpha <= m");
  if (seq.size() != m) throw BadLength("sequence must hold a_1..a_m");
  const auto a = [&](std::size_t l) { return seq[l - 1]; };

  const LambdaPoly lhs = direct_falling_sum(alpha, m, a);

  // sum_{k=1}^{upper} S2(alpha,k) k! sum_{l=k}^{upper} C(l,k) a_l
  const auto block = [&](std::size_t upper) {
    LambdaPoly sum;
    for (std::size_t k = 1; k <= upper; ++k) {
      Rational inner;
      for (std::size_t l = k; l <= upper; ++l) inner += binomial(l, k) * a(l);
      sum += tables.s2.at(alpha, k) * (factorial(k) * inner);
    }
    return sum;
  };
  const LambdaPoly rhs = block(m) - block(alpha - 1);
  return compare("thm1", {nat("alpha", alpha), nat("m", m), {"a", ParamValue{seq}}}, lhs, rhs);
}

IdentityResult verify_thm1(std::size_t alpha, std::size_t m, const std::vector<Rational>& seq) {
  return verify_thm1(BaseTables::build(alpha), alpha, m, seq);
}

std::vector<IdentityResult> verify_sum_powers(const BaseTables& tables, std::size_t alpha, std::size_t m) {
  require(alpha >= 1 && alpha <= m, "verify_sum_powers requires 1 <= alpha <= m");
  const Triangle& s2 = tables.s2;
  const std::vector<Parameter> params{nat("alpha", alpha), nat("m", m)};
  const LambdaPoly lhs = direct_falling_sum(alpha, m, [](std::size_t) { return Rational{1}; });

  std::vector<IdentityResult> out;

  // hockey-stick collapsed
  const auto thm2_block = [&](std::size_t upper, std::size_t top) {
    LambdaPoly sum;
    for (std::size_t k = 1; k <= upper; ++k) sum += s2.at(alpha, k) * (factorial(k) * binomial(top, k + 1));
    return sum;
  };
  const LambdaPoly thm2_rhs = thm2_block(m, m + 1) - thm2_block(alpha - 1, alpha);
  out.push_back(compare("thm2", params, lhs, thm2_rhs));

  // shifted Stirling form
  const auto braces = [&](std::size_t k) { return s2.at(alpha + 1, k) + kLambda * s2.at(alpha, k) * Rational{alpha}; };
  const auto thm3_block = [&](std::size_t top) {
    LambdaPoly sum;
    for (std::size_t k = 1; k <= top; ++k) sum += braces(k) * (binomial(top, k) * factorial(k - 1));
    return sum;
  };
  const LambdaPoly thm3_rhs = thm3_block(m) - thm3_block(alpha - 1);
  out.push_back(compare("thm3", params, lhs, thm3_rhs));

  // Bernoulli difference
  const XPoly beta = bernoulli_poly(alpha + 1, tables.bernoulli);
  const LambdaPoly thm4_rhs = (beta.eval(LambdaPoly(Rational{m + 1})) - beta.eval(LambdaPoly(Rational{alpha}))) *
                              Rational{alpha + 1}.inverse();
  out.push_back(compare("thm4", params, lhs, thm4_rhs));

  // lambda-binomial form, with its own direct sum
  LambdaPoly binom_lhs;
  for (std::size_t k = alpha; k <= m; ++k) binom_lhs += lambda_binomial(Rational{k}, alpha);
  out.push_back(compare("eq23", params, binom_lhs, thm2_rhs * factorial(alpha).inverse()));
  return out;
}

std::vector<IdentityResult> verify_sum_powers(std::size_t alpha, std::size_t m) {
  return verify_sum_powers(BaseTables::build(alpha + 1), alpha, m);
}

IdentityResult verify_thm5(const BaseTables& tables, std::size_t alpha, std::size_t m, const Rational& x0) {
  if (x0.is_zero() || x0 == Rational{1}) throw DegenerateParameter("verify_thm5 requires x0 outside {0, 1}");
  require(alpha >= 1 && alpha <= m, "verify_thm5 requires 1 <= alpha <= m");
  const std::vector<Parameter> params{nat("alpha", alpha), nat("m", m), rat("x", x0)};
  const auto xp = [&](std::size_t k) { return x0.pow(static_cast<unsigned>(k)); };

  const LambdaPoly lhs = direct_falling_sum(alpha, m, xp);

  const FrobeniusTable frob = frobenius_numbers(alpha, x0.inverse());
  const XPoly h = frobenius_poly(alpha, frob);
  const LambdaPoly frob_rhs = (h.eval(LambdaPoly(Rational{m + 1})) * xp(m + 1) -
                               h.eval(LambdaPoly(Rational{alpha})) * xp(alpha)) *
                              (x0 - Rational{1}).inverse();

  // sum_{k=1}^{upper} S2(alpha,k) k! x^k sum_{l=0}^{upper-k} C(l+k,k) x^l
  const auto block = [&](std::size_t upper) {
    LambdaPoly sum;
    for (std::size_t k = 1; k <= upper; ++k) {
      Rational inner;
      for (std::size_t l = 0; l + k <= upper; ++l) inner += binomial(l + k, k) * xp(l);
      sum += tables.s2.at(alpha, k) * (factorial(k) * xp(k) * inner);
    }
    return sum;
  };
  const LambdaPoly stirling_rhs = block(m) - block(alpha - 1);

  if (lhs != frob_rhs) return compare("thm5", params, lhs, frob_rhs);
  return compare("thm5", params, frob_rhs, stirling_rhs);
}

IdentityResult verify_thm5(std::size_t alpha, std::size_t m, const Rational& x0) {
  return verify_thm5(BaseTables::build(alpha), alpha, m, x0);
}

IdentityResult verify_thm7(const BaseTables& tables, std::size_t n, std::size_t m, bool corrected) {
  require(n >= 1 && m >= 1, "verify_thm7 requires n, m >= 1");
  XPoly partial;
  for (std::size_t k = 1; k <= m; ++k) partial += x_pow(k) * falling(Rational{k}, n);
  const XPoly lhs = partial * one_minus_x_pow(n + 1);

  const XPoly a_n(tables.eulerian.row(n));
  XPoly tail;
  for (std::size_t l = 0; l <= n; ++l) {
    const XPoly a_l(tables.eulerian.row(l));
    const std::size_t shift = (corrected && l == 0) ? m + 1 : m + 2;
    tail += a_l * one_minus_x_pow(n - l) * x_pow(shift) * (falling(Rational{m + 1}, n - l) * binomial(n, l));
  }
  const XPoly rhs = x_pow(1) * a_n - tail;
  IdentityResult r = compare(corrected ? "thm7" : "thm7_verbatim", {nat("n", n), nat("m", m)}, lhs, rhs);
  r.expected_fail = !corrected && !r.passed;
  return r;
}

IdentityResult verify_thm7(std::size_t n, std::size_t m, bool corrected) {
  return verify_thm7(BaseTables::build(n), n, m, corrected);
}

std::vector<IdentityResult> verify_thm11(const BaseTables& tables, std::size_t m, bool corrected) {
  const Triangle& br = tables.bracket;
  std::vector<IdentityResult> out;
  for (std::size_t j = 0; j <= m; ++j) {
    const LambdaPoly& lhs = br.at(m + 1, j + 1);
    LambdaPoly rhs;
    for (std::size_t k = j; k <= m; ++k) {
      const LambdaPoly first = br.at(m, k) * rising(Rational{1}, k - j);
      // <L>_{i,L} = L(2L)...(iL) = i! L^i
      const LambdaPoly weight = corrected ? LambdaPoly::monomial(factorial(k - j), k - j) : rising(Rational{1}, k - j);
      const LambdaPoly second = kLambda * br.at(m + 1, k + 2) * weight * Rational{k + 1};
      rhs += (first - second) * binomial(k, j);
    }
    IdentityResult r = compare(corrected ? "thm11" : "thm11_verbatim", {nat("m", m), nat("j", j)}, lhs, rhs);
    r.expected_fail = !corrected && !r.passed;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IdentityResult> verify_thm11(std::size_t m, bool corrected) {
  return verify_thm11(BaseTables::build(m + 1), m, corrected);
}

IdentityResult verify_misc(const BaseTables& tables, std::string_view id, const MiscParams& params) {
  if (id == "hockey_stick") {
    const std::size_t k = get(params, "k");
    const std::size_t m = get(params, "m");
    Rational sum;
    for (std::size_t l = k; l <= m; ++l) sum += binomial(l, k);
    return compare("hockey_stick", {nat("k", k), nat("m", m)}, LambdaPoly(sum), LambdaPoly(binomial(m + 1, k + 1)));
  }
  if (id == "eq24") {
    const std::size_t n = get(params, "n");
    const std::size_t m = get(params, "m");
    LambdaPoly sum;
    for (std::size_t k = 0; k <= m; ++k) sum += tables.s1.at(m, k) * falling(Rational{n}, k);
    return compare("eq24", {nat("n", n), nat("m", m)}, sum * factorial(m).inverse(), LambdaPoly(binomial(n, m)));
  }
  if (id == "bernoulli_reflection") {
    const std::size_t n = get(params, "n");
    const XPoly beta = bernoulli_poly(n, tables.bernoulli);
    const XPoly one_minus_x{LambdaPoly(Rational{1}), LambdaPoly(Rational{-1})};
    return compare("bernoulli_reflection", {nat("n", n)}, beta.compose(one_minus_x),
                   negate_lambda(beta) * LambdaPoly(sign_pow(n)));
  }
  if (id == "eq26_1") {
    const std::size_t alpha = get(params, "alpha");
    const std::size_t m = get(params, "m");
    require(alpha >= 1, "eq26_1 requires alpha >= 1");
    LambdaPoly lhs;
    LambdaPoly rhs;
    for (std::size_t j = 1; j <= m; ++j) {
      lhs += (tables.s2.at(alpha + 1, j) + kLambda * tables.s2.at(alpha, j) * Rational{alpha}) *
             (binomial(m, j) * factorial(j - 1));
      rhs += tables.s2.at(alpha, j) * (binomial(m + 1, j + 1) * factorial(j));
    }
    return compare("eq26_1", {nat("alpha", alpha), nat("m", m)}, lhs, rhs);
  }
  if (id == "eulerian_top_vanishes") {
    const std::size_t n = get(params, "n");
    require(n >= 1, "eulerian_top_vanishes requires n >= 1");
    return compare("eulerian_top_vanishes", {nat("n", n)}, tables.eulerian.at(n, n), LambdaPoly{});
  }
  throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

IdentityResult verify_misc(std::string_view id, const MiscParams& params) {
  std::size_t rows = 0;
  for (const auto& [name, value] : params) rows = std::max<std::size_t>(rows, value + 1);
  return verify_misc(BaseTables::build(rows), id, params);
}

IdentityResult verify_bernoulli_gf(const BaseTables& tables, std::size_t order) {
  if (tables.bernoulli.max_n < order) throw InsufficientTable("Bernoulli table too short");
  const std::vector<LambdaPoly> numbers(tables.bernoulli.numbers.begin(),
                                        tables.bernoulli.numbers.begin() + static_cast<std::ptrdiff_t>(order + 1));
  const LambdaSeries product =
      (degenerate_exp(Rational{1}, order) - LambdaSeries::one(order)) * exponential_series(numbers);
  const XPoly lhs(product.coefficients());
  const XPoly rhs = order >= 1 ? x_pow(1) : XPoly{};
  return compare("bernoulli_gf", {nat("order", order)}, lhs, rhs);
}

IdentityResult verify_frobenius_gf(std::size_t order, const Rational& u) {
  const FrobeniusTable table = frobenius_numbers(order, u);
  const LambdaSeries product =
      (degenerate_exp(Rational{1}, order) - LambdaSeries::constant(LambdaPoly(u), order)) *
      exponential_series(table.numbers);
  return compare("frobenius_gf", {nat("order", order), rat("u", u)}, XPoly(product.coefficients()),
                 XPoly(LambdaPoly(Rational{1} - u)));
}

IdentityResult verify_thm6(const BaseTables& tables, std::size_t n, std::size_t order) {
  require(order >= n + 1, "verify_thm6 requires order > n");
  const XPoly reconstructed = eulerian_gf_reconstruct(n, order);
  const XPoly candidate(tables.eulerian.row(n));
  // Compare on the window the truncation determines.
  std::vector<LambdaPoly> window;
  for (std::size_t d = 0; d <= order - (n + 1); ++d) window.push_back(candidate[d]);
  return compare("thm6", {nat("n", n), nat("order", order)}, XPoly(std::move(window)), reconstructed);
}

IdentityResult verify_thm9_egf(const BaseTables& tables, std::size_t order, const Rational& t0) {
  const std::vector<LambdaPoly> values = eulerian_egf_values(order, t0);
  std::vector<LambdaPoly> expected;
  for (std::size_t n = 0; n <= order; ++n) expected.push_back(XPoly(tables.eulerian.row(n)).eval(LambdaPoly(t0)));
  return compare("thm9_egf", {nat("order", order), rat("t", t0)}, XPoly(values), XPoly(std::move(expected)));
}

IdentityResult verify_thm10(const BaseTables& tables, std::size_t n) {
  return compare("thm10", {nat("n", n)}, XPoly(tables.eulerian.row(n)), eulerian_poly_recurrence(n).poly);
}

IdentityResult verify_carlitz(const BaseTables& tables, std::size_t n) {
  require(n >= 1, "verify_carlitz requires n >= 1");
  return compare("carlitz", {nat("n", n)}, carlitz_poly(n, 2 * n + 2), x_pow(1) * XPoly(tables.eulerian.row(n)));
}

IdentityResult verify_row_sum(const BaseTables& tables, std::size_t n) {
  LambdaPoly sum;
  for (const LambdaPoly& c : tables.eulerian.row(n)) sum += c;
  return compare("eulerian_row_sum", {nat("n", n)}, sum, LambdaPoly(factorial(n)));
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : {Suite::All, Suite::Thm1, Suite::Thm2to4, Suite::Thm5, Suite::Thm7, Suite::Thm11, Suite::Misc,
                  Suite::Gf}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Thm1: return "thm1";
    case Suite::Thm2to4: return "thm2-4";
    case Suite::Thm5: return "thm5";
    case Suite::Thm7: return "thm7";
    case Suite::Thm11: return "thm11";
    case Suite::Misc: return "misc";
    case Suite::Gf: return "gf";
  }
  return "?";
}

Rational sample_rational(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t state = splitmix64(seed ^ splitmix64(stream * 0x100000001b3ULL + index));
  for (;;) {
    state = splitmix64(state);
    const auto num = static_cast<std::int64_t>(state % 21) - 10;
    state = splitmix64(state);
    const auto den = static_cast<std::int64_t>(state % 10) + 1;
    Rational r(num, den);
    if (!r.is_zero() && r != Rational{1}) return r;
  }
}

SuiteConfig resolve(SuiteConfig config) {
  const auto fill = [&](std::vector<Rational>& samples, std::uint64_t stream) {
    if (samples.empty()) {
      for (std::size_t i = 0; i < config.sample_count; ++i) samples.push_back(sample_rational(config.seed, stream, i));
    }
    for (const Rational& r : samples) {
      if (r.is_zero() || r == Rational{1}) throw BadParameter("samples must avoid 0 and 1");
    }
  };
  fill(config.x_samples, 1);
  fill(config.t_samples, 2);
  return config;
}

std::size_t required_rows(const SuiteConfig& config) {
  return std::max({config.alpha_max + 1, config.m_max + 1, config.n_max, config.egf_order, std::size_t{1}});
}

std::vector<IdentityResult> run_suite(const SuiteConfig& config, Suite suite) {
  return run_suite(config, suite, BaseTables::build(required_rows(config)));
}

std::vector<IdentityResult> run_suite(const SuiteConfig& raw_config, Suite suite, const BaseTables& tables) {
  const SuiteConfig config = resolve(raw_config);
  const auto wants = [&](Suite s) { return suite == Suite::All || suite == s; };
  std::vector<IdentityResult> out;
  const auto append = [&](std::vector<IdentityResult> rs) {
    for (auto& r : rs) out.push_back(std::move(r));
  };

  if (wants(Suite::Thm1)) {
    for (std::size_t alpha = 1; alpha <= config.alpha_max; ++alpha) {
      for (std::size_t m = alpha; m <= config.m_max; ++m) {
        out.push_back(verify_thm1(tables, alpha, m, std::vector<Rational>(m, Rational{1})));
        for (std::size_t s = 0; s < config.sample_count; ++s) {
          const std::uint64_t stream = 3 + ((alpha * 4096 + m) * 64 + s);
          std::vector<Rational> seq;
          for (std::size_t l = 0; l < m; ++l) seq.push_back(sample_rational(config.seed, stream, l));
          out.push_back(verify_thm1(tables, alpha, m, seq));
        }
      }
    }
  }
  if (wants(Suite::Thm2to4)) {
    for (std::size_t alpha = 1; alpha <= config.alpha_max; ++alpha) {
      for (std::size_t m = alpha; m <= config.m_max; ++m) append(verify_sum_powers(tables, alpha, m));
    }
  }
  if (wants(Suite::Thm5)) {
    for (std::size_t alpha = 1; alpha <= config.alpha_max; ++alpha) {
      for (std::size_t m = alpha; m <= config.m_max; ++m) {
        for (const Rational& x0 : config.x_samples) out.push_back(verify_thm5(tables, alpha, m, x0));
      }
    }
  }
  if (wants(Suite::Thm7)) {
    for (std::size_t n = 1; n <= config.n_max; ++n) {
      for (std::size_t m = 1; m <= config.m_max; ++m) {
        out.push_back(verify_thm7(tables, n, m, true));
        out.push_back(verify_thm7(tables, n, m, false));
      }
    }
  }
  if (wants(Suite::Thm11)) {
    for (std::size_t m = 0; m <= config.m_max; ++m) {
      append(verify_thm11(tables, m, true));
      append(verify_thm11(tables, m, false));
    }
  }
  if (wants(Suite::Misc)) {
    for (std::size_t k = 0; k <= config.m_max; ++k) {
      for (std::size_t m = k; m <= config.m_max; ++m) out.push_back(verify_misc(tables, "hockey_stick", {{"k", k}, {"m", m}}));
    }
    for (std::size_t n = 0; n <= config.n_max; ++n) {
      for (std::size_t m = 0; m <= n; ++m) out.push_back(verify_misc(tables, "eq24", {{"n", n}, {"m", m}}));
    }
    for (std::size_t n = 0; n <= config.n_max; ++n) out.push_back(verify_misc(tables, "bernoulli_reflection", {{"n", n}}));
    for (std::size_t alpha = 1; alpha <= config.alpha_max; ++alpha) {
      for (std::size_t m = 1; m <= config.m_max; ++m) {
        out.push_back(verify_misc(tables, "eq26_1", {{"alpha", alpha}, {"m", m}}));
      }
    }
    for (std::size_t n = 1; n <= config.n_max; ++n) out.push_back(verify_misc(tables, "eulerian_top_vanishes", {{"n", n}}));
  }
  if (wants(Suite::Gf)) {
    out.push_back(verify_bernoulli_gf(tables, config.n_max));
    for (const Rational& u : config.x_samples) out.push_back(verify_frobenius_gf(config.n_max, u));
    for (std::size_t n = 0; n <= config.n_max; ++n) out.push_back(verify_thm6(tables, n, n + 12));
    for (std::size_t n = 0; n <= config.n_max; ++n) out.push_back(verify_row_sum(tables, n));
    for (std::size_t n = 1; n <= config.n_max; ++n) out.push_back(verify_thm10(tables, n));
    for (std::size_t n = 1; n <= config.n_max; ++n) out.push_back(verify_carlitz(tables, n));
    std::vector<Rational> points = config.egf_points;
    for (const Rational& t0 : config.t_samples) {
      if (std::find(points.begin(), points.end(), t0) == points.end()) points.push_back(t0);
    }
    for (const Rational& t0 : points) out.push_back(verify_thm9_egf(tables, config.egf_order, t0));
  }
  return out;
}

std::size_t unexpected_failures(const std::vector<IdentityResult>& results) {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const IdentityResult& r) { return !r.passed && !r.expected_fail; }));
}

}  // namespace degen
