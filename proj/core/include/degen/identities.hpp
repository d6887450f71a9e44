#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "degen/appell.hpp"
#include "degen/lambda_poly.hpp"
#include "degen/stirling.hpp"

namespace degen {

using ParamValue = std::variant<std::uint64_t, Rational, std::vector<Rational>>;

struct Parameter {
  std::string name;
  ParamValue value;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

/// Outcome of one exact check. lhs/rhs are the canonical renderings of the
/// two sides and are only present when the check failed.
struct IdentityResult {
  std::string identity_id;
  std::vector<Parameter> parameters;
  bool passed = false;
  /// Set on failures of statements known to be false as written (verbatim forms).
  bool expected_fail = false;
  std::optional<std::string> lhs;
  std::optional<std::string> rhs;

  friend bool operator==(const IdentityResult&, const IdentityResult&) = default;
};

/// The precomputed tables every verifier reads. Verifiers share nothing else
/// between the two sides they compare.
struct BaseTables {
  Triangle s2;
  Triangle s1;
  Triangle bracket;
  Triangle eulerian;
  BernoulliTable bernoulli;

  /// Every table sized to `rows`.
  static BaseTables build(std::size_t rows);

  /// A_{n,L}(t) for n = 0..eulerian.size(), assembled from the Eulerian rows.
  [[nodiscard]] std::vector<XPoly> eulerian_polys() const;
};

// sum_{k=a}^m (k)_{a,L} a_k against its degenerate Stirling form. `seq` holds a_1..a_m.
IdentityResult verify_thm1(const BaseTables& tables, std::size_t alpha, std::size_t m, const std::vector<Rational>& seq);
IdentityResult verify_thm1(std::size_t alpha, std::size_t m, const std::vector<Rational>& seq);

// Power sums sum_{k=a}^m (k)_{a,L} against the binomial, shifted Stirling,
// Bernoulli difference and lambda-binomial closed forms, in that order.
std::vector<IdentityResult> verify_sum_powers(const BaseTables& tables, std::size_t alpha, std::size_t m);
std::vector<IdentityResult> verify_sum_powers(std::size_t alpha, std::size_t m);

// sum_{k=a}^m (k)_{a,L} x0^k against its Frobenius-Euler and Stirling forms, at u = 1/x0.
IdentityResult verify_thm5(const BaseTables& tables, std::size_t alpha, std::size_t m, const Rational& x0);
IdentityResult verify_thm5(std::size_t alpha, std::size_t m, const Rational& x0);

// Partial power sum sum_{k=1}^m (k)_{n,L} x^k in Eulerian form,
// with denominators cleared by (1-x)^{n+1}. corrected = false is the
// verbatim statement, which puts x^{m+2} on the l = 0 term as well.
IdentityResult verify_thm7(const BaseTables& tables, std::size_t n, std::size_t m, bool corrected);
IdentityResult verify_thm7(std::size_t n, std::size_t m, bool corrected);

// Bracket-sum recurrence for [m+1, j+1]_L, every j = 0..m. corrected = false is the
// verbatim statement with <1>_{k-j,L} weights throughout; the corrected one uses
// <L>_{k-j,L} = (k-j)! L^{k-j} in the second term.
std::vector<IdentityResult> verify_thm11(const BaseTables& tables, std::size_t m, bool corrected);
std::vector<IdentityResult> verify_thm11(std::size_t m, bool corrected);

using MiscParams = std::map<std::string, std::uint64_t, std::less<>>;

/// id: hockey_stick {k, m}, eq24 {n, m}, bernoulli_reflection {n},
/// eq26_1 {alpha, m}, eulerian_top_vanishes {n}. Throws UnknownIdentity.
IdentityResult verify_misc(const BaseTables& tables, std::string_view id, const MiscParams& params);
IdentityResult verify_misc(std::string_view id, const MiscParams& params);

// Generating-function checks against the base tables.
IdentityResult verify_bernoulli_gf(const BaseTables& tables, std::size_t order);
IdentityResult verify_frobenius_gf(std::size_t order, const Rational& u);
IdentityResult verify_thm6(const BaseTables& tables, std::size_t n, std::size_t order);
IdentityResult verify_thm9_egf(const BaseTables& tables, std::size_t order, const Rational& t0);
IdentityResult verify_thm10(const BaseTables& tables, std::size_t n);
IdentityResult verify_carlitz(const BaseTables& tables, std::size_t n);
IdentityResult verify_row_sum(const BaseTables& tables, std::size_t n);

enum class Suite { All, Thm1, Thm2to4, Thm5, Thm7, Thm11, Misc, Gf };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct SuiteConfig {
  std::size_t alpha_max = 6;
  std::size_t m_max = 10;
  std::size_t n_max = 8;
  std::size_t sample_count = 3;
  std::uint64_t seed = 42;
  /// Drawn from the seed when empty. Must not contain 0 or 1.
  std::vector<Rational> x_samples;
  std::vector<Rational> t_samples;
  std::size_t egf_order = 10;
  std::vector<Rational> egf_points{Rational{2}, Rational{-1}, Rational{1, 2}};
};

/// Small-height rational (|num| <= 10, 1 <= den <= 10), never 0 or 1, drawn
/// deterministically from (seed, stream, index).
Rational sample_rational(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Fills in x_samples and t_samples from the seed where they are empty.
SuiteConfig resolve(SuiteConfig config);

/// Table size that covers every check the config enumerates.
std::size_t required_rows(const SuiteConfig& config);

/// Every check within the config bounds, in canonical order.
std::vector<IdentityResult> run_suite(const SuiteConfig& config, Suite suite = Suite::All);
std::vector<IdentityResult> run_suite(const SuiteConfig& config, Suite suite, const BaseTables& tables);

/// Failures not flagged as expected.
std::size_t unexpected_failures(const std::vector<IdentityResult>& results);

}  // namespace degen
