#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "degen/identities.hpp"
#include "degen/stirling.hpp"

namespace degen::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

inline constexpr std::size_t kMaxRows = 64;

enum class OutputFormat { Json, Csv };

/// {"family": ..., "rows": [[...], ...]}; entries rendered as lambda
/// polynomials, or as rationals when `lambda` is set.
std::string triangle_json(const Triangle& t, const std::optional<Rational>& lambda);
/// One line per row, every cell a quoted string.
std::string triangle_csv(const Triangle& t, const std::optional<Rational>& lambda);

/// One report line; keys in the order identity_id, parameters, passed,
/// expected_fail (only when set), lhs, rhs (only on failure).
nlohmann::ordered_json to_json(const IdentityResult& r);
std::string to_jsonl(const std::vector<IdentityResult>& results);

/// Full command-line entry point; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace degen::cli
