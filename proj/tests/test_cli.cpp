#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "degen/wire.hpp"

namespace degen::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

TEST(CliTable, S2Json) {
  const auto r = invoke({"table", "--family", "s2", "--rows", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["family"], "s2");
  ASSERT_EQ(j["rows"].size(), 3U);
  EXPECT_EQ(j["rows"][2], (std::vector<std::string>{"0", "1 + -1*L", "1"}));
}

TEST(CliTable, EulerianAtLambdaZero) {
  const auto r = invoke({"table", "--family", "eulerian", "--rows", "4", "--lambda", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][2], (std::vector<std::string>{"1", "1", "0"}));
  EXPECT_EQ(j["rows"][4], (std::vector<std::string>{"1", "11", "11", "1", "0"}));
}

TEST(CliTable, Csv) {
  const auto r = invoke({"table", "--family", "bracket", "--rows", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3U);
  EXPECT_EQ(ls[0], "\"1\"");
  EXPECT_EQ(ls[2], "\"0\",\"1 + -1*L\",\"1\"");
}

TEST(CliTable, EveryCellRoundTrips) {
  for (const char* family : {"s1", "s2", "bracket", "eulerian"}) {
    const auto r = invoke({"table", "--family", family, "--rows", "7"});
    ASSERT_EQ(r.code, kOk);
    for (const auto& row : nlohmann::json::parse(r.out)["rows"]) {
      for (const auto& cell : row) {
        const auto s = cell.get<std::string>();
        ASSERT_EQ(render(parse_poly(s)), s);
      }
    }
  }
}

TEST(CliTable, UsageErrors) {
  EXPECT_EQ(invoke({"table", "--family", "s2", "--rows", "99"}).code, kUsage);
  EXPECT_EQ(invoke({"table", "--family", "s3", "--rows", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"table", "--family", "s2", "--rows", "2", "--lambda", "x"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(CliEval, Bernoulli) {
  const auto r = invoke({"eval", "--family", "bernoulli", "--n", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "(-1/2 + 1/2*L) + 1*x\n");
}

TEST(CliEval, Frobenius) {
  const auto r = invoke({"eval", "--family", "frobenius", "--n", "1", "--u", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "1 + 1*x\n");
  EXPECT_EQ(invoke({"eval", "--family", "frobenius", "--n", "1", "--u", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "frobenius", "--n", "1"}).code, kUsage);
}

TEST(CliEval, PointEvaluation) {
  const auto r = invoke({"eval", "--family", "frobenius", "--n", "1", "--u", "1/2", "--x", "3"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "1\n");
  const auto e = invoke({"eval", "--family", "eulerian-poly", "--n", "4", "--x", "1", "--lambda", "0"});
  ASSERT_EQ(e.code, kOk) << e.err;
  EXPECT_EQ(e.out, "24\n");
  const auto c = invoke({"eval", "--family", "carlitz", "--n", "2", "--lambda", "0"});
  ASSERT_EQ(c.code, kOk) << c.err;
  EXPECT_EQ(c.out, "1*x + 1*x^2\n");
}

TEST(CliVerify, Thm7ReportsExpectedFailures) {
  const auto r = invoke({"verify", "--suite", "thm7", "--seed", "1"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::size_t flagged = 0;
  for (const auto& l : lines(r.out)) {
    const auto j = nlohmann::json::parse(l);
    if (j.contains("expected_fail")) {
      EXPECT_EQ(j["expected_fail"], true);
      EXPECT_EQ(j["passed"], false);
      ++flagged;
    }
  }
  EXPECT_GE(flagged, 1U);
  EXPECT_NE(r.out.find("\"expected_fail\":true"), std::string::npos);
}

TEST(CliVerify, ReportFieldOrder) {
  const auto r = invoke({"verify", "--suite", "thm7", "--n-max", "1", "--m-max", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4U);
  EXPECT_EQ(ls[0], R"({"identity_id":"thm7","parameters":{"n":1,"m":1},"passed":true})");
  EXPECT_EQ(ls[3],
            R"({"identity_id":"thm7_verbatim","parameters":{"n":1,"m":2},"passed":false,"expected_fail":true,)"
            R"("lhs":"1*x + -3*x^3 + 2*x^4","rhs":"1*x + -4*x^4 + 3*x^5"})");
}

TEST(CliVerify, ReportFileAndDeterminism) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "degen_cli_test_a.jsonl";
  const auto b = dir / "degen_cli_test_b.jsonl";
  const std::vector<std::string> base{"verify", "--suite", "all", "--seed", "42", "--m-max", "4", "--n-max", "4"};
  auto args_a = base;
  args_a.insert(args_a.end(), {"--report", a.string()});
  auto args_b = base;
  args_b.insert(args_b.end(), {"--report", b.string()});
  ASSERT_EQ(invoke(args_a).code, kOk);
  ASSERT_EQ(invoke(args_b).code, kOk);
  const auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  const std::string text = slurp(a);
  EXPECT_FALSE(text.empty());
  EXPECT_EQ(text, slurp(b));
  EXPECT_EQ(text, invoke(base).out);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--seed", "minus-one"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--suite", "misc", "--report", "/nonexistent-dir/x/report.jsonl"}).code, kUsage);
}

TEST(CliVerify, Help) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace degen::cli
