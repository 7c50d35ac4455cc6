#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "ineqcert/cli.hpp"

namespace ineqcert {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("ineqcert_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliTest, CheckRadonHolds) {
  const Result r = invoke({"--machine", "check", "radon", "--a", "1,2", "--b", "1,3", "--m", "2"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_TRUE(contains(r.out, R"("outcome":"Holds")"));
  EXPECT_TRUE(contains(r.out, R"("lhs_exact":"17/9")"));
  EXPECT_TRUE(contains(r.out, R"("rhs_exact":"27/16")"));
}

TEST(CliTest, DomainAndParseErrorsExitThree) {
  const Result domain = invoke({"--machine", "check", "radon", "--a", "1,2", "--b", "1,3", "--m", "-1/2"});
  EXPECT_EQ(domain.code, kExitInputError);
  EXPECT_TRUE(contains(domain.out, "-1 < m < 0"));
  const Result parse = invoke({"check", "radon", "--a", "1/0", "--b", "1", "--m", "1"});
  EXPECT_EQ(parse.code, kExitInputError);
  EXPECT_TRUE(contains(parse.err, "parse error"));
  EXPECT_EQ(invoke({"check", "nosuchfamily", "--a", "1"}).code, kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitInputError);
}

TEST(CliTest, HumanModeLabelsApproximation) {
  const Result r = invoke({"check", "bergstrom", "--x", "1,2", "--y", "1,1"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_TRUE(contains(r.out, "approximate"));
  EXPECT_TRUE(contains(r.out, "*2^"));
}

TEST(CliTest, ExitCodesPartitionOutcomes) {
  EXPECT_EQ(invoke({"check", "radon", "--a", "1,1", "--b", "2,2", "--m", "3"}).code, kExitHolds);
  const Result fuzz = invoke({"--machine", "fuzz", "--family", "radon-general", "--violate", "r < s+1", "--fix",
                              "r=1,s=1", "--trials", "10000"});
  EXPECT_EQ(fuzz.code, kExitViolated);
  EXPECT_TRUE(contains(fuzz.out, R"("outcome":"Violated")"));
  const Result none = invoke({"--machine", "fuzz", "--family", "radon-general", "--fix", "r=3,s=1", "--trials", "50"});
  EXPECT_EQ(none.code, kExitHolds);
  EXPECT_TRUE(contains(none.out, "NoneFound"));
  // Margin near 1e-62 cannot be separated at 64 bits.
  const std::vector<std::string> close{"check", "power-mean", "--a",
                                       "2,2000000000000000000000000000001/1000000000000000000000000000000",
                                       "--b", "1,1", "--r", "3/2", "--s", "1/2"};
  std::vector<std::string> narrow{"--precision", "64"};
  narrow.insert(narrow.end(), close.begin(), close.end());
  EXPECT_EQ(invoke(narrow).code, kExitIndeterminate);
  EXPECT_EQ(invoke(close).code, kExitHolds);
}

TEST(CliTest, InstanceFileExclusiveWithInlineValues) {
  const std::string path =
      write_temp("radon.json", R"({"family": "Radon", "a": ["1", "2"], "b": ["1", "3"], "params": {"m": "2"}})");
  EXPECT_EQ(invoke({"check", "--instance", path}).code, kExitHolds);
  EXPECT_EQ(invoke({"check", "radon", "--instance", path}).code, kExitHolds);
  EXPECT_EQ(invoke({"check", "--instance", path, "--m", "3"}).code, kExitInputError);
  EXPECT_EQ(invoke({"check", "bergstrom", "--instance", path}).code, kExitInputError);
}

TEST(CliTest, MachineOutputIsByteStable) {
  const std::vector<std::string> args{"--machine", "check", "radon-general", "--a", "1,2", "--b", "1,3", "--r",
                                      "5/2", "--s", "1"};
  const Result first = invoke(args);
  EXPECT_EQ(first.code, kExitHolds);
  EXPECT_EQ(invoke(args).out, first.out);
  EXPECT_EQ(std::count(first.out.begin(), first.out.end(), '\n'), 1);
}

TEST(CliTest, PrecisionBudgetFromEnvironment) {
  ::setenv("INEQCERT_PRECISION_BUDGET", "128", 1);
  const Result r = invoke({"--machine", "check", "cauchy-schwarz", "--a", "1,2", "--b", "2,1"});
  ::unsetenv("INEQCERT_PRECISION_BUDGET");
  EXPECT_EQ(r.code, kExitHolds);
  ::setenv("INEQCERT_PRECISION_BUDGET", "zero", 1);
  EXPECT_EQ(invoke({"check", "cauchy-schwarz", "--a", "1,2", "--b", "2,1"}).code, kExitInputError);
  ::unsetenv("INEQCERT_PRECISION_BUDGET");
}

TEST(CliTest, PropositionsAndSubstitution) {
  EXPECT_EQ(invoke({"check", "unit-product", "--x", "2", "--y", "1/2", "--z", "1"}).code, kExitHolds);
  EXPECT_EQ(invoke({"check", "unit-product", "--x", "2", "--y", "2", "--z", "1"}).code, kExitInputError);
  const Result nesbitt = invoke({"--machine", "check", "triangle", "--a", "1", "--b", "1", "--c", "1", "--n", "1"});
  EXPECT_TRUE(contains(nesbitt.out, "EqualityCertified"));
  EXPECT_EQ(invoke({"check", "constrained-sum", "--a", "1,2", "--p", "2", "--q", "1"}).code, kExitHolds);
  EXPECT_EQ(invoke({"check", "substitution", "--a", "1,2", "--c", "4,1", "--m", "1"}).code, kExitHolds);
}

TEST(CliTest, EqualityAndReduce) {
  const std::string radon =
      write_temp("prop.json", R"({"family": "Radon", "a": ["2", "4"], "b": ["1", "2"], "params": {"m": "1"}})");
  const Result eq = invoke({"--machine", "equality", radon});
  EXPECT_EQ(eq.code, kExitHolds);
  EXPECT_TRUE(contains(eq.out, R"("proportional":true)"));
  const Result red = invoke({"--machine", "reduce", "powermean-to-radon", radon});
  EXPECT_EQ(red.code, kExitHolds);
  EXPECT_TRUE(contains(red.out, R"("identity_checked":true)"));
  EXPECT_TRUE(contains(red.out, R"("family":"PowerMean")"));
  const std::string mean = write_temp(
      "mean.json", R"({"family": "PowerMean", "a": ["3", "4"], "b": ["1", "2"], "params": {"r": "2", "s": "1"}})");
  const Result back = invoke({"--machine", "reduce", "radon-to-powermean", mean});
  EXPECT_TRUE(contains(back.out, R"("a":["3","8"])"));
  EXPECT_EQ(invoke({"reduce", "sideways", mean}).code, kExitInputError);
}

TEST(CliTest, IntegralCheck) {
  const Result r = invoke({"--machine", "integral-check", "--f", R"([{"lo":"0","hi":"1","coeffs":["1","1"]}])",
                           "--interval", "0,1", "--m", "1"});
  EXPECT_EQ(r.code, kExitHolds);
  EXPECT_TRUE(contains(r.out, R"("lhs_exact":"7/3")"));
  const Result general = invoke({"integral-check", "--f", R"([{"lo":"0","hi":"1","coeffs":["1","1"]}])", "--r",
                                 "1", "--s", "1"});
  EXPECT_EQ(general.code, kExitInputError);
}

}  // namespace
}  // namespace ineqcert
