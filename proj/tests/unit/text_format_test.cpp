#include <random>

#include <gtest/gtest.h>

#include "ineqcert/inequalities.hpp"
#include "ineqcert/text_format.hpp"
#include "test_support.hpp"

namespace ineqcert {
namespace {

using testing::Q;
using testing::V;

ParseError parse_error_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error for " << text;
  return ParseError("none");
}

TEST(InstanceFormatTest, MinimalBergstrom) {
  const InequalityInstance inst = parse_instance(R"({"family": "bergstrom", "a": ["1", "1"], "b": ["1", "1"]})");
  EXPECT_EQ(inst.family, Family::Bergstrom);
  EXPECT_EQ(inst.a, V({"1", "1"}));
  EXPECT_NO_THROW(validate_domain(inst));
}

TEST(InstanceFormatTest, CanonicalRoundTrip) {
  const std::string text = R"({"family": "Radon", "a": ["2/4", "-6/3"], "b": ["1", "3"], "params": {"m": "4/2"}})";
  const InequalityInstance inst = parse_instance(text);
  const std::string canonical = serialize_instance(inst);
  EXPECT_EQ(canonical, R"({"family":"Radon","a":["1/2","-2"],"b":["1","3"],"params":{"m":"2"}})");
  EXPECT_EQ(parse_instance(canonical), inst);
}

TEST(InstanceFormatTest, RandomRoundTrip) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    InequalityInstance inst;
    inst.family = kAllFamilies[rng() % std::size(kAllFamilies)];
    const std::size_t n = inst.family == Family::Bernoulli ? 1 : 1 + rng() % 4;
    for (std::size_t k = 0; k < n; ++k) {
      inst.a.push_back(testing::random_rational(rng, -50, 50, 40));
      if (uses_b(inst.family)) inst.b.push_back(testing::random_rational(rng, -50, 50, 40));
      if (uses_w(inst.family)) inst.w.push_back(testing::random_rational(rng, 0, 1, 40));
    }
    for (const std::string& p : required_params(inst.family)) inst.params[p] = testing::random_rational(rng, -9, 9);
    const InequalityInstance back = parse_instance(serialize_instance(inst));
    EXPECT_EQ(back, inst);
    EXPECT_EQ(serialize_instance(back), serialize_instance(inst));
  }
}

TEST(InstanceFormatTest, Rejections) {
  EXPECT_NE(std::string(parse_error_of(R"({"family": "radon", "a": ["1"], "b": ["1"]})").what()).find("missing "
                                                                                                     "parameter m"),
            std::string::npos);
  const ParseError bad = parse_error_of("{\"family\": \"radon\",\n \"a\": [\"1/0\"], \"b\": [\"1\"], "
                                        "\"params\": {\"m\": \"1\"}}");
  EXPECT_EQ(bad.line(), 2u);
  EXPECT_EQ(bad.column(), 8u);
  EXPECT_GT(parse_error_of(R"({"family": "nope", "a": ["1"]})").column(), 0u);
  parse_error_of(R"({"family": "radon", "a": ["1", "2"], "b": ["1"], "params": {"m": "1"}})");
  parse_error_of(R"({"family": "radon", "a": [1], "b": ["1"], "params": {"m": "1"}})");
  const ParseError truncated = parse_error_of("{\"family\": \n\"radon\", ");
  EXPECT_EQ(truncated.line(), 2u);
}

TEST(VerdictFormatTest, FieldsAndStability) {
  const Verdict v = check_radon(V({"1", "2"}), V({"1", "3"}), Q("2"));
  const std::string line = serialize_verdict(v);
  EXPECT_EQ(line.find('\n'), std::string::npos);
  EXPECT_EQ(line.rfind(R"({"outcome":"Holds","relation":">=","lhs":[)", 0), 0u);
  EXPECT_NE(line.find(R"("rhs":["27*2^-4","27*2^-4"])"), std::string::npos);
  EXPECT_NE(line.find(R"("lhs_exact":"17/9")"), std::string::npos);
  EXPECT_NE(line.find(R"("precision_used":)"), std::string::npos);
  EXPECT_EQ(serialize_verdict(check_radon(V({"1", "2"}), V({"1", "3"}), Q("2"))), line);
}

TEST(PiecewiseFormatTest, RoundTripAndErrors) {
  const PiecewisePoly f = parse_piecewise(R"([{"lo": "0", "hi": "1/2", "coeffs": ["1", "2/4"]},
                                              {"lo": "1/2", "hi": "1", "coeffs": ["3"]}])");
  EXPECT_EQ(f.segments().size(), 2u);
  EXPECT_EQ(parse_piecewise(serialize_piecewise(f)), f);
  EXPECT_THROW(parse_piecewise(R"([{"lo": "0", "hi": "1", "coeffs": ["1"]}, {"lo": "2", "hi": "3", "coeffs": []}])"),
               ParseError);
  EXPECT_THROW(parse_piecewise(R"({"lo": "0"})"), ParseError);
}

TEST(RationalListTest, ParsesAndLocatesErrors) {
  EXPECT_EQ(parse_rational_list("1,2/3,-4"), V({"1", "2/3", "-4"}));
  try {
    parse_rational_list("1,2/x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 5u);
  }
}

}  // namespace
}  // namespace ineqcert
