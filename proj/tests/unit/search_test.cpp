#include <gtest/gtest.h>

#include "ineqcert/inequalities.hpp"
#include "ineqcert/search.hpp"
#include "test_support.hpp"

namespace ineqcert {
namespace {

using testing::Q;
using testing::V;

SearchSpec radon_general_probe() {
  SearchSpec spec;
  spec.family = Family::RadonGeneral;
  spec.violate = "r < s+1";
  spec.fixed = {{"r", Q("1")}, {"s", Q("1")}};
  spec.trials = 10000;
  return spec;
}

TEST(GenInstanceTest, DeterministicPerTrial) {
  const SearchSpec spec = radon_general_probe();
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(gen_instance(spec, i), gen_instance(spec, i));
  EXPECT_NE(gen_instance(spec, 0), gen_instance(spec, 1));
}

TEST(GenInstanceTest, FixedParametersAndLengths) {
  SearchSpec spec = radon_general_probe();
  spec.n_min = spec.n_max = 2;
  for (std::size_t i = 0; i < 100; ++i) {
    const InequalityInstance inst = gen_instance(spec, i);
    EXPECT_EQ(inst.param("r"), Q("1"));
    EXPECT_EQ(inst.param("s"), Q("1"));
    EXPECT_EQ(inst.size(), 2u);
  }
}

TEST(GenInstanceTest, InfeasibleSpecs) {
  SearchSpec spec = radon_general_probe();
  spec.fixed = {{"r", Q("3")}, {"s", Q("1")}};
  EXPECT_THROW(gen_instance(spec, 0), InfeasibleSpec);
  spec.violate = "p < 1";
  EXPECT_THROW(gen_instance(spec, 0), InfeasibleSpec);
  spec.violate = "none";
  spec.n_min = 3;
  spec.n_max = 2;
  EXPECT_THROW(gen_instance(spec, 0), InfeasibleSpec);
}

TEST(GenInstanceTest, EveryOverrideViolatesExactlyItsPredicate) {
  for (Family family : kAllFamilies) {
    for (const std::string& predicate : supported_violations(family)) {
      SearchSpec spec;
      spec.family = family;
      spec.violate = predicate;
      for (std::size_t i = 0; i < 200; ++i) {
        const InequalityInstance inst = gen_instance(spec, i);
        try {
          validate_domain(inst);
          ADD_FAILURE() << predicate << " not violated";
        } catch (const DomainError& e) {
          EXPECT_EQ(e.predicate(), predicate);
        }
      }
    }
  }
}

TEST(GenInstanceTest, ValidDomainInstancesValidate) {
  for (Family family : kAllFamilies) {
    SearchSpec spec;
    spec.family = family;
    for (std::size_t i = 0; i < 300; ++i) EXPECT_NO_THROW(validate_domain(gen_instance(spec, i)));
  }
}

TEST(FindCounterexampleTest, CornerWitnessIsGenuinelyViolated) {
  // Oracle: lhs = 1/1 + 0, rhs = 2 * 1 / (1 + 1/1000) = 2000/1001.
  const InequalityInstance corner{Family::RadonGeneral, V({"1", "0"}), V({"1", "1/1000"}), {},
                                  {{"r", Q("1")}, {"s", Q("1")}}};
  const Verdict v = evaluate_unchecked(corner);
  EXPECT_EQ(v.outcome, Outcome::Violated);
  EXPECT_EQ(*v.lhs_exact, Q("1"));
  EXPECT_EQ(*v.rhs_exact, Q("2000/1001"));
  EXPECT_LT(Q("1"), Q("2000/1001"));
}

TEST(FindCounterexampleTest, FindsWitnessBelowSharpnessBoundary) {
  const SearchResult result = find_counterexample(radon_general_probe());
  ASSERT_TRUE(result.found());
  ASSERT_TRUE(result.verdict);
  EXPECT_EQ(result.verdict->outcome, Outcome::Violated);
  // Re-verification through exact evaluation.
  const SidePair sides = build_sides(*result.witness);
  EXPECT_LT(eval_exact(sides.lhs), eval_exact(sides.rhs));
}

TEST(FindCounterexampleTest, ReproducibleAcrossWorkerCounts) {
  SearchSpec spec = radon_general_probe();
  const SearchResult single = find_counterexample(spec);
  for (unsigned workers : {2u, 3u, 8u}) {
    spec.workers = workers;
    const SearchResult many = find_counterexample(spec);
    EXPECT_EQ(many.trial, single.trial);
    EXPECT_EQ(many.witness, single.witness);
    EXPECT_EQ(many.errors, single.errors);
  }
}

TEST(FindCounterexampleTest, BernoulliBelowOne) {
  const InequalityInstance inst{Family::Bernoulli, V({"1"}), {}, {}, {{"r", Q("1/2")}}};
  const Verdict v = evaluate_unchecked(inst);
  EXPECT_EQ(v.outcome, Outcome::Violated);
  EXPECT_LT(Q("2"), Q("9/4"));
  SearchSpec spec;
  spec.family = Family::Bernoulli;
  spec.violate = "r < 1";
  spec.fixed = {{"r", Q("1/2")}};
  spec.trials = 1000;
  EXPECT_TRUE(find_counterexample(spec).found());
}

TEST(FindCounterexampleTest, NoneFoundOnValidDomains) {
  for (std::uint64_t seed : kStandardSeeds) {
    for (Family family : kAllFamilies) {
      SearchSpec spec;
      spec.family = family;
      spec.seed = seed;
      spec.trials = 100;
      spec.workers = 4;
      const SearchResult result = find_counterexample(spec);
      EXPECT_FALSE(result.found()) << family_name(family) << " seed " << seed;
      EXPECT_EQ(result.trials_examined, 100u);
    }
  }
  SearchSpec valid = radon_general_probe();
  valid.violate = "none";
  valid.fixed = {{"r", Q("3")}, {"s", Q("1")}};
  valid.trials = 1000;
  EXPECT_FALSE(find_counterexample(valid).found());
}

}  // namespace
}  // namespace ineqcert
