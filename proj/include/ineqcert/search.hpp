#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ineqcert/errors.hpp"
#include "ineqcert/instance.hpp"
#include "ineqcert/verdict.hpp"

namespace ineqcert {

inline constexpr std::uint64_t kStandardSeed = 0x5eed2016;
inline constexpr std::uint64_t kStandardSeeds[] = {kStandardSeed, 1, 2, 3, 97};

/// The search spec asks for something the generator cannot produce, e.g.
/// fixed parameters that satisfy the precondition it should violate.
class InfeasibleSpec : public Error {
 public:
  explicit InfeasibleSpec(const std::string& why) : Error("infeasible search spec: " + why) {}
};

struct SearchSpec {
  Family family = Family::RadonGeneral;
  /// "none" for the validity domain, otherwise the predicate to violate, as
  /// named by validate_domain ("r < s+1", "-1 < m < 0", ...).
  std::string violate = "none";
  std::size_t n_min = 1;
  std::size_t n_max = 4;
  Rational value_lo{0};
  Rational value_hi{10};
  std::size_t trials = 1000;
  std::uint64_t seed = kStandardSeed;
  /// Parameters pinned to fixed values.
  std::map<std::string, Rational> fixed;
  unsigned workers = 1;
  unsigned precision_budget = 1024;
};

/// Predicates each family can be asked to violate.
std::vector<std::string> supported_violations(Family family);

/// Deterministic in (spec.seed, trial). Throws InfeasibleSpec.
InequalityInstance gen_instance(const SearchSpec& spec, std::size_t trial);

struct SearchResult {
  /// Minimal trial index with a certified Violated verdict.
  std::optional<std::size_t> trial;
  std::optional<InequalityInstance> witness;
  std::optional<Verdict> verdict;
  /// Trials examined up to the witness (all of them when none is found).
  std::size_t trials_examined = 0;
  /// Evaluation errors among the examined trials, "trial <i>: <message>".
  std::vector<std::string> errors;

  bool found() const { return trial.has_value(); }
};

/// Runs spec.trials trials on spec.workers threads. The result does not
/// depend on the worker count. NoneFound is not a proof of validity.
SearchResult find_counterexample(const SearchSpec& spec);

}  // namespace ineqcert
