#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqcert/rational.hpp"

namespace ineqcert {

/// Inequality families understood by the checker.
///
/// Data layout per family (a, b, w are vectors; params are named exponents):
///   Bergstrom      a = x, b = y
///   Radon          a, b, params {m}
///   RadonGeneral   a, b, params {r, s}
///   PowerMean      a = x, b = weights p, params {r, s}
///   GeoSuperadd    a, b, w = convex weights lambda
///   Chrystal       a
///   CauchySchwarz  a, b
///   Bernoulli      a = (x), params {r}
///   WeightedAMGM   a = x, b = convex weights lambda
///   Holder         a, b, params {p, q}
///   Minkowski      a, b, params {p}
enum class Family {
  Bergstrom,
  Radon,
  RadonGeneral,
  PowerMean,
  GeoSuperadd,
  Chrystal,
  CauchySchwarz,
  Bernoulli,
  WeightedAMGM,
  Holder,
  Minkowski,
};

inline constexpr Family kAllFamilies[] = {
    Family::Bergstrom,     Family::Radon,     Family::RadonGeneral, Family::PowerMean,
    Family::GeoSuperadd,   Family::Chrystal,  Family::CauchySchwarz, Family::Bernoulli,
    Family::WeightedAMGM,  Family::Holder,    Family::Minkowski,
};

/// Canonical name, e.g. "RadonGeneral".
std::string_view family_name(Family family);
/// Accepts canonical names and kebab/snake spellings ("radon-general"),
/// case-insensitively.
std::optional<Family> parse_family(std::string_view text);
/// Parameter names the family requires.
std::vector<std::string> required_params(Family family);
/// Whether the family uses the second vector b / the weight vector w.
bool uses_b(Family family);
bool uses_w(Family family);

struct InequalityInstance {
  Family family = Family::Bergstrom;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> w;
  std::map<std::string, Rational> params;

  std::size_t size() const { return a.size(); }
  /// Named parameter; throws DomainError("missing parameter <name>").
  const Rational& param(const std::string& name) const;

  friend bool operator==(const InequalityInstance&, const InequalityInstance&) = default;
};

/// Structural checks: n >= 1, equal vector lengths, required params present.
/// Throws DomainError.
void check_structure(const InequalityInstance& inst);

/// Accepts exactly the validity domains of each family; throws DomainError
/// naming the violated predicate (e.g. "r < s+1", "-1 < m < 0").
void validate_domain(const InequalityInstance& inst);

struct EqualityWitness {
  bool proportional = false;
  bool all_equal = false;
};

/// proportional: (a, b) has rank <= 1, i.e. a_i b_j = a_j b_i for all i, j.
/// all_equal: a is constant and b (when present) is constant.
EqualityWitness equality_witness(const InequalityInstance& inst);

bool is_constant(const std::vector<Rational>& v);
/// Rank <= 1 test on the pair of vectors, exact.
bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);

Rational total(const std::vector<Rational>& v);

}  // namespace ineqcert
