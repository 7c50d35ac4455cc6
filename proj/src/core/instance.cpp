#include "ineqcert/instance.hpp"

#include <algorithm>
#include <cctype>

#include "ineqcert/errors.hpp"

namespace ineqcert {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Bergstrom: return "Bergstrom";
    case Family::Radon: return "Radon";
    case Family::RadonGeneral: return "RadonGeneral";
    case Family::PowerMean: return "PowerMean";
    case Family::GeoSuperadd: return "GeoSuperadd";
    case Family::Chrystal: return "Chrystal";
    case Family::CauchySchwarz: return "CauchySchwarz";
    case Family::Bernoulli: return "Bernoulli";
    case Family::WeightedAMGM: return "WeightedAMGM";
    case Family::Holder: return "Holder";
    case Family::Minkowski: return "Minkowski";
  }
  return "?";
}

namespace {

std::string squash(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '-' || c == '_') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

[[noreturn]] void fail(const std::string& predicate) { throw DomainError(predicate); }

void require_all(const std::vector<Rational>& v, bool (*ok)(const Rational&), const std::string& predicate) {
  if (!std::all_of(v.begin(), v.end(), ok)) fail(predicate);
}

bool positive(const Rational& x) { return x.sign() > 0; }
bool nonnegative(const Rational& x) { return x.sign() >= 0; }

void require_convex_weights(const std::vector<Rational>& lambda) {
  require_all(lambda, nonnegative, "lambda_k >= 0");
  if (total(lambda) != Rational(1)) fail("sum(lambda) != 1");
}

}  // namespace

std::optional<Family> parse_family(std::string_view text) {
  const std::string key = squash(text);
  for (Family f : kAllFamilies) {
    if (squash(family_name(f)) == key) return f;
  }
  if (key == "bergström" || key == "bergstroem") return Family::Bergstrom;
  if (key == "amgm") return Family::WeightedAMGM;
  if (key == "hoelder" || key == "hölder") return Family::Holder;
  return std::nullopt;
}

std::vector<std::string> required_params(Family family) {
  switch (family) {
    case Family::Radon: return {"m"};
    case Family::RadonGeneral:
    case Family::PowerMean: return {"r", "s"};
    case Family::Bernoulli: return {"r"};
    case Family::Holder: return {"p", "q"};
    case Family::Minkowski: return {"p"};
    default: return {};
  }
}

bool uses_b(Family family) { return family != Family::Chrystal && family != Family::Bernoulli; }

bool uses_w(Family family) { return family == Family::GeoSuperadd; }

const Rational& InequalityInstance::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) fail("missing parameter " + name);
  return it->second;
}

Rational total(const std::vector<Rational>& v) {
  Rational sum(0);
  for (const Rational& x : v) sum += x;
  return sum;
}

bool is_constant(const std::vector<Rational>& v) {
  return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) return false;
  // Pivot on the first index where (a_k, b_k) != (0, 0).
  std::size_t k = 0;
  while (k < a.size() && a[k].is_zero() && b[k].is_zero()) ++k;
  if (k == a.size()) return true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] * b[k] != a[k] * b[i]) return false;
  }
  return true;
}

void check_structure(const InequalityInstance& inst) {
  if (inst.a.empty()) fail("n >= 1");
  if (inst.family == Family::Bernoulli && inst.a.size() != 1) fail("Bernoulli takes a single value a = (x)");
  if (uses_b(inst.family)) {
    if (inst.b.size() != inst.a.size()) fail("length(a) == length(b)");
  } else if (!inst.b.empty()) {
    fail(std::string(family_name(inst.family)) + " takes no b vector");
  }
  if (uses_w(inst.family)) {
    if (inst.w.size() != inst.a.size()) fail("length(a) == length(w)");
  } else if (!inst.w.empty()) {
    fail(std::string(family_name(inst.family)) + " takes no w vector");
  }
  for (const std::string& name : required_params(inst.family)) inst.param(name);
}

void validate_domain(const InequalityInstance& inst) {
  check_structure(inst);
  switch (inst.family) {
    case Family::Bergstrom:
      require_all(inst.b, positive, "y_k > 0");
      return;
    case Family::Radon: {
      const Rational& m = inst.param("m");
      if (m > Rational(-1) && m.sign() < 0) fail("-1 < m < 0");
      require_all(inst.b, positive, "b_k > 0");
      if (m.sign() >= 0) {
        require_all(inst.a, nonnegative, "a_k >= 0");
      } else {
        require_all(inst.a, positive, "a_k > 0");
      }
      return;
    }
    case Family::RadonGeneral: {
      const Rational& r = inst.param("r");
      const Rational& s = inst.param("s");
      if (r < s + Rational(1)) fail("r < s+1");
      if (r.sign() * s.sign() < 0) fail("r*s < 0");
      require_all(inst.b, positive, "b_k > 0");
      if (r.sign() >= 0 && s.sign() >= 0) {
        require_all(inst.a, nonnegative, "a_k >= 0");
      } else {
        require_all(inst.a, positive, "a_k > 0");
      }
      return;
    }
    case Family::PowerMean: {
      const Rational& r = inst.param("r");
      const Rational& s = inst.param("s");
      if (s.sign() <= 0) fail("s <= 0");
      if (r < s) fail("r < s");
      require_all(inst.b, positive, "p_k > 0");
      require_all(inst.a, nonnegative, "x_k >= 0");
      return;
    }
    case Family::GeoSuperadd:
      require_all(inst.a, nonnegative, "a_k >= 0");
      require_all(inst.b, nonnegative, "b_k >= 0");
      require_convex_weights(inst.w);
      return;
    case Family::Chrystal:
      require_all(inst.a, positive, "a_k > 0");
      return;
    case Family::CauchySchwarz:
      require_all(inst.a, nonnegative, "a_k >= 0");
      require_all(inst.b, nonnegative, "b_k >= 0");
      return;
    case Family::Bernoulli:
      if (inst.a[0] < Rational(-1)) fail("x < -1");
      if (inst.param("r") < Rational(1)) fail("r < 1");
      return;
    case Family::WeightedAMGM:
      require_all(inst.a, positive, "x_k > 0");
      require_convex_weights(inst.b);
      return;
    case Family::Holder: {
      const Rational& p = inst.param("p");
      const Rational& q = inst.param("q");
      if (p <= Rational(1)) fail("p <= 1");
      if (q <= Rational(1)) fail("q <= 1");
      if (p.reciprocal() + q.reciprocal() != Rational(1)) fail("1/p+1/q != 1");
      require_all(inst.a, nonnegative, "a_k >= 0");
      require_all(inst.b, nonnegative, "b_k >= 0");
      return;
    }
    case Family::Minkowski:
      if (inst.param("p") < Rational(1)) fail("p < 1");
      require_all(inst.a, nonnegative, "a_k >= 0");
      require_all(inst.b, nonnegative, "b_k >= 0");
      return;
  }
}

EqualityWitness equality_witness(const InequalityInstance& inst) {
  EqualityWitness out;
  out.proportional = !inst.b.empty() && proportional(inst.a, inst.b);
  out.all_equal = is_constant(inst.a) && is_constant(inst.b);
  return out;
}

}  // namespace ineqcert
