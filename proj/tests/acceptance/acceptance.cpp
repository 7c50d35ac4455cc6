// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ineqcert/dyadic.hpp"
#include "ineqcert/errors.hpp"
#include "ineqcert/expr.hpp"
#include "ineqcert/inequalities.hpp"
#include "ineqcert/integral.hpp"
#include "ineqcert/reductions.hpp"
#include "ineqcert/search.hpp"

using namespace ineqcert;

namespace {

Rational Q(const char* text) { return Rational::parse(text); }

Rational rnd(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, std::int64_t max_den = 6) {
  const std::int64_t den = std::uniform_int_distribution<std::int64_t>(1, max_den)(rng);
  const std::int64_t num = std::uniform_int_distribution<std::int64_t>(lo * den, hi * den)(rng);
  return Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
}

std::int64_t pick(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Collects failure descriptions; a criterion passes when none were logged.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 5) details_ << "    " << what << "\n";
  }
  int failures() const { return failures_; }
  std::string details() const { return details_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream details_;
};

int g_failed = 0;

void criterion(int id, const std::string& title, double time_limit_seconds, const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit_seconds > 0) {
    check.expect(seconds < time_limit_seconds,
                 "runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(time_limit_seconds) + " s");
  }
  const bool pass = check.failures() == 0;
  if (!pass) ++g_failed;
  std::printf("%s criterion %d: %s (%.2f s)\n", pass ? "PASS" : "FAIL", id, title.c_str(), seconds);
  if (!pass) std::cout << check.details();
  std::fflush(stdout);
}

// --- independent oracles -------------------------------------------------

Rational ipow(const Rational& x, std::int64_t e) {
  Rational out(1);
  const Rational base = e < 0 ? Rational(1) / x : x;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) out = out * base;
  return out;
}

Rational sum(const std::vector<Rational>& v) {
  Rational out(0);
  for (const Rational& x : v) out = out + x;
  return out;
}

std::int64_t as_int(const Rational& x) { return x.numerator().get_si(); }

// Oriented exact margin (larger side minus smaller side) by direct
// arithmetic, for instances whose exponents are all integers.
std::optional<Rational> oracle_margin(const InequalityInstance& inst) {
  const auto& a = inst.a;
  const auto& b = inst.b;
  const Rational n(static_cast<std::int64_t>(a.size()));
  Rational lhs(0);
  Rational rhs(0);
  switch (inst.family) {
    case Family::Bergstrom:
      for (std::size_t k = 0; k < a.size(); ++k) lhs = lhs + a[k] * a[k] / b[k];
      rhs = sum(a) * sum(a) / sum(b);
      break;
    case Family::Radon: {
      const std::int64_t m = as_int(inst.param("m"));
      for (std::size_t k = 0; k < a.size(); ++k) lhs = lhs + ipow(a[k], m + 1) * ipow(b[k], -m);
      rhs = ipow(sum(a), m + 1) * ipow(sum(b), -m);
      break;
    }
    case Family::RadonGeneral: {
      const std::int64_t r = as_int(inst.param("r"));
      const std::int64_t s = as_int(inst.param("s"));
      for (std::size_t k = 0; k < a.size(); ++k) lhs = lhs + ipow(a[k], r) * ipow(b[k], -s);
      rhs = ipow(sum(a), r) / (ipow(n, r - s - 1) * ipow(sum(b), s));
      break;
    }
    case Family::Bernoulli:
      lhs = ipow(Rational(1) + a[0], as_int(inst.param("r")));
      rhs = Rational(1) + inst.param("r") * a[0];
      break;
    default:
      return std::nullopt;
  }
  return lhs - rhs;
}

bool integer_exponent_case(const InequalityInstance& inst) {
  if (inst.family == Family::Chrystal) return false;
  const SidePair sides = build_sides(inst);
  return has_only_integer_exponents(sides.lhs) && has_only_integer_exponents(sides.rhs);
}

// Random instance with integer exponents for the oracle families.
InequalityInstance integer_instance(std::mt19937_64& rng, bool in_domain) {
  InequalityInstance inst;
  const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 4));
  auto vec = [&](std::int64_t lo, std::int64_t hi) {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(rnd(rng, lo, hi));
    return v;
  };
  auto positive = [&] {
    std::vector<Rational> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(rnd(rng, 1, 8) / Rational(pick(rng, 1, 3)));
    return v;
  };
  switch (pick(rng, 0, 3)) {
    case 0:
      inst.family = Family::Bergstrom;
      inst.a = vec(-6, 6);
      inst.b = in_domain ? positive() : vec(-4, 4);
      break;
    case 1: {
      inst.family = Family::Radon;
      const std::int64_t m = in_domain ? (pick(rng, 0, 1) ? pick(rng, 0, 5) : -pick(rng, 1, 4)) : pick(rng, -4, 5);
      inst.params["m"] = Rational(m);
      inst.a = m < 0 ? positive() : vec(0, 6);
      inst.b = positive();
      break;
    }
    case 2: {
      inst.family = Family::RadonGeneral;
      const std::int64_t s = pick(rng, 0, 3);
      const std::int64_t r = in_domain ? s + 1 + pick(rng, 0, 3) : pick(rng, 0, s);
      inst.params = {{"r", Rational(r)}, {"s", Rational(s)}};
      inst.a = vec(0, 6);
      inst.b = positive();
      break;
    }
    default:
      inst.family = Family::Bernoulli;
      inst.a = {rnd(rng, in_domain ? -1 : -3, 4)};
      inst.params["r"] = Rational(in_domain ? pick(rng, 1, 6) : pick(rng, -2, 6));
      break;
  }
  return inst;
}

// Tree with positive value: every divisor and every negative-power base is
// bounded away from zero.
Expr positive_tree(std::mt19937_64& rng, int depth) {
  switch (depth <= 0 ? 0 : pick(rng, 0, 4)) {
    case 0:
      return Expr::constant(rnd(rng, 1, 60, 7) / Rational(6));
    case 1:
      return positive_tree(rng, depth - 1) + positive_tree(rng, depth - 1);
    case 2:
      return positive_tree(rng, depth - 1) * positive_tree(rng, depth - 1);
    case 3:
      return positive_tree(rng, depth - 1) / positive_tree(rng, depth - 1);
    default:
      return pow(positive_tree(rng, depth - 1), Rational(pick(rng, -3, 3)));
  }
}

// Signed tree: signed constants, sums and products; quotients and powers use
// positive subtrees where division could hit zero.
Expr signed_tree(std::mt19937_64& rng, int depth) {
  switch (depth <= 0 ? 0 : pick(rng, 0, 4)) {
    case 0:
      return Expr::constant(rnd(rng, -10, 10, 7));
    case 1:
      return signed_tree(rng, depth - 1) + signed_tree(rng, depth - 1);
    case 2:
      return signed_tree(rng, depth - 1) * signed_tree(rng, depth - 1);
    case 3:
      return signed_tree(rng, depth - 1) / positive_tree(rng, depth - 1);
    default:
      return pow(signed_tree(rng, depth - 1), Rational(pick(rng, 0, 3)));
  }
}

std::vector<Rational> rationals(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<Rational> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(rnd(rng, lo, hi));
  return v;
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";

  criterion(1, "unit-product bound: (1,1,1) equality at 3/4, (2,1/2,1) holds with lhs 419/144", 1.0, [](Check& c) {
    const Verdict sym = unit_product_bound(Q("1"), Q("1"), Q("1"));
    c.expect(sym.outcome == Outcome::EqualityCertified, "(1,1,1) not EqualityCertified");
    c.expect(sym.lhs_exact && *sym.lhs_exact == Q("3/4"), "(1,1,1) lhs != 3/4");
    // Oracle: 8/((3/2)*2) + (1/8)/(2*3) + 1/(3*(3/2)).
    const Rational expected = Q("8") / (Q("3/2") * Q("2")) + Q("1/8") / (Q("2") * Q("3")) + Q("1") / (Q("3") * Q("3/2"));
    c.expect(expected == Q("419/144"), "oracle recomputation differs from 419/144");
    const Verdict v = unit_product_bound(Q("2"), Q("1/2"), Q("1"));
    c.expect(v.outcome == Outcome::Holds, "(2,1/2,1) not Holds");
    c.expect(v.lhs_exact && *v.lhs_exact == expected, "(2,1/2,1) lhs differs from oracle");
    c.expect(v.lhs.contains(expected), "(2,1/2,1) enclosure misses 419/144");
  });

  criterion(2, "Nesbitt case: triangle_bound(1,1,1,n=1) equality with both sides 3/2", 1.0, [](Check& c) {
    const Verdict v = triangle_bound(Q("1"), Q("1"), Q("1"), Q("1"));
    c.expect(v.outcome == Outcome::EqualityCertified, "not EqualityCertified");
    c.expect(v.lhs_exact && *v.lhs_exact == Q("3/2"), "lhs != 3/2");
    c.expect(v.rhs_exact && *v.rhs_exact == Q("3/2"), "rhs != 3/2");
  });

  criterion(3, "never violated: 1000 valid instances per family at a 256-bit budget", 60.0, [](Check& c) {
    CertifyOptions options;
    options.precision_budget = 256;
    int fractional_indeterminate = 0;
    for (Family family : kAllFamilies) {
      SearchSpec spec;
      spec.family = family;
      for (std::size_t i = 0; i < 1000; ++i) {
        const InequalityInstance inst = gen_instance(spec, i);
        const Verdict v = check(inst, options);
        const std::string where = std::string(family_name(family)) + " trial " + std::to_string(i);
        c.expect(v.outcome != Outcome::Violated, where + " Violated");
        if (v.outcome == Outcome::Indeterminate) {
          if (integer_exponent_case(inst)) {
            c.expect(false, where + " Indeterminate with integer exponents");
          } else {
            ++fractional_indeterminate;
          }
        }
      }
    }
    if (fractional_indeterminate > 0) {
      std::cout << "    note: " << fractional_indeterminate << " fractional-exponent instances Indeterminate\n";
    }
  });

  criterion(4, "interval pipeline matches exact arithmetic on 1000 integer-exponent instances", 0, [](Check& c) {
    std::mt19937_64 rng(kStandardSeed);
    CertifyOptions intervals_only;
    intervals_only.exact_path = false;
    intervals_only.power_lifting = false;
    int compared = 0;
    int violated = 0;
    while (compared < 1000) {
      const bool in_domain = compared % 10 < 7;
      const InequalityInstance inst = integer_instance(rng, in_domain);
      std::optional<Rational> margin;
      try {
        margin = oracle_margin(inst);
      } catch (const EvaluationError&) {
        continue;
      }
      if (!in_domain && margin->is_zero()) continue;  // intervals never certify equality without a witness
      Verdict v;
      try {
        v = in_domain ? check(inst, intervals_only) : evaluate_unchecked(inst, intervals_only);
      } catch (const DomainError&) {
        continue;  // generator produced an invalid instance for the in-domain branch
      }
      ++compared;
      const int expected = margin->sign();
      if (expected < 0) ++violated;
      const Outcome want = expected > 0 ? Outcome::Holds : expected < 0 ? Outcome::Violated
                                                                     : Outcome::EqualityCertified;
      c.expect(v.outcome == want, std::string(family_name(inst.family)) + ": outcome " + to_string(v.outcome) +
                                      ", exact says " + to_string(want));
      c.expect(margin_sign(v) == expected, "margin sign differs");
    }
    c.expect(violated > 0, "no violated instances exercised");
  });

  criterion(5, "reduction identities on 200 instances, term by term, with agreeing verdicts", 0, [](Check& c) {
    std::mt19937_64 rng(kStandardSeed + 5);
    for (int i = 0; i < 200; ++i) {
      const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 5));
      if (i % 2 == 0) {
        const std::vector<Rational> a = rationals(rng, n, 0, 9);
        std::vector<Rational> b;
        for (std::size_t k = 0; k < n; ++k) b.push_back(rnd(rng, 1, 9));
        const std::int64_t m = pick(rng, 0, 5);
        const ReductionRecord rec = powermean_to_radon(a, b, Rational(m));
        c.expect(rec.identity_checked, "powermean_to_radon identity not checked");
        for (std::size_t k = 0; k < n; ++k) {
          c.expect(rec.target.b[k] * ipow(rec.target.a[k], m + 1) == ipow(a[k], m + 1) / ipow(b[k], m),
                   "powermean_to_radon term mismatch");
        }
        c.expect(check(rec.source).outcome == check(rec.target).outcome, "powermean_to_radon verdicts differ");
      } else {
        std::vector<Rational> p;
        for (std::size_t k = 0; k < n; ++k) p.push_back(rnd(rng, 1, 9));
        const std::vector<Rational> y = rationals(rng, n, 0, 9);
        const std::int64_t s = pick(rng, 1, 3);
        const std::int64_t ratio = pick(rng, 1, 4);
        const ReductionRecord rec = radon_to_powermean(p, y, Rational(s * ratio), Rational(s));
        c.expect(rec.identity_checked, "radon_to_powermean identity not checked");
        Rational weighted(0);
        for (std::size_t k = 0; k < n; ++k) {
          const Rational term = p[k] * ipow(y[k], ratio);
          weighted = weighted + term;
          c.expect(ipow(rec.target.a[k], ratio) / ipow(rec.target.b[k], ratio - 1) == term,
                   "radon_to_powermean term mismatch");
        }
        const Verdict target = check(rec.target);
        c.expect(target.lhs_exact && *target.lhs_exact == weighted, "Radon lhs differs from weighted power sum");
        c.expect(check(rec.source).outcome == target.outcome, "radon_to_powermean verdicts differ");
      }
    }
  });

  criterion(6, "m = 1 Radon margins equal Bergstrom margins exactly on 100 instances", 0, [](Check& c) {
    std::mt19937_64 rng(kStandardSeed + 6);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 6));
      const std::vector<Rational> x = rationals(rng, n, 0, 12);
      const std::vector<Rational> y = rationals(rng, n, 1, 12);
      const Verdict radon = check_radon(x, y, Rational(1));
      const Verdict bergstrom = check_bergstrom(x, y);
      c.expect(radon.margin_exact().has_value() && radon.margin_exact() == bergstrom.margin_exact(),
               "margins differ");
      c.expect(radon.outcome == bergstrom.outcome, "outcomes differ");
    }
  });

  criterion(7, "integral form: f = x+1, g = 1, m = 1 holds; 50 piecewise-constant cases match the finite form", 30.0,
            [](Check& c) {
              // Oracle: int_0^1 (x+1)^2 = [(x+1)^3/3] = 8/3 - 1/3; int_0^1 (x+1) = 3/2.
              const Rational lhs = Q("8/3") - Q("1/3");
              const Rational rhs = Q("3/2") * Q("3/2");
              c.expect(lhs == Q("7/3") && rhs == Q("9/4"), "oracle values");
              const PiecewisePoly f({Segment{Q("0"), Q("1"), Polynomial({Q("1"), Q("1")})}});
              const PiecewisePoly g = PiecewisePoly::constant(Q("1"), Q("0"), Q("1"));
              const Verdict v = check_integral_radon(f, g, Q("0"), Q("1"), Q("1"));
              c.expect(v.outcome == Outcome::Holds, "not Holds");
              c.expect(v.lhs.contains(lhs), "lhs enclosure misses 7/3");
              c.expect(v.rhs.contains(rhs), "rhs enclosure misses 9/4");
              std::mt19937_64 rng(kStandardSeed + 7);
              for (int i = 0; i < 50; ++i) {
                const std::size_t n = static_cast<std::size_t>(pick(rng, 1, 5));
                std::vector<Rational> a;
                std::vector<Rational> b;
                std::vector<Segment> fs;
                std::vector<Segment> gs;
                const Rational width = Rational(1) / Rational(pick(rng, 1, 4));
                for (std::size_t k = 0; k < n; ++k) {
                  a.push_back(rnd(rng, 1, 8));
                  b.push_back(i % 5 == 0 ? a.back() * Rational(3) : rnd(rng, 1, 8));
                  const Rational lo = width * Rational(static_cast<std::int64_t>(k));
                  fs.push_back({lo, lo + width, Polynomial({a.back()})});
                  gs.push_back({lo, lo + width, Polynomial({b.back()})});
                }
                const Rational m = i % 2 == 0 ? Rational(pick(rng, 0, 4)) : Rational(-pick(rng, 1, 3));
                const Verdict continuous = check_integral_radon(PiecewisePoly(fs), PiecewisePoly(gs), Rational(0),
                                                                width * Rational(static_cast<std::int64_t>(n)), m);
                const Verdict finite = check_radon(a, b, m);
                c.expect(continuous.outcome == finite.outcome, "case " + std::to_string(i) + " outcome differs");
              }
            });

  criterion(8, "sharpness: witness for r = s = 1 within 10000 trials; none for r = 3, s = 1 in 1000", 0,
            [](Check& c) {
              SearchSpec spec;
              spec.family = Family::RadonGeneral;
              spec.violate = "r < s+1";
              spec.fixed = {{"r", Q("1")}, {"s", Q("1")}};
              spec.trials = 10000;
              spec.seed = kStandardSeed;
              const SearchResult found = find_counterexample(spec);
              c.expect(found.found(), "no witness within 10000 trials");
              if (found.found()) {
                const InequalityInstance& w = *found.witness;
                c.expect(found.verdict->outcome == Outcome::Violated, "witness verdict not Violated");
                // Oracle: sum a/b against n * sum a / sum b.
                Rational lhs(0);
                for (std::size_t k = 0; k < w.size(); ++k) lhs = lhs + w.a[k] / w.b[k];
                const Rational rhs = Rational(static_cast<std::int64_t>(w.size())) * sum(w.a) / sum(w.b);
                c.expect(lhs < rhs, "witness does not re-verify exactly");
              }
              const InequalityInstance corner{Family::RadonGeneral, {Q("1"), Q("0")}, {Q("1"), Q("1/1000")}, {},
                                              {{"r", Q("1")}, {"s", Q("1")}}};
              c.expect(evaluate_unchecked(corner).outcome == Outcome::Violated, "corner witness not Violated");
              c.expect(Q("1") < Q("2000/1001"), "corner oracle");
              spec.violate = "none";
              spec.fixed = {{"r", Q("3")}, {"s", Q("1")}};
              spec.trials = 1000;
              c.expect(!find_counterexample(spec).found(), "witness reported on the valid domain");
            });

  criterion(9, "enclosure soundness at 64/128/256 bits on 1000 trees, monotone refinement", 0, [](Check& c) {
    std::mt19937_64 rng(kStandardSeed + 9);
    for (int i = 0; i < 1000; ++i) {
      const Expr tree = i % 2 == 0 ? signed_tree(rng, 4) : positive_tree(rng, 4);
      const Rational exact = eval_exact(tree);
      std::optional<Rational> previous;
      for (unsigned precision : {64u, 128u, 256u}) {
        const DyadicInterval e = enclose(tree, precision);
        c.expect(e.contains(exact), "exact value outside enclosure: " + tree.to_string());
        const Rational width = e.width().to_rational();
        if (previous) c.expect(width <= *previous, "width grew: " + tree.to_string());
        previous = width;
      }
    }
    // Fractional powers: lo^q <= x^p <= hi^q checked exactly.
    for (int i = 0; i < 1000; ++i) {
      const Rational x = rnd(rng, 1, 40, 9);
      const std::int64_t q = pick(rng, 2, 5);
      const std::int64_t p = pick(rng, -4, 4);
      std::optional<Rational> previous;
      for (unsigned precision : {64u, 128u, 256u}) {
        const DyadicInterval e = rat_pow(x, Rational(BigInt(p), BigInt(q)), precision);
        const Rational target = ipow(x, p);
        c.expect(ipow(e.lo().to_rational(), q) <= target && target <= ipow(e.hi().to_rational(), q),
                 "rat_pow enclosure unsound for " + x.to_string());
        const Rational width = e.width().to_rational();
        if (previous) c.expect(width <= *previous, "rat_pow width grew");
        previous = width;
      }
    }
  });

  std::cout << (g_failed == 0 ? "all criteria passed\n" : std::to_string(g_failed) + " criteria failed\n");
  return g_failed == 0 ? 0 : 1;
}
