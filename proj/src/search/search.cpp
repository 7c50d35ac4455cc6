#include "ineqcert/search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <thread>

#include "ineqcert/inequalities.hpp"

namespace ineqcert {

namespace {

const Rational kNearZero(1, 1000);

class Generator {
 public:
  Generator(const SearchSpec& spec, std::size_t trial) : spec_(spec) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
    rng_.seed(seq);
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool chance(int one_in) { return integer(1, one_in) == 1; }

  // Uniform over rationals with denominator <= 12 in [lo, hi].
  Rational between(const Rational& lo, const Rational& hi) {
    const std::int64_t den = integer(1, 12);
    const Rational d(den);
    BigInt first;
    BigInt last;
    const Rational scaled_lo = lo * d;
    const Rational scaled_hi = hi * d;
    mpz_cdiv_q(first.get_mpz_t(), scaled_lo.numerator().get_mpz_t(), scaled_lo.denominator().get_mpz_t());
    mpz_fdiv_q(last.get_mpz_t(), scaled_hi.numerator().get_mpz_t(), scaled_hi.denominator().get_mpz_t());
    if (last < first) return lo;
    const BigInt span = last - first;
    const std::int64_t offset = integer(0, static_cast<std::int64_t>(span.get_si()));
    return Rational(BigInt(first + offset), BigInt(den));
  }

  // Vector entry; corners (0 or 1/1000) with probability 1/4.
  Rational entry(bool positive) {
    const Rational lo = std::max(spec_.value_lo, positive ? kNearZero : Rational(0));
    const Rational hi = std::max(spec_.value_hi, lo);
    if (chance(4)) {
      const Rational corner = (positive || chance(2)) ? kNearZero : Rational(0);
      if (lo <= corner && corner <= hi) return corner;
    }
    Rational v = between(lo, hi);
    if (positive && v.sign() <= 0) v = kNearZero;
    return v;
  }

  std::vector<Rational> vec(std::size_t n, bool positive) {
    std::vector<Rational> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(entry(positive));
    return out;
  }

  // Convex weights; occasionally with zero entries.
  std::vector<Rational> weights(std::size_t n) {
    std::vector<Rational> raw;
    for (std::size_t k = 0; k < n; ++k) raw.push_back(Rational(chance(5) ? 0 : integer(1, 6)));
    if (total(raw).is_zero()) raw[0] = Rational(1);
    const Rational sum = total(raw);
    for (Rational& w : raw) w = w / sum;
    return raw;
  }

  // Exponent from a small set, integral with probability 3/4.
  Rational exponent(std::int64_t lo, std::int64_t hi) {
    if (!chance(4)) return Rational(integer(lo, hi));
    return Rational(BigInt(integer(lo * 4, hi * 4)), BigInt(4));
  }

  Rational param(const std::string& name, const std::function<Rational()>& draw) {
    auto it = spec_.fixed.find(name);
    return it != spec_.fixed.end() ? it->second : draw();
  }

 private:
  const SearchSpec& spec_;
  std::mt19937_64 rng_;
};

std::optional<std::string> violated_predicate(const InequalityInstance& inst) {
  try {
    validate_domain(inst);
  } catch (const DomainError& e) {
    return e.predicate();
  }
  return std::nullopt;
}

InequalityInstance generate(Generator& g, const SearchSpec& spec, std::size_t n) {
  const std::string& v = spec.violate;
  InequalityInstance inst;
  inst.family = spec.family;
  switch (spec.family) {
    case Family::Bergstrom:
      inst.a = g.vec(n, false);
      inst.b = g.vec(n, true);
      if (v == "y_k > 0") inst.b[static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(n) - 1))] = -g.entry(true);
      break;
    case Family::Radon: {
      const Rational m = g.param("m", [&] {
        if (v == "-1 < m < 0") return Rational(BigInt(-g.integer(1, 11)), BigInt(12));
        return g.chance(2) ? g.exponent(0, 5) : g.exponent(-4, -1);
      });
      inst.params["m"] = m;
      inst.a = g.vec(n, m.sign() < 0);
      inst.b = g.vec(n, true);
      break;
    }
    case Family::RadonGeneral: {
      Rational s;
      Rational r;
      if (v == "r < s+1") {
        s = g.param("s", [&] { return g.exponent(0, 3); });
        r = g.param("r", [&] { return std::max(Rational(0), s + Rational(1) - g.between(kNearZero, Rational(3, 2))); });
      } else if (v == "r*s < 0") {
        s = g.param("s", [&] { return -g.between(kNearZero, Rational(2)); });
        r = g.param("r", [&] { return std::max(s + Rational(1), kNearZero) + g.between(Rational(0), Rational(2)); });
      } else if (g.chance(4)) {
        r = g.param("r", [&] { return Rational(-g.integer(0, 2)); });
        s = g.param("s", [&] { return r - Rational(g.integer(1, 3)); });
      } else {
        s = g.param("s", [&] { return g.exponent(0, 3); });
        r = g.param("r", [&] { return s + Rational(1) + g.exponent(0, 3); });
      }
      inst.params = {{"r", r}, {"s", s}};
      inst.a = g.vec(n, r.sign() < 0 || s.sign() < 0);
      inst.b = g.vec(n, true);
      break;
    }
    case Family::PowerMean: {
      const Rational s = g.param("s", [&] {
        if (v == "s <= 0") return -g.exponent(0, 2);
        return g.chance(4) ? Rational(1, 2) : Rational(g.integer(1, 3));
      });
      const Rational r = g.param("r", [&] {
        if (v == "r < s") return s - g.between(kNearZero, std::max(s, kNearZero));
        return s + g.exponent(0, 3);
      });
      inst.params = {{"r", r}, {"s", s}};
      inst.a = g.vec(n, s.sign() <= 0 || r.sign() <= 0);
      inst.b = g.vec(n, true);
      break;
    }
    case Family::GeoSuperadd:
      inst.a = g.vec(n, false);
      inst.b = g.vec(n, false);
      inst.w = g.weights(n);
      if (v == "sum(lambda) != 1") {
        for (Rational& w : inst.w) w = w * g.between(Rational(1, 2), Rational(3, 2));
        if (total(inst.w) == Rational(1)) inst.w[0] = inst.w[0] + Rational(1, 2);
      }
      break;
    case Family::Chrystal:
      inst.a = g.vec(n, true);
      break;
    case Family::CauchySchwarz:
      inst.a = g.vec(n, false);
      inst.b = g.vec(n, false);
      break;
    case Family::Bernoulli: {
      const Rational x = v == "x < -1" ? Rational(-1) - g.between(kNearZero, Rational(3))
                                       : g.between(Rational(-1), std::max(spec.value_hi, Rational(-1)));
      inst.a = {x};
      inst.params["r"] = g.param("r", [&] {
        if (v == "r < 1") return Rational(1) - g.between(kNearZero, Rational(1));
        return g.exponent(1, 5);
      });
      break;
    }
    case Family::WeightedAMGM:
      inst.a = g.vec(n, true);
      inst.b = g.weights(n);
      if (v == "sum(lambda) != 1") {
        for (Rational& w : inst.b) w = w * g.between(Rational(1, 2), Rational(3, 2));
        if (total(inst.b) == Rational(1)) inst.b[0] = inst.b[0] + Rational(1, 2);
      }
      break;
    case Family::Holder: {
      static const Rational kPs[] = {Rational(2), Rational(3), Rational(4), Rational(3, 2), Rational(4, 3),
                                     Rational(5, 2)};
      const Rational p = g.param("p", [&] { return kPs[g.integer(0, 5)]; });
      const Rational q = g.param("q", [&] {
        if (v == "1/p+1/q != 1") return p / (p - Rational(1)) + g.between(kNearZero, Rational(2));
        return p / (p - Rational(1));
      });
      inst.params = {{"p", p}, {"q", q}};
      inst.a = g.vec(n, false);
      inst.b = g.vec(n, false);
      break;
    }
    case Family::Minkowski:
      inst.params["p"] = g.param("p", [&] {
        if (v == "p < 1") return Rational(1) - g.between(kNearZero, Rational(9, 10));
        return Rational(1) + g.exponent(0, 3);
      });
      inst.a = g.vec(n, false);
      inst.b = g.vec(n, false);
      break;
  }
  return inst;
}

}  // namespace

std::vector<std::string> supported_violations(Family family) {
  switch (family) {
    case Family::Bergstrom: return {"y_k > 0"};
    case Family::Radon: return {"-1 < m < 0"};
    case Family::RadonGeneral: return {"r < s+1", "r*s < 0"};
    case Family::PowerMean: return {"r < s", "s <= 0"};
    case Family::GeoSuperadd: return {"sum(lambda) != 1"};
    case Family::Bernoulli: return {"r < 1", "x < -1"};
    case Family::WeightedAMGM: return {"sum(lambda) != 1"};
    case Family::Holder: return {"1/p+1/q != 1"};
    case Family::Minkowski: return {"p < 1"};
    case Family::Chrystal:
    case Family::CauchySchwarz: return {};
  }
  return {};
}

InequalityInstance gen_instance(const SearchSpec& spec, std::size_t trial) {
  if (spec.violate != "none") {
    const auto options = supported_violations(spec.family);
    if (std::find(options.begin(), options.end(), spec.violate) == options.end()) {
      throw InfeasibleSpec("cannot violate \"" + spec.violate + "\" for " + std::string(family_name(spec.family)));
    }
  }
  if (spec.n_min == 0 || spec.n_max < spec.n_min) throw InfeasibleSpec("n range");
  if (spec.value_hi < spec.value_lo) throw InfeasibleSpec("value range");
  Generator g(spec, trial);
  std::size_t n = static_cast<std::size_t>(
      g.integer(static_cast<std::int64_t>(spec.n_min), static_cast<std::int64_t>(spec.n_max)));
  if (spec.family == Family::Bernoulli) n = 1;
  InequalityInstance inst = generate(g, spec, n);
  const std::optional<std::string> broken = violated_predicate(inst);
  if (spec.violate == "none" && broken) {
    throw InfeasibleSpec("generated instance violates \"" + *broken + "\"");
  }
  if (spec.violate != "none" && broken != spec.violate) {
    throw InfeasibleSpec("generated instance does not violate exactly \"" + spec.violate + "\"" +
                         (broken ? " (got \"" + *broken + "\")" : ""));
  }
  return inst;
}

SearchResult find_counterexample(const SearchSpec& spec) {
  gen_instance(spec, 0);  // surface InfeasibleSpec before fanning out
  CertifyOptions options;
  options.precision_budget = spec.precision_budget;
  std::atomic<std::size_t> best{spec.trials};
  std::mutex lock;
  std::vector<std::pair<std::size_t, std::string>> errors;
  std::optional<Verdict> best_verdict;

  auto worker = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < spec.trials && i < best.load(); i += stride) {
      try {
        const InequalityInstance inst = gen_instance(spec, i);
        Verdict verdict = evaluate_unchecked(inst, options);
        if (verdict.outcome != Outcome::Violated) continue;
        std::lock_guard guard(lock);
        if (i < best.load()) {
          best.store(i);
          best_verdict = std::move(verdict);
        }
        return;
      } catch (const Error& e) {
        std::lock_guard guard(lock);
        errors.emplace_back(i, e.what());
      }
    }
  };

  const unsigned workers = std::max(1u, spec.workers);
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
    for (std::thread& t : pool) t.join();
  }

  SearchResult result;
  const std::size_t limit = best.load();
  std::sort(errors.begin(), errors.end());
  for (const auto& [index, message] : errors) {
    if (index < limit) result.errors.push_back("trial " + std::to_string(index) + ": " + message);
  }
  if (limit < spec.trials) {
    result.trial = limit;
    result.witness = gen_instance(spec, limit);
    result.verdict = best_verdict;
    result.trials_examined = limit + 1;
  } else {
    result.trials_examined = spec.trials;
  }
  return result;
}

}  // namespace ineqcert
