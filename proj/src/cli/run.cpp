#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "ineqcert/cli.hpp"
#include "ineqcert/errors.hpp"
#include "ineqcert/inequalities.hpp"
#include "ineqcert/integral.hpp"
#include "ineqcert/reductions.hpp"
#include "ineqcert/search.hpp"
#include "ineqcert/text_format.hpp"

namespace ineqcert {

namespace {

const char* kEnvBudget = "INEQCERT_PRECISION_BUDGET";

const char* formula(const std::string& family) {
  static const std::map<std::string, const char*> formulas = {
      {"Bergstrom", "sum x_k^2/y_k >= (sum x_k)^2 / sum y_k"},
      {"Radon", "sum a_k^(m+1)/b_k^m >= (sum a_k)^(m+1) / (sum b_k)^m"},
      {"RadonGeneral", "sum a_k^r/b_k^s >= (sum a_k)^r / (n^(r-s-1) (sum b_k)^s)"},
      {"PowerMean", "M_r(x; p) >= M_s(x; p) for r >= s > 0"},
      {"GeoSuperadd", "prod a_k^l_k + prod b_k^l_k <= prod (a_k+b_k)^l_k"},
      {"Chrystal", "prod (1+a_k) >= (1 + (prod a_k)^(1/n))^n"},
      {"CauchySchwarz", "(sum a_k)(sum b_k) >= (sum sqrt(a_k b_k))^2"},
      {"Bernoulli", "(1+x)^r >= 1 + r x"},
      {"WeightedAMGM", "sum l_k x_k >= prod x_k^l_k"},
      {"Holder", "|a|_p |b|_q >= sum a_k b_k"},
      {"Minkowski", "|a|_p + |b|_p >= |a+b|_p"},
      {"triangle", "a^n/(b+c) + b^n/(c+a) + c^n/(a+b) >= (2/3)^(n-2) S^(n-1), 2S = a+b+c"},
      {"constrained-sum", "sum a_k^p/(s-a_k)^q >= s^(p-q) / ((n-1)^q n^(p-q-1)), s = sum a_k"},
      {"unit-product", "x^3/((1+y)(1+z)) + y^3/((1+z)(1+x)) + z^3/((1+x)(1+y)) >= 3/4, xyz = 1"},
      {"substitution", "sum a_k/c_k >= (sum a_k)^(m+1) / (sum a_k c_k^(1/m))^m"},
      {"integral-radon", "int f^(m+1)/g^m >= (int f)^(m+1) / (int g)^m"},
      {"integral-radon-general", "int f^r/g^s >= (int f)^r / ((b-a)^(r-s-1) (int g)^s)"},
  };
  auto it = formulas.find(family);
  return it == formulas.end() ? "" : it->second;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

// JSON text given inline or a path to a file holding it.
std::string inline_or_file(const std::string& value) {
  const auto first = value.find_first_not_of(" \t\n");
  if (first != std::string::npos && (value[first] == '[' || value[first] == '{')) return value;
  return read_file(value);
}

int exit_code(const Verdict& verdict) {
  switch (verdict.outcome) {
    case Outcome::Holds:
    case Outcome::EqualityCertified: return kExitHolds;
    case Outcome::Violated: return kExitViolated;
    case Outcome::Indeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

std::string describe(const DyadicInterval& interval, const std::optional<Rational>& exact) {
  std::ostringstream s;
  if (exact) s << exact->to_string() << "  ";
  s << "[" << interval.lo().to_string() << ", " << interval.hi().to_string() << "]";
  return s.str();
}

void print_human(std::ostream& out, const std::string& label, const Verdict& v) {
  out << label << ": " << formula(label) << "\n";
  out << "outcome: " << to_string(v.outcome) << " (lhs " << to_string(v.relation) << " rhs)\n";
  out << "lhs: " << describe(v.lhs, v.lhs_exact) << "\n";
  out << "rhs: " << describe(v.rhs, v.rhs_exact) << "\n";
  const Rational mid = v.margin.midpoint();
  out << "margin: " << std::setprecision(12) << mid.to_double() << " (approximate); certified enclosure "
      << describe(v.margin, v.margin_exact()) << "\n";
  out << "precision: " << v.precision_used << " bits\n";
  for (const std::string& note : v.notes) out << "note: " << note << "\n";
}

struct Inputs {
  std::string family;
  std::string instance_path;
  std::string a, b, w, c;
  std::string m, r, s, p, q, n;
  std::string x, y, z;
};

bool has_inline(const Inputs& in) {
  for (const std::string* f : {&in.a, &in.b, &in.w, &in.c, &in.m, &in.r, &in.s, &in.p, &in.q, &in.n, &in.x, &in.y,
                               &in.z}) {
    if (!f->empty()) return true;
  }
  return false;
}

Rational scalar(const std::string& value, const char* name) {
  if (value.empty()) throw DomainError(std::string("missing parameter ") + name);
  const std::vector<Rational> v = parse_rational_list(value);
  if (v.size() != 1) throw ParseError(std::string(name) + " takes a single rational", 1, 1);
  return v.front();
}

std::vector<Rational> list(const std::string& value) {
  return value.empty() ? std::vector<Rational>{} : parse_rational_list(value);
}

InequalityInstance inline_instance(Family family, const Inputs& in) {
  InequalityInstance inst;
  inst.family = family;
  inst.a = list(in.a.empty() ? in.x : in.a);
  inst.b = list(in.b.empty() ? in.y : in.b);
  inst.w = list(in.w);
  const std::pair<const char*, const std::string*> params[] = {{"m", &in.m}, {"r", &in.r}, {"s", &in.s},
                                                               {"p", &in.p}, {"q", &in.q}};
  for (const auto& [name, value] : params) {
    if (!value->empty()) inst.params[name] = scalar(*value, name);
  }
  return inst;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args) {
    CLI::App app{"Certified checker for Radon, Bergstrom and power-mean type inequalities"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");
    app.footer(
        "Rationals are written p/q or p; vectors as comma-separated rationals. 0^0 is taken as 1.\n"
        "Exit status: 0 holds or equality certified, 1 violated (fuzz: witness found), 2 indeterminate,\n"
        "3 domain or parse error. The default precision budget is read from " +
        std::string(kEnvBudget) + ".");
    app.add_flag("--machine", machine_, "One JSON record per result on stdout");
    app.add_flag("--human{false}", machine_, "Readable report (default)");
    app.add_option("--precision", precision_text_, "Precision budget in bits");

    Inputs in;
    CLI::App* check = app.add_subcommand("check", "Certify one instance");
    check->add_option("family", in.family,
                      "Family (radon, radon-general, bergstrom, power-mean, geo-superadd, chrystal, "
                      "cauchy-schwarz, bernoulli, weighted-amgm, holder, minkowski) or triangle, "
                      "constrained-sum, unit-product, substitution");
    check->add_option("--instance", in.instance_path, "Instance file");
    for (auto& [flag, target] : std::initializer_list<std::pair<const char*, std::string*>>{
             {"--a", &in.a}, {"--b", &in.b}, {"--w", &in.w}, {"--c", &in.c}, {"--m", &in.m}, {"--r", &in.r},
             {"--s", &in.s}, {"--p", &in.p}, {"--q", &in.q}, {"--n", &in.n}, {"--x", &in.x}, {"--y", &in.y},
             {"--z", &in.z}}) {
      check->add_option(flag, *target)->allow_extra_args(false);
    }

    std::string equality_path;
    CLI::App* equality = app.add_subcommand("equality", "Report the symbolic equality witnesses of an instance");
    equality->add_option("instance", equality_path)->required();

    std::string direction;
    std::string reduce_path;
    CLI::App* reduce = app.add_subcommand("reduce", "Rewrite an instance into the other formulation");
    reduce->add_option("direction", direction, "powermean-to-radon (Radon file) or radon-to-powermean "
                                               "(PowerMean file)")
        ->required()
        ->check(CLI::IsMember({"powermean-to-radon", "radon-to-powermean"}));
    reduce->add_option("instance", reduce_path)->required();

    std::string f_text;
    std::string g_text;
    std::string interval_text = "0,1";
    IntegralOptions integral_options;
    Inputs integral_in;
    CLI::App* integral = app.add_subcommand("integral-check", "Certify an integral Radon-type inequality");
    integral->add_option("--f", f_text, "Piecewise polynomial JSON or a file holding it")->required();
    integral->add_option("--g", g_text, "Piecewise polynomial JSON or file (default g = 1)");
    integral->add_option("--interval", interval_text, "lo,hi");
    integral->add_option("--m", integral_in.m);
    integral->add_option("--r", integral_in.r);
    integral->add_option("--s", integral_in.s);
    integral->add_option("--partitions", integral_options.initial_partitions, "Initial partition count")
        ->check(CLI::PositiveNumber);
    integral->add_option("--budget", integral_options.max_partitions, "Maximum partition count")
        ->check(CLI::PositiveNumber);

    SearchSpec spec;
    std::string fuzz_family = "radon-general";
    std::string n_text;
    std::string range_text;
    std::string fix_text;
    CLI::App* fuzz = app.add_subcommand("fuzz", "Search for a certified counterexample");
    fuzz->add_option("--family", fuzz_family);
    fuzz->add_option("--violate", spec.violate, "Precondition to violate, e.g. \"r < s+1\", or none");
    fuzz->add_option("--trials", spec.trials)->check(CLI::PositiveNumber);
    fuzz->add_option("--seed", spec.seed);
    fuzz->add_option("--n", n_text, "Vector length k or range min,max");
    fuzz->add_option("--range", range_text, "Value range lo,hi");
    fuzz->add_option("--fix", fix_text, "Fixed parameters, e.g. r=1,s=1");
    fuzz->add_option("--workers", spec.workers)->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      out_ << app.help();
      return 0;
    } catch (const CLI::CallForAllHelp& e) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitInputError;
    }

    try {
      options_.precision_budget = budget();
      integral_options.certify = options_;
      if (check->parsed()) return run_check(in);
      if (equality->parsed()) return run_equality(equality_path);
      if (reduce->parsed()) return run_reduce(direction, reduce_path);
      if (integral->parsed()) return run_integral(f_text, g_text, interval_text, integral_in, integral_options);
      if (fuzz->parsed()) return run_fuzz(spec, fuzz_family, n_text, range_text, fix_text);
    } catch (const ParseError& e) {
      err_ << e.what() << "\n";
      return kExitInputError;
    } catch (const DomainError& e) {
      err_ << e.what() << "\n";
      if (machine_) out_ << R"({"error":"DomainError","predicate":)" << quote(e.predicate()) << "}\n";
      return kExitInputError;
    } catch (const Error& e) {
      err_ << e.what() << "\n";
      return kExitInputError;
    }
    return kExitInputError;
  }

 private:
  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out += '\\';
      out += ch;
    }
    return out + "\"";
  }

  unsigned budget() const {
    std::string text = precision_text_;
    if (text.empty()) {
      const char* env = std::getenv(kEnvBudget);
      if (env == nullptr || *env == '\0') return kDefaultPrecisionBudget;
      text = env;
    }
    const std::vector<Rational> v = parse_rational_list(text);
    if (v.size() != 1 || !v[0].is_integer() || v[0].sign() <= 0 || v[0] > Rational(1 << 24)) {
      throw ParseError("precision budget must be a positive integer", 1, 1);
    }
    return static_cast<unsigned>(v[0].numerator().get_ui());
  }

  int report(const std::string& label, const Verdict& verdict) {
    if (machine_) {
      out_ << serialize_verdict(verdict) << "\n";
    } else {
      print_human(out_, label, verdict);
    }
    return exit_code(verdict);
  }

  int run_check(const Inputs& in) {
    if (!in.instance_path.empty()) {
      if (has_inline(in)) throw ParseError("give either --instance or inline values, not both", 1, 1);
      const InequalityInstance inst = parse_instance(read_file(in.instance_path));
      if (!in.family.empty()) {
        const std::optional<Family> named = parse_family(in.family);
        if (!named || *named != inst.family) throw ParseError("family does not match the instance file", 1, 1);
      }
      return report(std::string(family_name(inst.family)), check(inst, options_));
    }
    if (in.family.empty()) throw ParseError("check needs a family or --instance", 1, 1);
    const std::string& name = in.family;
    if (name == "triangle") {
      const Rational n = in.n.empty() ? Rational(1) : scalar(in.n, "n");
      return report(name, triangle_bound(scalar(in.a, "a"), scalar(in.b, "b"), scalar(in.c, "c"), n, options_));
    }
    if (name == "constrained-sum") {
      return report(name, constrained_sum_bound(list(in.a), scalar(in.p, "p"), scalar(in.q, "q"), options_));
    }
    if (name == "unit-product") {
      return report(name, unit_product_bound(scalar(in.x, "x"), scalar(in.y, "y"), scalar(in.z, "z"), options_));
    }
    if (name == "substitution") {
      return report(name, substitute_corollary23(list(in.a), list(in.c), scalar(in.m, "m"), options_).verdict);
    }
    const std::optional<Family> family = parse_family(name);
    if (!family) throw ParseError("unknown family " + name, 1, 1);
    const InequalityInstance inst = inline_instance(*family, in);
    return report(std::string(family_name(*family)), check(inst, options_));
  }

  int run_equality(const std::string& path) {
    const InequalityInstance inst = parse_instance(read_file(path));
    validate_domain(inst);
    const EqualityWitness witness = equality_witness(inst);
    const bool condition = equality_condition_holds(inst);
    if (machine_) {
      out_ << R"({"proportional":)" << std::boolalpha << witness.proportional << R"(,"all_equal":)"
           << witness.all_equal << R"(,"equality_condition":)" << condition << "}\n";
    } else {
      out_ << "proportional: " << (witness.proportional ? "yes" : "no") << "\n"
           << "all_equal: " << (witness.all_equal ? "yes" : "no") << "\n"
           << "equality condition of " << family_name(inst.family) << ": " << (condition ? "yes" : "no") << "\n";
    }
    return kExitHolds;
  }

  int run_reduce(const std::string& direction, const std::string& path) {
    const InequalityInstance inst = parse_instance(read_file(path));
    const ReductionRecord record =
        direction == "powermean-to-radon" ? powermean_to_radon(inst) : radon_to_powermean(inst);
    if (machine_) {
      out_ << serialize_reduction(record) << "\n";
    } else {
      out_ << "source: " << serialize_instance(record.source) << "\n"
           << "target: " << serialize_instance(record.target) << "\n"
           << "identity checked: " << (record.identity_checked ? "yes" : "no") << "\n";
    }
    return kExitHolds;
  }

  int run_integral(const std::string& f_text, const std::string& g_text, const std::string& interval_text,
                   const Inputs& in, const IntegralOptions& options) {
    const std::vector<Rational> interval = parse_rational_list(interval_text);
    if (interval.size() != 2) throw ParseError("--interval takes lo,hi", 1, 1);
    const PiecewisePoly f = parse_piecewise(inline_or_file(f_text));
    const PiecewisePoly g = g_text.empty() ? PiecewisePoly::constant(Rational(1), f.lo(), f.hi())
                                           : parse_piecewise(inline_or_file(g_text));
    if (!in.m.empty()) {
      if (!in.r.empty() || !in.s.empty()) throw ParseError("give --m or --r/--s, not both", 1, 1);
      return report("integral-radon", check_integral_radon(f, g, interval[0], interval[1], scalar(in.m, "m"), options));
    }
    return report("integral-radon-general", check_integral_radon_general(f, g, interval[0], interval[1],
                                                                         scalar(in.r, "r"), scalar(in.s, "s"),
                                                                         options));
  }

  int run_fuzz(SearchSpec spec, const std::string& family, const std::string& n_text, const std::string& range_text,
               const std::string& fix_text) {
    const std::optional<Family> f = parse_family(family);
    if (!f) throw ParseError("unknown family " + family, 1, 1);
    spec.family = *f;
    spec.precision_budget = std::min(options_.precision_budget, spec.precision_budget);
    if (!n_text.empty()) {
      const std::vector<Rational> n = parse_rational_list(n_text);
      if (n.empty() || n.size() > 2 || !n.front().is_integer() || !n.back().is_integer() || n.front().sign() <= 0) {
        throw ParseError("--n takes k or min,max", 1, 1);
      }
      spec.n_min = n.front().numerator().get_ui();
      spec.n_max = n.back().numerator().get_ui();
    }
    if (!range_text.empty()) {
      const std::vector<Rational> range = parse_rational_list(range_text);
      if (range.size() != 2) throw ParseError("--range takes lo,hi", 1, 1);
      spec.value_lo = range[0];
      spec.value_hi = range[1];
    }
    std::size_t start = 0;
    while (start < fix_text.size()) {
      std::size_t comma = fix_text.find(',', start);
      if (comma == std::string::npos) comma = fix_text.size();
      const std::string item = fix_text.substr(start, comma - start);
      const std::size_t eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("--fix takes name=value pairs", 1, start + 1);
      spec.fixed[item.substr(0, eq)] = scalar(item.substr(eq + 1), item.substr(0, eq).c_str());
      start = comma + 1;
    }
    const SearchResult result = find_counterexample(spec);
    for (const std::string& e : result.errors) err_ << "skipped " << e << "\n";
    if (machine_) {
      out_ << serialize_search(spec, result) << "\n";
    } else if (result.found()) {
      out_ << "witness at trial " << *result.trial << ": " << serialize_instance(*result.witness) << "\n";
      print_human(out_, std::string(family_name(spec.family)), *result.verdict);
    } else {
      out_ << "NoneFound after " << result.trials_examined
           << " trials (not a proof that the inequality holds there)\n";
    }
    return result.found() ? kExitViolated : kExitHolds;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool machine_ = false;
  std::string precision_text_;
  CertifyOptions options_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

}  // namespace ineqcert
