#pragma once

#include <string>
#include <string_view>

#include "ineqcert/instance.hpp"
#include "ineqcert/integral.hpp"
#include "ineqcert/reductions.hpp"
#include "ineqcert/search.hpp"
#include "ineqcert/verdict.hpp"

namespace ineqcert {

/// Instance file:
///   {"family": "Radon", "a": ["1", "2"], "b": ["1", "3"], "params": {"m": "2"}}
/// "b", "w" and "params" are optional where the family does not use them.
/// Rationals are strings in "p/q" or "p" form. Throws ParseError carrying
/// the 1-based line and column of the offending token.
InequalityInstance parse_instance(std::string_view text);
/// Canonical single-line form; parse_instance(serialize_instance(x)) == x.
std::string serialize_instance(const InequalityInstance& inst);

/// One-line verdict record: outcome, relation, lhs/rhs/margin as
/// ["m*2^e", "m*2^e"], precision_used, then the exact values and notes when
/// present.
std::string serialize_verdict(const Verdict& verdict);

std::string serialize_reduction(const ReductionRecord& record);
std::string serialize_search(const SearchSpec& spec, const SearchResult& result);

/// Piecewise polynomial: [{"lo": "0", "hi": "1", "coeffs": ["1", "1"]}, ...]
PiecewisePoly parse_piecewise(std::string_view text);
std::string serialize_piecewise(const PiecewisePoly& f);

/// Comma-separated rationals, "1,2/3,-4".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace ineqcert
