#include "ineqcert/text_format.hpp"

#include <json.hpp>

namespace ineqcert {

namespace {

using Json = nlohmann::ordered_json;

// 1-based line and column of byte `offset` in `text`.
std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {
    try {
      root_ = Json::parse(text_);
    } catch (const Json::parse_error& e) {
      const auto [line, column] = position(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError("malformed JSON", line, column);
    }
  }

  const Json& root() const { return root_; }

  [[noreturn]] void fail(const std::string& message, const std::string& token) const {
    const std::size_t at = token.empty() ? std::string_view::npos : text_.find(token);
    if (at == std::string_view::npos) throw ParseError(message, 1, 1);
    const auto [line, column] = position(text_, at);
    throw ParseError(message, line, column);
  }

  Rational rational(const Json& value, const std::string& field) const {
    if (!value.is_string()) fail(field + ": rationals must be strings", "\"" + field + "\"");
    const std::string text = value.get<std::string>();
    try {
      return Rational::parse(text);
    } catch (const ParseError&) {
      fail(field + ": malformed rational \"" + text + "\"", "\"" + text + "\"");
    }
  }

  std::vector<Rational> rationals(const Json& value, const std::string& field) const {
    if (!value.is_array()) fail(field + " must be a list", "\"" + field + "\"");
    std::vector<Rational> out;
    for (const Json& item : value) out.push_back(rational(item, field));
    return out;
  }

  const Json& object() const {
    if (!root_.is_object()) throw ParseError("expected an object", 1, 1);
    return root_;
  }

 private:
  std::string_view text_;
  Json root_;
};

Json pair(const DyadicInterval& interval) {
  return Json::array({interval.lo().to_string(), interval.hi().to_string()});
}

Json strings(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(v.to_string());
  return out;
}

Json instance_json(const InequalityInstance& inst) {
  Json out;
  out["family"] = std::string(family_name(inst.family));
  out["a"] = strings(inst.a);
  if (uses_b(inst.family) || !inst.b.empty()) out["b"] = strings(inst.b);
  if (uses_w(inst.family) || !inst.w.empty()) out["w"] = strings(inst.w);
  Json params = Json::object();
  for (const auto& [name, value] : inst.params) params[name] = value.to_string();
  out["params"] = params;
  return out;
}

Json verdict_json(const Verdict& v) {
  Json out;
  out["outcome"] = to_string(v.outcome);
  out["relation"] = to_string(v.relation);
  out["lhs"] = pair(v.lhs);
  out["rhs"] = pair(v.rhs);
  out["margin"] = pair(v.margin);
  out["precision_used"] = v.precision_used;
  if (v.lhs_exact) out["lhs_exact"] = v.lhs_exact->to_string();
  if (v.rhs_exact) out["rhs_exact"] = v.rhs_exact->to_string();
  if (auto m = v.margin_exact()) out["margin_exact"] = m->to_string();
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

}  // namespace

InequalityInstance parse_instance(std::string_view text) {
  const Reader reader(text);
  const Json& root = reader.object();
  for (const auto& [key, value] : root.items()) {
    if (key != "family" && key != "a" && key != "b" && key != "w" && key != "params") {
      reader.fail("unknown field " + key, "\"" + key + "\"");
    }
  }
  if (!root.contains("family") || !root["family"].is_string()) reader.fail("missing field family", "");
  const std::string name = root["family"].get<std::string>();
  const std::optional<Family> family = parse_family(name);
  if (!family) reader.fail("unknown family " + name, "\"" + name + "\"");
  InequalityInstance inst;
  inst.family = *family;
  if (!root.contains("a")) reader.fail("missing field a", "");
  inst.a = reader.rationals(root["a"], "a");
  if (root.contains("b")) inst.b = reader.rationals(root["b"], "b");
  if (root.contains("w")) inst.w = reader.rationals(root["w"], "w");
  if (root.contains("params")) {
    const Json& params = root["params"];
    if (!params.is_object()) reader.fail("params must be an object", "\"params\"");
    for (const auto& [key, value] : params.items()) inst.params[key] = reader.rational(value, key);
  }
  for (const std::string& p : required_params(inst.family)) {
    if (!inst.params.count(p)) reader.fail("missing parameter " + p, "\"params\"");
  }
  if (uses_b(inst.family) && inst.b.size() != inst.a.size()) reader.fail("length mismatch between a and b", "\"b\"");
  if (uses_w(inst.family) && inst.w.size() != inst.a.size()) reader.fail("length mismatch between a and w", "\"w\"");
  if (inst.a.empty()) reader.fail("a must not be empty", "\"a\"");
  return inst;
}

std::string serialize_instance(const InequalityInstance& inst) { return instance_json(inst).dump(); }

std::string serialize_verdict(const Verdict& verdict) { return verdict_json(verdict).dump(); }

std::string serialize_reduction(const ReductionRecord& record) {
  Json out;
  out["source"] = instance_json(record.source);
  out["target"] = instance_json(record.target);
  out["identity_checked"] = record.identity_checked;
  return out.dump();
}

std::string serialize_search(const SearchSpec& spec, const SearchResult& result) {
  Json out;
  out["result"] = result.found() ? "Witness" : "NoneFound";
  out["family"] = std::string(family_name(spec.family));
  out["violate"] = spec.violate;
  out["seed"] = spec.seed;
  out["trials"] = spec.trials;
  out["trials_examined"] = result.trials_examined;
  if (result.found()) {
    out["trial"] = *result.trial;
    out["witness"] = instance_json(*result.witness);
    out["verdict"] = verdict_json(*result.verdict);
  }
  out["errors"] = result.errors.size();
  return out.dump();
}

PiecewisePoly parse_piecewise(std::string_view text) {
  const Reader reader(text);
  const Json& root = reader.root();
  if (!root.is_array()) throw ParseError("expected a list of segments", 1, 1);
  std::vector<Segment> segments;
  for (const Json& seg : root) {
    if (!seg.is_object() || !seg.contains("lo") || !seg.contains("hi") || !seg.contains("coeffs")) {
      reader.fail("segment needs lo, hi and coeffs", "{");
    }
    segments.push_back(Segment{reader.rational(seg["lo"], "lo"), reader.rational(seg["hi"], "hi"),
                               Polynomial(reader.rationals(seg["coeffs"], "coeffs"))});
  }
  try {
    return PiecewisePoly(std::move(segments));
  } catch (const DomainError& e) {
    throw ParseError(e.predicate(), 1, 1);
  }
}

std::string serialize_piecewise(const PiecewisePoly& f) {
  Json out = Json::array();
  for (const Segment& s : f.segments()) {
    Json seg;
    seg["lo"] = s.lo.to_string();
    seg["hi"] = s.hi.to_string();
    seg["coeffs"] = strings(s.poly.coeffs());
    out.push_back(seg);
  }
  return out.dump();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    try {
      out.push_back(Rational::parse(item));
    } catch (const ParseError& e) {
      throw ParseError("malformed rational \"" + std::string(item) + "\"", 1,
                       start + (e.column() == 0 ? 1 : e.column()));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace ineqcert
