#include "mccgs/problem.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mccgs {

using nlohmann::json;

OrderKind parse_order(std::string_view name) {
  if (name == "lex") return OrderKind::Lex;
  if (name == "grevlex") return OrderKind::Grevlex;
  throw ProblemError("unknown order '" + std::string(name) + "' (expected lex or grevlex)");
}

std::string order_name(OrderKind k) { return k == OrderKind::Lex ? "lex" : "grevlex"; }

namespace {

std::vector<std::string> string_list(const json& doc, const char* key, bool required) {
  if (!doc.contains(key)) {
    if (required) throw ProblemError(std::string("missing field '") + key + "'");
    return {};
  }
  const json& v = doc.at(key);
  if (!v.is_array()) throw ProblemError(std::string("field '") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_string())
      throw ProblemError(std::string("field '") + key + "[" + std::to_string(i) + "]' must be a string");
    out.push_back(v[i].get<std::string>());
  }
  return out;
}

template <typename T>
T number(const json& opts, const char* key, T fallback, long long lo) {
  if (!opts.contains(key)) return fallback;
  const json& v = opts.at(key);
  if (!v.is_number_integer() || v.get<long long>() < lo)
    throw ProblemError(std::string("field 'options.") + key + "' must be an integer >= " + std::to_string(lo));
  return static_cast<T>(v.get<long long>());
}

std::vector<Poly> parse_all(const std::vector<std::string>& texts, const RingPtr& R, const char* field) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    try {
      out.push_back(parse_poly(texts[i], R));
    } catch (const ParseError& e) {
      throw ProblemError(std::string("field '") + field + "[" + std::to_string(i) + "]': " + e.what());
    }
  }
  return out;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ProblemError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ProblemError("problem must be a JSON object");
  static const char* known[] = {"vars", "params", "order_x", "order_a", "polys", "null", "notnull", "options"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (std::find(std::begin(known), std::end(known), it.key()) == std::end(known))
      throw ProblemError("unknown field '" + it.key() + "'");
  Problem p;
  p.space.vars = string_list(doc, "vars", true);
  p.space.params = string_list(doc, "params", false);
  try {
    p.space.validate();
  } catch (const std::invalid_argument& e) {
    throw ProblemError(std::string("vars/params: ") + e.what());
  }
  for (const char* key : {"order_x", "order_a"}) {
    if (!doc.contains(key)) continue;
    if (!doc.at(key).is_string()) throw ProblemError(std::string("field '") + key + "' must be a string");
    OrderKind k = parse_order(doc.at(key).get<std::string>());
    (std::string(key) == "order_x" ? p.order_x : p.order_a) = k;
  }
  p.polys = string_list(doc, "polys", true);
  p.null = string_list(doc, "null", false);
  p.notnull = string_list(doc, "notnull", false);
  if (doc.contains("options")) {
    const json& o = doc.at("options");
    if (!o.is_object()) throw ProblemError("field 'options' must be an object");
    for (auto it = o.begin(); it != o.end(); ++it)
      if (it.key() != "max_factor_degree" && it.key() != "oracle_samples" && it.key() != "seed")
        throw ProblemError("unknown field 'options." + it.key() + "'");
    p.options.max_factor_degree = number<int>(o, "max_factor_degree", p.options.max_factor_degree, 1);
    p.options.oracle_samples = number<std::size_t>(o, "oracle_samples", p.options.oracle_samples, 0);
    p.options.seed = number<unsigned>(o, "seed", p.options.seed, 0);
  }
  return p;
}

Problem read_problem(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

Instance instantiate(const Problem& p) {
  Instance inst{ParametricRings::make(p.space, p.order_x, p.order_a), {}, {}, {}};
  inst.F = parse_all(p.polys, inst.rings.full, "polys");
  inst.null0 = parse_all(p.null, inst.rings.params, "null");
  inst.notnull0 = parse_all(p.notnull, inst.rings.params, "notnull");
  return inst;
}

MccgsOptions mccgs_options(const ProblemOptions& o) {
  MccgsOptions m;
  m.primes.factor.max_total_degree = o.max_factor_degree;
  m.primes.seed = o.seed;
  return m;
}

}  // namespace mccgs
