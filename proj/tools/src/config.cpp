#include "tokenlab/cli/config.hpp"

#include <charconv>

#include "tokenlab/families.hpp"
#include "tokenlab/token.hpp"
#include "tokenlab/cli/sweep.hpp"

namespace tokenlab::cli {

namespace {

int parse_int(std::string_view text, const char* what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ConfigError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
  return value;
}

} // namespace

OperatorSpec OperatorSpec::parse(std::string_view text) {
  if (text.empty() || text == "none")
    return {};
  if (text == "dv")
    return {Kind::double_vertex, 2};
  if (text == "pair")
    return {Kind::pair_graph, 2};
  if (text.starts_with("token:")) {
    const int k = parse_int(text.substr(6), "token count");
    if (k < 1)
      throw ConfigError("token count must be >= 1");
    return {Kind::token, k};
  }
  throw ConfigError("unknown operator '" + std::string(text) + "' (expected dv, pair, token:k)");
}

std::string OperatorSpec::name() const {
  switch (kind) {
  case Kind::none: return "none";
  case Kind::double_vertex: return "double_vertex";
  case Kind::pair_graph: return "pair_graph";
  case Kind::token: return "token:" + std::to_string(k);
  }
  return "none";
}

Method parse_method(std::string_view text) {
  if (text == "auto")
    return Method::automatic;
  if (text == "brute")
    return Method::brute;
  if (text == "bnb")
    return Method::bnb;
  throw ConfigError("unknown method '" + std::string(text) + "' (expected auto, brute, bnb)");
}

Format parse_format(std::string_view text) {
  if (text == "table")
    return Format::table;
  if (text == "csv")
    return Format::csv;
  if (text == "json")
    return Format::json;
  if (text == "dot")
    return Format::dot;
  throw ConfigError("unknown format '" + std::string(text) + "'");
}

Range Range::parse(std::string_view text) {
  Range r;
  if (const auto dots = text.find(".."); dots != std::string_view::npos) {
    r.lo = parse_int(text.substr(0, dots), "range start");
    r.hi = parse_int(text.substr(dots + 2), "range end");
  } else {
    r.lo = r.hi = parse_int(text, "range");
  }
  if (r.lo > r.hi)
    throw ConfigError("empty range " + std::string(text));
  return r;
}

std::vector<FormulaId> parse_families(const std::vector<std::string>& names) {
  std::vector<FormulaId> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& t : sweep_targets())
        out.push_back(t.formula);
      continue;
    }
    const auto id = parse_formula(name);
    if (!id || !find_target(*id))
      throw ConfigError("unknown family '" + name + "'");
    out.push_back(*id);
  }
  if (out.empty())
    throw ConfigError("no families selected");
  return out;
}

Graph build_family(std::string_view family, int m) {
  try {
    if (family == "path")
      return path(m);
    if (family == "cycle")
      return cycle(m);
    if (family == "complete")
      return complete(m);
    if (family == "fan")
      return fan(m);
    if (family == "wheel")
      return wheel(m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("unknown family '" + std::string(family) +
                    "' (expected path, cycle, complete, fan, wheel)");
}

BuiltGraph build(std::string_view family, int m, const OperatorSpec& op) {
  BuiltGraph b{build_family(family, m), std::nullopt};
  try {
    switch (op.kind) {
    case OperatorSpec::Kind::none: break;
    case OperatorSpec::Kind::double_vertex: b.derived = double_vertex(b.base); break;
    case OperatorSpec::Kind::pair_graph: b.derived = pair_graph(b.base); break;
    case OperatorSpec::Kind::token: b.derived = k_token(b.base, op.k); break;
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return b;
}

MisResult solve(const Graph& g, Method method, const SolveOptions& options) {
  switch (method) {
  case Method::brute:
    try {
      return brute_force_alpha(g, kBruteForceHardCap);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  case Method::bnb: return alpha(g, options);
  case Method::automatic:
    if (g.order() <= kAutoBruteForceMaxOrder)
      return brute_force_alpha(g, kAutoBruteForceMaxOrder);
    return alpha(g, options);
  }
  return alpha(g, options);
}

} // namespace tokenlab::cli
