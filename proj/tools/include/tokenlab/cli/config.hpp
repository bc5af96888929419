#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tokenlab/formulas.hpp"
#include "tokenlab/mis.hpp"
#include "tokenlab/token.hpp"

namespace tokenlab::cli {

/// Bad user input; the CLI maps it to exit code 64.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitAborted = 2;
inline constexpr int kExitConfig = 64;

/// `dv`, `pair`, `token:k`, or none (the base graph itself).
struct OperatorSpec {
  enum class Kind { none, double_vertex, pair_graph, token };
  Kind kind = Kind::none;
  int k = 0;

  static OperatorSpec parse(std::string_view text);
  std::string name() const;
};

enum class Method { automatic, brute, bnb };
Method parse_method(std::string_view text);

/// Brute force below this order under Method::automatic.
inline constexpr int kAutoBruteForceMaxOrder = 20;

enum class Format { table, csv, json, dot };
Format parse_format(std::string_view text);

/// Inclusive integer range written `A..B` (or a single `A`).
struct Range {
  int lo = 0;
  int hi = 0;

  static Range parse(std::string_view text);
};

struct RunConfig {
  std::vector<FormulaId> families;
  std::optional<Range> m;
  Method method = Method::automatic;
  std::optional<std::chrono::milliseconds> budget;
  Format format = Format::table;
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;
  /// Write the `ms` column as 0 so reports are byte-stable.
  bool timing = true;
};

/// Comma-separated formula names, or `all` for every sweep target.
std::vector<FormulaId> parse_families(const std::vector<std::string>& names);

/// path | cycle | complete | fan | wheel
Graph build_family(std::string_view family, int m);

/// Base graph, with the derived graph when an operator is requested.
struct BuiltGraph {
  Graph base;
  std::optional<DerivedGraph> derived;

  const Graph& target() const { return derived ? derived->graph() : base; }
};

BuiltGraph build(std::string_view family, int m, const OperatorSpec& op);

/// Runs the requested solver; Method::automatic picks brute force for
/// graphs with at most kAutoBruteForceMaxOrder vertices.
MisResult solve(const Graph& g, Method method, const SolveOptions& options = {});

} // namespace tokenlab::cli
