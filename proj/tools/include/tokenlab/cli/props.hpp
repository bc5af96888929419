#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tokenlab/cli/config.hpp"
#include "tokenlab/graph.hpp"

namespace tokenlab::cli {

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  /// Description of the first failing case, if any.
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

/// G(n, p) with p given in permille. Uses raw engine output only, so a
/// seed gives the same graph on every standard library.
Graph random_graph(std::mt19937_64& rng, int n, int edge_permille);

/// Random spanning tree plus G(n, p) extra edges.
Graph random_connected_graph(std::mt19937_64& rng, int n, int edge_permille);

/**
   Runs every structural property suite. `sizes` is the number of random
   instances drawn by each randomized suite (must be >= 1); the
   deterministic suites sweep their fixed parameter ranges.
 */
std::vector<SuiteResult> run_property_suites(std::uint64_t seed, int sizes);

/// Table or JSON. Throws ConfigError for other formats.
std::string render_suites(const std::vector<SuiteResult>& suites, Format format);

} // namespace tokenlab::cli
