#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tokenlab/graph.hpp"

namespace tokenlab {

/// Vertex set of a graph of the given order. Independence is certified
/// separately with is_independent().
struct IndependentSet {
  int graph_order = 0;
  std::vector<Vertex> members;

  std::size_t size() const { return members.size(); }
};

enum class SolveStatus { exact, aborted };

struct MisResult {
  /// Exact independence number, or the best size found when aborted.
  int alpha = 0;
  IndependentSet witness;
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
  SolveStatus status = SolveStatus::exact;

  bool aborted() const { return status == SolveStatus::aborted; }
};

struct SolveOptions {
  /// Wall-clock limit for the search; unset means run to completion.
  std::optional<std::chrono::milliseconds> budget;
};

inline constexpr int kBruteForceDefaultCap = 26;
inline constexpr int kBruteForceHardCap = 64;

/// Throws std::out_of_range for members outside 1..order.
bool is_independent(const Graph& g, std::span<const Vertex> members);
bool is_independent(const Graph& g, const IndependentSet& s);

/**
   Reference solver: plain include/exclude enumeration pruned only by
   "current + remaining <= best". Rejects graphs above `cap` vertices
   (cap itself may not exceed kBruteForceHardCap).
 */
MisResult brute_force_alpha(const Graph& g, int cap = kBruteForceDefaultCap);

/**
   Exact maximum independent set by branch and bound.

   Branches on the lowest-indexed vertex of maximum residual degree,
   include before exclude. A subproblem is cut when the current size plus
   a greedy clique cover of the residual graph cannot beat the incumbent,
   which starts from a min-degree greedy set. Results are deterministic
   for a given graph. Supports up to 4096 vertices.
 */
MisResult alpha(const Graph& g, const SolveOptions& options = {});

/// Best independent set that leaves out `v`; labels refer to g.
MisResult alpha_avoiding(const Graph& g, Vertex v, const SolveOptions& options = {});

} // namespace tokenlab
