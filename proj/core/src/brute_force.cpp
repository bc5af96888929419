// Reference MIS by exhaustive enumeration. Kept independent of the
// branch-and-bound code so the two can check each other.

#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tokenlab/mis.hpp"

namespace tokenlab {

namespace {

struct Enumerator {
  std::vector<std::uint64_t> closed;
  std::uint64_t best = 0;
  int best_size = -1;
  std::uint64_t nodes = 0;

  void go(std::uint64_t remaining, std::uint64_t chosen, int size) {
    ++nodes;
    if (size + std::popcount(remaining) <= best_size)
      return;
    if (remaining == 0) {
      best = chosen;
      best_size = size;
      return;
    }
    const int v = std::countr_zero(remaining);
    const std::uint64_t bit = std::uint64_t{1} << v;
    go(remaining & ~closed[static_cast<std::size_t>(v)], chosen | bit, size + 1);
    go(remaining & ~bit, chosen, size);
  }
};

} // namespace

MisResult brute_force_alpha(const Graph& g, int cap) {
  if (cap < 1 || cap > kBruteForceHardCap)
    throw std::invalid_argument("brute force cap must be in 1.." +
                                std::to_string(kBruteForceHardCap));
  if (g.empty())
    throw std::invalid_argument("brute_force_alpha requires a graph of order >= 1");
  if (g.order() > cap)
    throw std::invalid_argument("brute force is capped at " + std::to_string(cap) +
                                " vertices (graph has " + std::to_string(g.order()) +
                                "); use the branch-and-bound solver");

  const auto start = std::chrono::steady_clock::now();
  Enumerator e;
  e.closed.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::uint64_t mask = std::uint64_t{1} << (v - 1);
    for (Vertex w : g.neighbors(v))
      mask |= std::uint64_t{1} << (w - 1);
    e.closed[static_cast<std::size_t>(v - 1)] = mask;
  }
  const std::uint64_t all =
      g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
  e.go(all, 0, 0);

  MisResult r;
  r.alpha = e.best_size;
  r.witness.graph_order = g.order();
  for (int v = 0; v < g.order(); ++v)
    if ((e.best >> v) & 1U)
      r.witness.members.push_back(v + 1);
  r.nodes = e.nodes;
  r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

} // namespace tokenlab
