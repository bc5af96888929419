#include "tokenlab/mis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>

#include "tokenlab/operations.hpp"

namespace tokenlab {

bool is_independent(const Graph& g, std::span<const Vertex> members) {
  for (Vertex v : members)
    if (!g.contains(v))
      throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(g.order()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j] || g.adjacent(members[i], members[j]))
        return false;
  return true;
}

bool is_independent(const Graph& g, const IndependentSet& s) {
  if (s.graph_order != g.order())
    return false;
  return is_independent(g, s.members);
}

namespace {

using Clock = std::chrono::steady_clock;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(int i) { w[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

  bool none() const {
    for (auto x : w)
      if (x)
        return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w)
      c += std::popcount(x);
    return c;
  }
  int first() const {
    for (std::size_t i = 0; i < W; ++i)
      if (w[i])
        return static_cast<int>(i * 64) + std::countr_zero(w[i]);
    return -1;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < W; ++i)
      w[i] &= o.w[i];
    return *this;
  }
  Bits without(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < W; ++i)
      r.w[i] &= ~o.w[i];
    return r;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < W; ++i)
      c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = w[i];
      while (x) {
        f(static_cast<int>(i * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

template <std::size_t W>
class BranchAndBound {
public:
  BranchAndBound(const Graph& g, const SolveOptions& options) : n_(g.order()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (const Edge& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u - 1)].set(e.v - 1);
      adj_[static_cast<std::size_t>(e.v - 1)].set(e.u - 1);
    }
    if (options.budget)
      deadline_ = Clock::now() + *options.budget;
  }

  MisResult solve() {
    const auto start = Clock::now();
    Bits<W> all;
    for (int v = 0; v < n_; ++v)
      all.set(v);

    greedy(all);
    Bits<W> none;
    search(all, none, 0);

    MisResult r;
    r.alpha = best_size_;
    r.witness.graph_order = n_;
    best_.for_each([&](int v) { r.witness.members.push_back(v + 1); });
    r.nodes = nodes_;
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
    r.status = aborted_ ? SolveStatus::aborted : SolveStatus::exact;
    return r;
  }

private:
  void greedy(Bits<W> rest) {
    Bits<W> chosen;
    int size = 0;
    while (!rest.none()) {
      int pick = -1;
      int pick_degree = 0;
      rest.for_each([&](int v) {
        const int d = adj_[static_cast<std::size_t>(v)].count_and(rest);
        if (pick < 0 || d < pick_degree) {
          pick = v;
          pick_degree = d;
        }
      });
      chosen.set(pick);
      ++size;
      rest = rest.without(adj_[static_cast<std::size_t>(pick)]);
      rest.reset(pick);
    }
    best_ = chosen;
    best_size_ = size;
  }

  // Number of cliques in a greedy cover of `rest`; stops once the cover
  // alone proves the branch can still improve on the incumbent.
  int clique_cover(Bits<W> rest, int current) const {
    int cliques = 0;
    while (!rest.none()) {
      if (current + cliques > best_size_)
        return cliques;
      const int v = rest.first();
      rest.reset(v);
      Bits<W> cand = rest;
      cand &= adj_[static_cast<std::size_t>(v)];
      while (!cand.none()) {
        const int u = cand.first();
        rest.reset(u);
        cand.reset(u);
        cand &= adj_[static_cast<std::size_t>(u)];
      }
      ++cliques;
    }
    return cliques;
  }

  bool out_of_time() {
    if (aborted_)
      return true;
    // Nodes on wide graphs are expensive, so look at the clock more often.
    constexpr std::uint64_t mask = W == 1 ? 1023U : W <= 4 ? 15U : 0U;
    if (deadline_ && (nodes_ & mask) == 0 && Clock::now() > *deadline_)
      aborted_ = true;
    return aborted_;
  }

  void search(const Bits<W>& remaining, const Bits<W>& current, int size) {
    ++nodes_;
    if (out_of_time())
      return;
    if (remaining.none()) {
      if (size > best_size_) {
        best_size_ = size;
        best_ = current;
      }
      return;
    }
    if (size + clique_cover(remaining, size) <= best_size_)
      return;

    int pivot = -1;
    int pivot_degree = -1;
    remaining.for_each([&](int v) {
      const int d = adj_[static_cast<std::size_t>(v)].count_and(remaining);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    });

    if (pivot_degree == 0) {
      const int total = size + remaining.count();
      if (total > best_size_) {
        best_size_ = total;
        best_ = current;
        remaining.for_each([&](int v) { best_.set(v); });
      }
      return;
    }

    Bits<W> with = current;
    with.set(pivot);
    Bits<W> include = remaining.without(adj_[static_cast<std::size_t>(pivot)]);
    include.reset(pivot);
    search(include, with, size + 1);

    Bits<W> exclude = remaining;
    exclude.reset(pivot);
    search(exclude, current, size);
  }

  int n_;
  std::vector<Bits<W>> adj_;
  Bits<W> best_;
  int best_size_ = 0;
  std::uint64_t nodes_ = 0;
  std::optional<Clock::time_point> deadline_;
  bool aborted_ = false;
};

template <std::size_t W>
MisResult run(const Graph& g, const SolveOptions& options) {
  return BranchAndBound<W>(g, options).solve();
}

} // namespace

MisResult alpha(const Graph& g, const SolveOptions& options) {
  if (g.empty())
    throw std::invalid_argument("alpha requires a graph of order >= 1");
  const int n = g.order();
  if (n <= 64)
    return run<1>(g, options);
  if (n <= 128)
    return run<2>(g, options);
  if (n <= 256)
    return run<4>(g, options);
  if (n <= 512)
    return run<8>(g, options);
  if (n <= 1024)
    return run<16>(g, options);
  if (n <= 2048)
    return run<32>(g, options);
  if (n <= 4096)
    return run<64>(g, options);
  throw std::invalid_argument("alpha supports at most 4096 vertices, got " + std::to_string(n));
}

MisResult alpha_avoiding(const Graph& g, Vertex v, const SolveOptions& options) {
  if (!g.contains(v))
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(g.order()));
  const auto rest = delete_vertices(g, VertexSubset(g.order(), {v}));
  if (rest.graph.empty())
    return MisResult{0, IndependentSet{g.order(), {}}, 0, {}, SolveStatus::exact};

  MisResult r = alpha(rest.graph, options);
  for (Vertex& m : r.witness.members)
    m = rest.to_parent(m);
  r.witness.graph_order = g.order();
  return r;
}

} // namespace tokenlab
