#include "tokenlab/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace tokenlab {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix m(n + 1, std::vector<char>(n + 1, 0));
  for (const Edge& e : g.edges()) {
    m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  return m;
}

// Joint color refinement so that equal colors mean the same thing in both
// graphs. Returns false if the color histograms ever diverge.
bool refine(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const auto n = static_cast<std::size_t>(g.order());
  cg.assign(n + 1, 0);
  ch.assign(n + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) {
    cg[static_cast<std::size_t>(v)] = g.degree(v);
    ch[static_cast<std::size_t>(v)] = h.degree(v);
  }

  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> ids;
    auto signature = [](const Graph& x, const std::vector<int>& colors, Vertex v) {
      std::vector<int> around;
      for (Vertex w : x.neighbors(v))
        around.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(around.begin(), around.end());
      return Signature{colors[static_cast<std::size_t>(v)], std::move(around)};
    };

    std::vector<Signature> sg, sh;
    for (Vertex v = 1; v <= g.order(); ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    for (const auto& s : sg)
      ids.emplace(s, 0);
    for (const auto& s : sh)
      ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids)
      id = next++;

    std::vector<int> hist_g(ids.size(), 0), hist_h(ids.size(), 0);
    for (Vertex v = 1; v <= g.order(); ++v) {
      const auto i = static_cast<std::size_t>(v - 1);
      cg[static_cast<std::size_t>(v)] = ids.at(sg[i]);
      ch[static_cast<std::size_t>(v)] = ids.at(sh[i]);
      ++hist_g[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])];
      ++hist_h[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])];
    }
    if (hist_g != hist_h)
      return false;
    if (ids.size() == classes)
      return true;
    classes = ids.size();
  }
}

class Matcher {
public:
  Matcher(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch)
      : g_(g), h_(h), ag_(adjacency_matrix(g)), ah_(adjacency_matrix(h)), cg_(std::move(cg)),
        ch_(std::move(ch)) {
    const auto n = static_cast<std::size_t>(g.order());
    map_.assign(n + 1, 0);
    used_.assign(n + 1, false);
    build_order();
  }

  std::optional<std::vector<Vertex>> run() {
    if (!extend(0))
      return std::nullopt;
    return std::vector<Vertex>(map_.begin() + 1, map_.end());
  }

private:
  // Prefer vertices with many already-placed neighbors, then rare colors.
  void build_order() {
    const int n = g_.order();
    std::map<int, int> class_size;
    for (Vertex v = 1; v <= n; ++v)
      ++class_size[cg_[static_cast<std::size_t>(v)]];

    std::vector<int> placed_neighbors(static_cast<std::size_t>(n) + 1, 0);
    std::vector<bool> placed(static_cast<std::size_t>(n) + 1, false);
    for (int step = 0; step < n; ++step) {
      Vertex best = 0;
      for (Vertex v = 1; v <= n; ++v) {
        if (placed[static_cast<std::size_t>(v)])
          continue;
        if (best == 0) {
          best = v;
          continue;
        }
        const auto key = [&](Vertex x) {
          return std::make_pair(-placed_neighbors[static_cast<std::size_t>(x)],
                                class_size[cg_[static_cast<std::size_t>(x)]]);
        };
        if (key(v) < key(best))
          best = v;
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
      for (Vertex w : g_.neighbors(best))
        ++placed_neighbors[static_cast<std::size_t>(w)];
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size())
      return true;
    const Vertex u = order_[depth];
    const auto ui = static_cast<std::size_t>(u);
    for (Vertex w = 1; w <= h_.order(); ++w) {
      const auto wi = static_cast<std::size_t>(w);
      if (used_[wi] || ch_[wi] != cg_[ui])
        continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const auto pu = static_cast<std::size_t>(order_[k]);
        const auto pw = static_cast<std::size_t>(map_[pu]);
        consistent = ag_[ui][pu] == ah_[wi][pw];
      }
      if (!consistent)
        continue;
      map_[ui] = w;
      used_[wi] = true;
      if (extend(depth + 1))
        return true;
      used_[wi] = false;
      map_[ui] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  Matrix ag_, ah_;
  std::vector<int> cg_, ch_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

} // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count())
    return std::nullopt;
  if (g.empty())
    return std::vector<Vertex>{};

  std::vector<int> dg, dh;
  for (Vertex v = 1; v <= g.order(); ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh)
    return std::nullopt;

  std::vector<int> cg, ch;
  if (!refine(g, h, cg, ch))
    return std::nullopt;
  return Matcher(g, h, std::move(cg), std::move(ch)).run();
}

bool is_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<Vertex>& mapping) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count() ||
      mapping.size() != static_cast<std::size_t>(g.order()))
    return false;
  std::set<Vertex> image(mapping.begin(), mapping.end());
  if (image.size() != mapping.size() || (!image.empty() && (*image.begin() < 1 || *image.rbegin() > h.order())))
    return false;
  for (const Edge& e : g.edges()) {
    if (!h.adjacent(mapping[static_cast<std::size_t>(e.u - 1)], mapping[static_cast<std::size_t>(e.v - 1)]))
      return false;
  }
  return true;
}

} // namespace tokenlab
