#include "tokenlab/token.hpp"

#include <algorithm>
#include <stdexcept>

#include "tokenlab/operations.hpp"

namespace tokenlab {

const char* to_string(TokenKind kind) { return kind == TokenKind::subset ? "subset" : "multiset"; }

TokenVertex::TokenVertex(TokenKind kind, std::vector<Vertex> elements)
    : kind_(kind), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (kind_ == TokenKind::subset &&
      std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("subset token " + to_string() + " repeats an element");
}

bool TokenVertex::contains(Vertex v) const {
  return std::binary_search(elements_.begin(), elements_.end(), v);
}

std::string TokenVertex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

DerivedGraph::DerivedGraph(Graph graph, std::vector<TokenVertex> labels, int base_order,
                           TokenKind kind, int tokens)
    : graph_(std::move(graph)), labels_(std::move(labels)), base_order_(base_order), kind_(kind),
      tokens_(tokens) {
  if (labels_.size() != static_cast<std::size_t>(graph_.order()))
    throw std::invalid_argument("derived graph needs one label per vertex");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Vertex>(i + 1)).second)
      throw std::invalid_argument("duplicate token label " + labels_[i].to_string());
  }
}

const TokenVertex& DerivedGraph::label_of(Vertex index) const {
  if (index < 1 || index > graph_.order())
    throw std::out_of_range("token index " + std::to_string(index) + " outside 1.." +
                            std::to_string(graph_.order()));
  return labels_[static_cast<std::size_t>(index - 1)];
}

std::optional<Vertex> DerivedGraph::find(const TokenVertex& tv) const {
  auto it = index_.find(tv);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Vertex DerivedGraph::index_of(const TokenVertex& tv) const {
  if (auto found = find(tv))
    return *found;
  throw std::invalid_argument("no vertex labeled " + tv.to_string() + " (" +
                              tokenlab::to_string(tv.kind()) + ") in this derived graph");
}

std::vector<Vertex> DerivedGraph::indices_of(const std::vector<TokenVertex>& tokens) const {
  std::vector<Vertex> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens)
    out.push_back(index_of(t));
  return out;
}

std::vector<TokenVertex> DerivedGraph::labels_of(const std::vector<Vertex>& indices) const {
  std::vector<TokenVertex> out;
  out.reserve(indices.size());
  for (Vertex v : indices)
    out.push_back(label_of(v));
  return out;
}

VertexSubset DerivedGraph::touching(const VertexSubset& base) const {
  std::vector<Vertex> hit;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const auto& el = labels_[i].elements();
    if (std::any_of(el.begin(), el.end(), [&](Vertex v) { return base.contains(v); }))
      hit.push_back(static_cast<Vertex>(i + 1));
  }
  return VertexSubset(graph_.order(), std::move(hit));
}

Subgraph induced_on_tokens(const DerivedGraph& dg,
                           const std::function<bool(const TokenVertex&)>& keep) {
  std::vector<Vertex> kept;
  for (std::size_t i = 0; i < dg.labels().size(); ++i)
    if (keep(dg.labels()[i]))
      kept.push_back(static_cast<Vertex>(i + 1));
  return induced_subgraph(dg.graph(), VertexSubset(dg.graph().order(), std::move(kept)));
}

namespace {

void require_order(const Graph& g, const char* op) {
  if (g.order() < 2)
    throw std::invalid_argument(std::string(op) + " requires a base graph of order >= 2, got " +
                                std::to_string(g.order()));
}

// Lexicographic enumeration of k-subsets of 1..n.
std::vector<std::vector<Vertex>> k_subsets(int n, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1)
      --i;
    if (i < 0)
      break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

} // namespace

DerivedGraph double_vertex(const Graph& g) {
  require_order(g, "double_vertex");
  const int n = g.order();
  std::vector<TokenVertex> labels;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      labels.push_back(TokenVertex::pair(a, b));

  // Rank of {a,b}, a < b, in lexicographic order.
  auto rank = [n](Vertex a, Vertex b) {
    if (a > b)
      std::swap(a, b);
    return (a - 1) * n - (a - 1) * a / 2 + (b - a);
  };

  // {a,b} ~ {a,z} for z ~ b, z != a (and symmetrically with a and b swapped).
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      const Vertex self = rank(a, b);
      for (Vertex z : g.neighbors(b))
        if (z != a)
          edges.emplace_back(self, rank(a, z));
      for (Vertex z : g.neighbors(a))
        if (z != b)
          edges.emplace_back(self, rank(z, b));
    }
  }
  Graph graph(static_cast<int>(labels.size()), std::move(edges));
  return DerivedGraph(std::move(graph), std::move(labels), n, TokenKind::subset, 2);
}

DerivedGraph k_token(const Graph& g, int k) {
  if (g.empty() || k < 1 || k > g.order())
    throw std::invalid_argument("k_token requires 1 <= k <= order, got k = " + std::to_string(k) +
                                " on order " + std::to_string(g.order()));
  const auto subsets = k_subsets(g.order(), k);

  std::vector<Edge> edges;
  std::vector<Vertex> diff;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      diff.clear();
      std::set_symmetric_difference(subsets[i].begin(), subsets[i].end(), subsets[j].begin(),
                                    subsets[j].end(), std::back_inserter(diff));
      if (diff.size() == 2 && g.adjacent(diff[0], diff[1]))
        edges.emplace_back(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  }

  std::vector<TokenVertex> labels;
  labels.reserve(subsets.size());
  for (const auto& s : subsets)
    labels.emplace_back(TokenKind::subset, s);
  Graph graph(static_cast<int>(labels.size()), std::move(edges));
  return DerivedGraph(std::move(graph), std::move(labels), g.order(), TokenKind::subset, k);
}

DerivedGraph pair_graph(const Graph& g) {
  require_order(g, "pair_graph");
  const int n = g.order();
  std::vector<TokenVertex> labels;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a; b <= n; ++b)
      labels.push_back(TokenVertex::multiset(a, b));

  // Rank of {a,b}, a <= b, in lexicographic order.
  auto rank = [n](Vertex a, Vertex b) {
    if (a > b)
      std::swap(a, b);
    return (a - 1) * n - (a - 1) * (a - 2) / 2 + (b - a) + 1;
  };

  // {a,x} ~ {a,y} for y ~ x, under either reading of the shared element.
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a; b <= n; ++b) {
      const Vertex self = rank(a, b);
      for (Vertex y : g.neighbors(b))
        edges.emplace_back(self, rank(a, y));
      for (Vertex y : g.neighbors(a))
        edges.emplace_back(self, rank(b, y));
    }
  }
  Graph graph(static_cast<int>(labels.size()), std::move(edges));
  return DerivedGraph(std::move(graph), std::move(labels), n, TokenKind::multiset, 2);
}

} // namespace tokenlab
