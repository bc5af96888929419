#include "tokenlab/operations.hpp"

#include <stdexcept>

namespace tokenlab {

namespace {

void require_nonempty(const Graph& g, const char* op) {
  if (g.empty())
    throw std::invalid_argument(std::string(op) + ": empty graph");
}

std::vector<Edge> shifted_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int shift = g.order();
  for (const Edge& e : h.edges())
    edges.emplace_back(e.u + shift, e.v + shift);
  return edges;
}

} // namespace

Graph join(const Graph& g, const Graph& h) {
  require_nonempty(g, "join");
  require_nonempty(h, "join");
  auto edges = shifted_union(g, h);
  for (Vertex a = 1; a <= g.order(); ++a)
    for (Vertex b = 1; b <= h.order(); ++b)
      edges.emplace_back(a, g.order() + b);
  return Graph(g.order() + h.order(), std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  require_nonempty(g, "disjoint_union");
  require_nonempty(h, "disjoint_union");
  return Graph(g.order() + h.order(), shifted_union(g, h));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_nonempty(g, "cartesian_product");
  require_nonempty(h, "cartesian_product");
  const int width = h.order();
  auto label = [width](Vertex a, Vertex b) { return (a - 1) * width + b; };

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(g.order()) * h.edge_count() +
                static_cast<std::size_t>(h.order()) * g.edge_count());
  for (Vertex a = 1; a <= g.order(); ++a)
    for (const Edge& e : h.edges())
      edges.emplace_back(label(a, e.u), label(a, e.v));
  for (Vertex b = 1; b <= h.order(); ++b)
    for (const Edge& e : g.edges())
      edges.emplace_back(label(e.u, b), label(e.v, b));
  return Graph(g.order() * width, std::move(edges));
}

Subgraph delete_vertices(const Graph& g, const VertexSubset& x) {
  if (x.parent_order() != g.order())
    throw std::invalid_argument("delete_vertices: subset belongs to a graph of different order");

  std::vector<Vertex> relabel(static_cast<std::size_t>(g.order()) + 1, 0);
  Subgraph out;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (x.contains(v))
      continue;
    out.original.push_back(v);
    relabel[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = relabel[static_cast<std::size_t>(e.u)];
    const Vertex b = relabel[static_cast<std::size_t>(e.v)];
    if (a != 0 && b != 0)
      edges.emplace_back(a, b);
  }
  out.graph = Graph(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSubset& s) {
  if (s.parent_order() != g.order())
    throw std::invalid_argument("induced_subgraph: subset belongs to a graph of different order");
  return delete_vertices(g, s.complement());
}

std::vector<Subgraph> components(const Graph& g) {
  require_nonempty(g, "components");
  std::vector<int> comp(static_cast<std::size_t>(g.order()) + 1, -1);
  std::vector<std::vector<Vertex>> members;

  for (Vertex root = 1; root <= g.order(); ++root) {
    if (comp[static_cast<std::size_t>(root)] != -1)
      continue;
    const int id = static_cast<int>(members.size());
    std::vector<Vertex> stack{root};
    std::vector<Vertex> found;
    comp[static_cast<std::size_t>(root)] = id;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      found.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[static_cast<std::size_t>(w)] == -1) {
          comp[static_cast<std::size_t>(w)] = id;
          stack.push_back(w);
        }
      }
    }
    members.push_back(std::move(found));
  }

  std::vector<Subgraph> out;
  out.reserve(members.size());
  for (auto& m : members)
    out.push_back(induced_subgraph(g, VertexSubset(g.order(), std::move(m))));
  return out;
}

} // namespace tokenlab
