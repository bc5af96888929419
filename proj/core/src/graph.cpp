#include "tokenlab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tokenlab {

Graph::Graph(int order) : Graph(order, std::vector<Edge>{}) {}

Graph::Graph(int order, std::initializer_list<Edge> edges)
    : Graph(order, std::vector<Edge>(edges)) {}

Graph::Graph(int order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  if (order < 0)
    throw std::invalid_argument("graph order must be non-negative");

  for (const Edge& e : edges_) {
    if (e.u == e.v)
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > order)
      throw std::invalid_argument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  "} outside 1.." + std::to_string(order));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.resize(static_cast<std::size_t>(order) + 1);
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v))
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(order_));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::adjacent(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

VertexSubset::VertexSubset(int parent_order, std::initializer_list<Vertex> members)
    : VertexSubset(parent_order, std::vector<Vertex>(members)) {}

VertexSubset::VertexSubset(int parent_order, std::vector<Vertex> members)
    : parent_order_(parent_order), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < 1 || members_.back() > parent_order))
    throw std::out_of_range("vertex subset member outside 1.." + std::to_string(parent_order));
}

bool VertexSubset::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSubset VertexSubset::complement() const {
  std::vector<Vertex> rest;
  rest.reserve(static_cast<std::size_t>(parent_order_) - members_.size());
  for (Vertex v = 1; v <= parent_order_; ++v)
    if (!contains(v))
      rest.push_back(v);
  return VertexSubset(parent_order_, std::move(rest));
}

} // namespace tokenlab
