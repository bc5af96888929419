#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tokenlab {

/// Vertex label. Graphs on n vertices use labels 1..n.
using Vertex = int;

/// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
   Simple undirected graph on vertices 1..order.

   Immutable after construction. The edge list is kept sorted
   lexicographically and each vertex keeps a sorted neighbor list.
   Order 0 (the empty graph) is representable; family builders and most
   operators reject it.
 */
class Graph {
public:
  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order);

  /// Throws std::invalid_argument on loops or endpoints outside 1..order.
  /// Repeated edges collapse to one.
  Graph(int order, std::vector<Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges);

  int order() const { return order_; }
  bool empty() const { return order_ == 0; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Sorted lexicographically, each with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex a, Vertex b) const;
  bool contains(Vertex v) const { return v >= 1 && v <= order_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

private:
  void check_vertex(Vertex v) const;

  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A set of vertex labels of some graph of the given order.
class VertexSubset {
public:
  VertexSubset() = default;

  /// Throws std::out_of_range if a member is outside 1..parent_order.
  VertexSubset(int parent_order, std::vector<Vertex> members);
  VertexSubset(int parent_order, std::initializer_list<Vertex> members);

  int parent_order() const { return parent_order_; }
  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Vertex v) const;

  /// {1..parent_order} minus this set.
  VertexSubset complement() const;

private:
  int parent_order_ = 0;
  std::vector<Vertex> members_;
};

/**
   A graph derived from a parent graph by keeping some of its vertices.
   `original[i]` is the parent label of vertex i+1.
 */
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;

  Vertex to_parent(Vertex v) const { return original.at(static_cast<std::size_t>(v - 1)); }
};

} // namespace tokenlab
