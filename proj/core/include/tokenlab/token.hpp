#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tokenlab/graph.hpp"

namespace tokenlab {

enum class TokenKind { subset, multiset };

const char* to_string(TokenKind kind);

/**
   Vertex identity in a derived graph: a sorted tuple of base-graph
   labels. Subset tokens have strictly increasing elements; multiset
   tokens may repeat (only 2-multisets are produced here).
 */
class TokenVertex {
public:
  TokenVertex() = default;

  /// Throws std::invalid_argument if a subset token repeats an element.
  TokenVertex(TokenKind kind, std::vector<Vertex> elements);

  static TokenVertex pair(Vertex a, Vertex b) { return {TokenKind::subset, {a, b}}; }
  static TokenVertex multiset(Vertex a, Vertex b) { return {TokenKind::multiset, {a, b}}; }

  TokenKind kind() const { return kind_; }
  const std::vector<Vertex>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Vertex v) const;

  /// Smallest / largest element; the (a, b) of a 2-token with a <= b.
  Vertex first() const { return elements_.front(); }
  Vertex last() const { return elements_.back(); }

  /// "{1,3}"
  std::string to_string() const;

  friend auto operator<=>(const TokenVertex&, const TokenVertex&) = default;
  friend bool operator==(const TokenVertex&, const TokenVertex&) = default;

private:
  TokenKind kind_ = TokenKind::subset;
  std::vector<Vertex> elements_;
};

/**
   A graph whose vertices are tokens over a base graph. Vertex i carries
   label `labels()[i-1]`; labels are in lexicographic order.
 */
class DerivedGraph {
public:
  DerivedGraph(Graph graph, std::vector<TokenVertex> labels, int base_order, TokenKind kind,
               int tokens);

  const Graph& graph() const { return graph_; }
  const std::vector<TokenVertex>& labels() const { return labels_; }
  int base_order() const { return base_order_; }
  TokenKind kind() const { return kind_; }
  /// Number of tokens per vertex (k).
  int tokens() const { return tokens_; }

  /// Throws std::out_of_range for an index outside 1..order.
  const TokenVertex& label_of(Vertex index) const;

  /// Throws std::invalid_argument if no vertex carries `tv`.
  Vertex index_of(const TokenVertex& tv) const;
  std::optional<Vertex> find(const TokenVertex& tv) const;

  std::vector<Vertex> indices_of(const std::vector<TokenVertex>& tokens) const;
  std::vector<TokenVertex> labels_of(const std::vector<Vertex>& indices) const;

  /// Indices of token vertices that contain at least one element of `base`.
  VertexSubset touching(const VertexSubset& base) const;

private:
  Graph graph_;
  std::vector<TokenVertex> labels_;
  std::map<TokenVertex, Vertex> index_;
  int base_order_;
  TokenKind kind_;
  int tokens_;
};

/// Subgraph of dg induced by the vertices whose token satisfies `keep`;
/// `original` maps back to indices of dg.
Subgraph induced_on_tokens(const DerivedGraph& dg,
                           const std::function<bool(const TokenVertex&)>& keep);

/**
   F_2(G): vertices are the 2-subsets of V(g); {x,y} ~ {u,v} iff their
   symmetric difference is an edge of g. Requires g.order() >= 2.
 */
DerivedGraph double_vertex(const Graph& g);

/// F_k(G): k-subsets, adjacent iff the symmetric difference is one edge.
/// Requires 1 <= k <= g.order().
DerivedGraph k_token(const Graph& g, int k);

/**
   C(G): vertices are the 2-multisets of V(g). Distinct multisets {a,x}
   and {a,y} are adjacent iff x ~ y in g. Diagonal vertices {x,x} are
   pairwise non-adjacent. Requires g.order() >= 2.
 */
DerivedGraph pair_graph(const Graph& g);

} // namespace tokenlab
