#include <doctest.h>
#include <json.hpp>

#include <stdexcept>

#include "tokenlab/tokenlab.hpp"

using namespace tokenlab;

TEST_CASE("graph construction normalizes and validates edges") {
  const Graph g(4, {{3, 1}, {1, 3}, {2, 4}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges()[0] == Edge(1, 3));
  CHECK(g.adjacent(3, 1));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.degree(4) == 1);

  CHECK_THROWS_AS(Graph(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
  CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);
  CHECK_THROWS_AS(g.adjacent(0, 1), std::out_of_range);
}

TEST_CASE("vertex subsets") {
  const VertexSubset s(5, {4, 2, 2});
  CHECK(s.members() == std::vector<Vertex>{2, 4});
  CHECK(s.complement().members() == std::vector<Vertex>{1, 3, 5});
  CHECK_THROWS_AS(VertexSubset(3, {4}), std::out_of_range);
  CHECK_THROWS_AS(VertexSubset(3, {0}), std::out_of_range);
}

TEST_CASE("families") {
  CHECK(path(1).edge_count() == 0);
  CHECK(path(4) == Graph(4, {{1, 2}, {2, 3}, {3, 4}}));
  CHECK(cycle(3) == Graph(3, {{1, 2}, {2, 3}, {1, 3}}));
  CHECK(complete(4).edge_count() == 6);
  CHECK(fan(2) == Graph(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(wheel(4).edge_count() == 8);
  CHECK(wheel(4).degree(5) == 4);

  CHECK_THROWS_AS(path(0), std::invalid_argument);
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
  CHECK_THROWS_AS(fan(0), std::invalid_argument);
  CHECK_THROWS_AS(wheel(2), std::invalid_argument);
}

TEST_CASE("fan and wheel are joins with a single vertex") {
  for (int m = 3; m <= 8; ++m) {
    CHECK(fan(m) == join(path(m), Graph(1)));
    CHECK(wheel(m) == join(cycle(m), Graph(1)));
  }
}

TEST_CASE("join, disjoint union and cartesian product") {
  const Graph u = disjoint_union(path(2), path(3));
  CHECK(u == Graph(5, {{1, 2}, {3, 4}, {4, 5}}));
  CHECK(join(Graph(2), Graph(2)) == Graph(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));

  const Graph grid = cartesian_product(path(2), path(3));
  CHECK(grid == Graph(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}}));
  CHECK(cartesian_product(path(3), path(3)).edge_count() == 12);

  CHECK_THROWS_AS(join(Graph(), path(2)), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_union(path(2), Graph()), std::invalid_argument);
  CHECK_THROWS_AS(cartesian_product(Graph(), path(2)), std::invalid_argument);
}

TEST_CASE("vertex deletion relabels survivors in order") {
  const auto rest = delete_vertices(cycle(5), VertexSubset(5, {2}));
  CHECK(rest.graph == Graph(4, {{2, 3}, {3, 4}, {1, 4}}));
  CHECK(rest.original == std::vector<Vertex>{1, 3, 4, 5});
  CHECK(rest.to_parent(2) == 3);

  const auto none = delete_vertices(path(3), VertexSubset(3, {1, 2, 3}));
  CHECK(none.graph.empty());

  const auto induced = induced_subgraph(cycle(6), VertexSubset(6, {1, 2, 6}));
  CHECK(induced.graph == Graph(3, {{1, 2}, {1, 3}}));
  CHECK(induced.original == std::vector<Vertex>{1, 2, 6});

  CHECK_THROWS_AS(delete_vertices(path(3), VertexSubset(4, {4})), std::invalid_argument);
}

TEST_CASE("components are ordered by smallest label") {
  const Graph g(6, {{5, 6}, {2, 4}});
  const auto parts = components(g);
  REQUIRE(parts.size() == 4);
  CHECK(parts[0].original == std::vector<Vertex>{1});
  CHECK(parts[1].original == std::vector<Vertex>{2, 4});
  CHECK(parts[2].original == std::vector<Vertex>{3});
  CHECK(parts[3].original == std::vector<Vertex>{5, 6});
  CHECK(parts[1].graph == path(2));
}

TEST_CASE("json export is golden-stable") {
  CHECK(to_json(cycle(5)) == R"({"order": 5, "edges": [[1,2], [1,5], [2,3], [3,4], [4,5]]})");
  CHECK(to_json(Graph(2)) == R"({"order": 2, "edges": []})");

  const auto dg = double_vertex(path(3));
  CHECK(to_json(dg) ==
        R"({"order": 3, "edges": [[1,2], [2,3]], "kind": "subset", "labels": [[1,2], [1,3], [2,3]]})");

  const auto doc = nlohmann::json::parse(to_json(pair_graph(path(2))));
  CHECK(doc["order"] == 3);
  CHECK(doc["kind"] == "multiset");
  CHECK(doc["labels"] == nlohmann::json::parse("[[1,1],[1,2],[2,2]]"));
  CHECK(doc["edges"] == nlohmann::json::parse("[[1,2],[2,3]]"));

  CHECK(tokens_to_json({TokenVertex::pair(1, 2), TokenVertex::pair(1, 4)}) == "[[1,2], [1,4]]");
}

TEST_CASE("dot export") {
  CHECK(to_dot(path(2)) == "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");

  DotOptions options;
  options.name = "H";
  options.highlight = {1};
  const std::string dot = to_dot(double_vertex(path(3)), options);
  CHECK(dot.rfind("graph H {\n", 0) == 0);
  CHECK(dot.find("1 [label=\"{1,2}\", witness=true, style=filled];") != std::string::npos);
  CHECK(dot.find("2 [label=\"{1,3}\"];") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
}
