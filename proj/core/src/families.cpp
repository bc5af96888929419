#include "tokenlab/families.hpp"

#include <stdexcept>
#include <string>

#include "tokenlab/operations.hpp"

namespace tokenlab {

namespace {

void require(bool ok, const char* family, int m, int min) {
  if (!ok)
    throw std::invalid_argument(std::string(family) + " requires m >= " + std::to_string(min) +
                                ", got " + std::to_string(m));
}

} // namespace

Graph path(int m) {
  require(m >= 1, "path", m, 1);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < m; ++i)
    edges.emplace_back(i, i + 1);
  return Graph(m, std::move(edges));
}

Graph cycle(int m) {
  require(m >= 3, "cycle", m, 3);
  std::vector<Edge> edges;
  for (Vertex i = 1; i < m; ++i)
    edges.emplace_back(i, i + 1);
  edges.emplace_back(1, m);
  return Graph(m, std::move(edges));
}

Graph complete(int n) {
  require(n >= 1, "complete", n, 1);
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph fan(int m) {
  require(m >= 1, "fan", m, 1);
  return join(path(m), complete(1));
}

Graph wheel(int m) {
  require(m >= 3, "wheel", m, 3);
  return join(cycle(m), complete(1));
}

} // namespace tokenlab
