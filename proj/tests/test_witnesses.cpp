#include <doctest.h>

#include <stdexcept>

#include "support/oracles.hpp"
#include "tokenlab/tokenlab.hpp"

using namespace tokenlab;

namespace {

std::vector<TokenVertex> pairs(std::initializer_list<std::pair<int, int>> list) {
  std::vector<TokenVertex> out;
  for (auto [a, b] : list)
    out.push_back(TokenVertex::pair(a, b));
  return out;
}

std::vector<TokenVertex> multisets(std::initializer_list<std::pair<int, int>> list) {
  std::vector<TokenVertex> out;
  for (auto [a, b] : list)
    out.push_back(TokenVertex::multiset(a, b));
  return out;
}

bool certified(const DerivedGraph& dg, const TokenWitness& w, std::int64_t expected) {
  return is_independent(dg.graph(), to_independent_set(dg, w)) &&
         static_cast<std::int64_t>(w.size()) == expected;
}

} // namespace

TEST_CASE("structured sets") {
  CHECK(l_set(5, 3).members == multisets({{1, 3}, {2, 4}, {3, 5}}));
  CHECK(l_set(4, 1).members == multisets({{1, 4}}));
  CHECK(l_set(4, 4).members == multisets({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  CHECK(r_set_dv(4, 2).members == pairs({{1, 2}, {2, 3}, {2, 4}}));
  CHECK(r_set_pair(3, 2).members == multisets({{1, 2}, {2, 2}, {2, 3}}));
  CHECK(b_set_dv(3).members == pairs({{1, 4}, {2, 4}, {3, 4}}));
  CHECK(b_set_pair(2).members == multisets({{1, 3}, {2, 3}, {3, 3}}));
  CHECK_THROWS_AS(l_set(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(l_set(5, 6), std::invalid_argument);
  CHECK_THROWS_AS(r_set_dv(4, 5), std::invalid_argument);
}

TEST_CASE("L classes partition the multisets of C(C_m)") {
  for (int m = 3; m <= 10; ++m) {
    std::set<TokenVertex> seen;
    std::size_t total = 0;
    for (int q = 1; q <= m; ++q) {
      const auto l = l_set(m, q);
      total += l.members.size();
      seen.insert(l.members.begin(), l.members.end());
    }
    CHECK(total == seen.size());
    CHECK(seen.size() == static_cast<std::size_t>(m * (m + 1) / 2));
  }
}

TEST_CASE("L class independence against exhaustive check") {
  for (int m = 3; m <= 12; ++m) {
    const auto dg = pair_graph(cycle(m));
    for (int q = 1; q <= m; ++q) {
      const auto idx = dg.indices_of(l_set(m, q).members);
      CHECK(is_independent(dg.graph(), idx) == l_is_independent_expected(m, q));
      CHECK(l_is_independent_expected(m, q) == !(m == 2 * q - 1 && q >= 2 && q <= m - 1));
    }
  }
}

TEST_CASE("linking profile") {
  const std::set<IndexPair> four{{1, 2}, {1, 4}, {2, 3}, {3, 4}, {2, 3}};
  CHECK(linking_profile(4) == four);
  for (int m = 4; m <= 12; ++m)
    CHECK(linking_profile(m) == predicted_linking_profile(m));
}

TEST_CASE("linked") {
  const Graph g = path(4);
  CHECK(linked(g, std::vector<Vertex>{1}, std::vector<Vertex>{2, 4}));
  CHECK_FALSE(linked(g, std::vector<Vertex>{1}, std::vector<Vertex>{3, 4}));
}

TEST_CASE("phi round trip") {
  for (int n = 2; n <= 7; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = i; j <= n; ++j) {
        const auto tv = TokenVertex::multiset(i, j);
        const auto img = phi(tv);
        CHECK(img == TokenVertex::pair(i, j + 1));
        CHECK(phi_inverse(img) == tv);
      }
}

TEST_CASE("frozen witnesses") {
  CHECK(dv_path_witness(4).members == pairs({{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  CHECK(dv_fan_witness(1).members == pairs({{1, 2}}));
  CHECK(pair_path_witness(1).members == multisets({{1, 1}}));
  CHECK(pair_fan_witness(1).members == multisets({{1, 1}, {2, 2}}));
  CHECK(dv_wheel_witness(3).size() == 2);
  CHECK(dv_wheel_witness(3).source == WitnessSource::solver);
  CHECK(dv_path_witness(5).source == WitnessSource::constructed);
}

TEST_CASE("witnesses are certified independent sets of the formula size") {
  for (int m = 2; m <= 10; ++m)
    CHECK(certified(double_vertex(path(m)), dv_path_witness(m), dv_path(m)));
  for (int m = 1; m <= 10; ++m)
    CHECK(certified(double_vertex(fan(m)), dv_fan_witness(m), dv_fan(m)));
  for (int m = 3; m <= 9; ++m)
    CHECK(certified(double_vertex(wheel(m)), dv_wheel_witness(m), dv_wheel(m)));
  for (int m = 2; m <= 10; ++m)
    CHECK(certified(pair_graph(path(m)), pair_path_witness(m), pair_path(m)));
  for (int m = 1; m <= 10; ++m)
    CHECK(certified(pair_graph(fan(m)), pair_fan_witness(m), pair_fan(m)));
  for (int m = 3; m <= 14; ++m) {
    CHECK(certified(pair_graph(cycle(m)), pair_cycle_witness(m), pair_cycle(m)));
    CHECK(certified(pair_graph(wheel(m)), pair_wheel_witness(m), pair_wheel(m)));
  }
}

TEST_CASE("wheel rim part") {
  for (int m = 4; m <= 9; ++m) {
    const auto dg = double_vertex(wheel(m));
    const auto w = wheel_rim_witness(m);
    CHECK(static_cast<std::int64_t>(w.size()) == dv_wheel(m));
    for (const auto& t : w.members)
      CHECK_FALSE(t.contains(m + 1));
    CHECK(is_independent(dg.graph(), to_independent_set(dg, w)));
  }
  CHECK(wheel_rim_witness(3).size() == 1);
}

TEST_CASE("to_independent_set rejects labels missing from the graph") {
  const auto dg = double_vertex(path(3));
  TokenWitness w;
  w.members = pairs({{1, 4}});
  CHECK_THROWS_AS(to_independent_set(dg, w), std::invalid_argument);
}
