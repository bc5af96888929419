#include "tokenlab/cli/props.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "tokenlab/tokenlab.hpp"

namespace tokenlab::cli {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::string describe(const Graph& g) { return to_json(g); }

class Suite {
public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& what) {
    ++result_.cases;
    if (ok)
      return;
    if (result_.failures++ == 0)
      result_.first_failure = what();
  }

  SuiteResult done() { return std::move(result_); }

private:
  SuiteResult result_;
};

// Matches every expected graph to a distinct isomorphic component.
bool same_components(const Graph& g, std::vector<Graph> expected) {
  auto comps = components(g);
  if (comps.size() != expected.size())
    return false;
  std::vector<bool> used(comps.size(), false);
  for (const auto& e : expected) {
    bool matched = false;
    for (std::size_t i = 0; i < comps.size() && !matched; ++i) {
      if (!used[i] && is_isomorphic(comps[i].graph, e)) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched)
      return false;
  }
  return true;
}

SuiteResult induced_monotonicity(std::mt19937_64& rng, int sizes) {
  Suite s("induced-subgraph-monotonicity");
  for (int i = 0; i < sizes; ++i) {
    const Graph g = random_graph(rng, uniform(rng, 2, 14), uniform(rng, 150, 600));
    std::vector<Vertex> keep;
    for (Vertex v = 1; v <= g.order(); ++v)
      if (rng() % 2)
        keep.push_back(v);
    if (keep.empty())
      keep.push_back(1);
    const auto h = induced_subgraph(g, VertexSubset(g.order(), keep));
    s.check(alpha(h.graph).alpha <= alpha(g).alpha, [&] { return describe(g); });
  }
  return s.done();
}

SuiteResult oracle_equivalence(std::mt19937_64& rng, int sizes) {
  Suite s("solver-matches-brute-force");
  for (int i = 0; i < sizes; ++i) {
    const Graph g = random_graph(rng, uniform(rng, 1, 20), uniform(rng, 100, 700));
    const auto fast = alpha(g);
    const auto slow = brute_force_alpha(g);
    s.check(fast.alpha == slow.alpha && is_independent(g, fast.witness) &&
                static_cast<int>(fast.witness.size()) == fast.alpha,
            [&] { return describe(g); });
  }
  return s.done();
}

SuiteResult component_decomposition(std::mt19937_64& rng, int sizes) {
  Suite s("double-vertex-of-disjoint-union");
  for (int i = 0; i < sizes; ++i) {
    const Graph a = random_connected_graph(rng, uniform(rng, 2, 5), uniform(rng, 0, 500));
    const Graph b = random_connected_graph(rng, uniform(rng, 2, 5), uniform(rng, 0, 500));
    const auto dv = double_vertex(disjoint_union(a, b));
    s.check(same_components(dv.graph(), {double_vertex(a).graph(), double_vertex(b).graph(),
                                         cartesian_product(a, b)}),
            [&] { return describe(a) + " + " + describe(b); });
  }
  return s.done();
}

SuiteResult vertex_deletion(std::mt19937_64& rng, int sizes) {
  Suite s("token-graph-vertex-deletion");
  for (int i = 0; i < sizes; ++i) {
    const int k = 2 + i % 2;
    const int n = uniform(rng, k + 1, 7);
    const Graph g = random_graph(rng, n, uniform(rng, 200, 700));
    std::vector<Vertex> x;
    for (Vertex v = 1; v <= n; ++v)
      if (static_cast<int>(x.size()) < n - k && rng() % 3 == 0)
        x.push_back(v);
    const VertexSubset removed(n, x);

    const auto reduced = delete_vertices(g, removed);
    const auto lhs = k_token(reduced.graph, k);
    const auto rhs = induced_on_tokens(k_token(g, k), [&](const TokenVertex& tv) {
      return std::none_of(x.begin(), x.end(), [&](Vertex v) { return tv.contains(v); });
    });
    s.check(is_isomorphic(lhs.graph(), rhs.graph),
            [&] { return describe(g) + " k=" + std::to_string(k); });
  }
  return s.done();
}

SuiteResult l_dichotomy() {
  Suite s("l-class-independence");
  for (int m = 3; m <= 15; ++m) {
    const auto cm = pair_graph(cycle(m));
    for (int q = 1; q <= m; ++q) {
      const auto idx = cm.indices_of(l_set(m, q).members);
      s.check(is_independent(cm.graph(), idx) == l_is_independent_expected(m, q),
              [&] { return "m=" + std::to_string(m) + " q=" + std::to_string(q); });
    }
  }
  return s.done();
}

SuiteResult l_linking() {
  Suite s("l-class-linking");
  for (int m = 4; m <= 12; ++m)
    s.check(linking_profile(m) == predicted_linking_profile(m),
            [&] { return "m=" + std::to_string(m); });
  return s.done();
}

SuiteResult avoid_one_n() {
  Suite s("avoid-{1,n}-in-odd-pair-cycle");
  for (int n = 5; n <= 11; n += 2) {
    const auto cm = pair_graph(cycle(n));
    const auto r = alpha_avoiding(cm.graph(), cm.index_of(TokenVertex::multiset(1, n)));
    s.check(r.alpha == pair_cycle(n), [&] { return "n=" + std::to_string(n); });
  }
  return s.done();
}

// T_m: rim part of F_2(F_{m,1}), i.e. 2-subsets avoiding the apex.
Subgraph fan_rim_without(const DerivedGraph& dv_fan, int m, const std::vector<int>& rows) {
  return induced_on_tokens(dv_fan, [&](const TokenVertex& tv) {
    if (tv.contains(m + 1))
      return false;
    return std::none_of(rows.begin(), rows.end(), [&](int i) { return tv.contains(i); });
  });
}

SuiteResult dv_row_deletion() {
  Suite s("fan-rim-single-row-deletion");
  for (int m = 4; m <= 10; ++m) {
    const auto dg = double_vertex(fan(m));
    for (int i = 1; i <= m; ++i) {
      const auto sub = fan_rim_without(dg, m, {i});
      s.check(alpha(sub.graph).alpha == dv_path(m - 1),
              [&] { return "m=" + std::to_string(m) + " i=" + std::to_string(i); });
    }
  }
  return s.done();
}

SuiteResult dv_double_row_deletion() {
  Suite s("fan-rim-double-row-deletion");
  for (int m = 4; m <= 10; ++m) {
    const auto dg = double_vertex(fan(m));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 2; j <= m; ++j) {
        const auto sub = fan_rim_without(dg, m, {i, j});
        s.check(alpha(sub.graph).alpha < dv_path(m - 1), [&] {
          return "m=" + std::to_string(m) + " S={" + std::to_string(i) + "," + std::to_string(j) + "}";
        });
      }
  }
  return s.done();
}

SuiteResult pair_row_deletion() {
  Suite s("pair-fan-rim-row-deletion");
  for (int m = 4; m <= 10; ++m) {
    const auto cg = pair_graph(fan(m));
    for (int i = 1; i <= m; ++i) {
      const auto row = r_set_pair(m, i).members;
      const auto sub = induced_on_tokens(cg, [&](const TokenVertex& tv) {
        return !tv.contains(m + 1) && std::find(row.begin(), row.end(), tv) == row.end();
      });
      s.check(alpha(sub.graph).alpha <= a002620(m) + 1,
              [&] { return "m=" + std::to_string(m) + " i=" + std::to_string(i); });
    }
  }
  return s.done();
}

} // namespace

Graph random_graph(std::mt19937_64& rng, int n, int edge_permille) {
  std::vector<Edge> edges;
  for (Vertex a = 1; a <= n; ++a)
    for (Vertex b = a + 1; b <= n; ++b)
      if (static_cast<int>(rng() % 1000) < edge_permille)
        edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int edge_permille) {
  std::vector<Edge> edges = random_graph(rng, n, edge_permille).edges();
  for (Vertex v = 2; v <= n; ++v)
    edges.emplace_back(uniform(rng, 1, v - 1), v);
  return Graph(n, std::move(edges));
}

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, int sizes) {
  if (sizes < 1)
    throw ConfigError("--sizes must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<SuiteResult> out;
  out.push_back(induced_monotonicity(rng, sizes));
  out.push_back(oracle_equivalence(rng, sizes));
  out.push_back(component_decomposition(rng, sizes));
  out.push_back(vertex_deletion(rng, sizes));
  out.push_back(l_dichotomy());
  out.push_back(l_linking());
  out.push_back(avoid_one_n());
  out.push_back(dv_row_deletion());
  out.push_back(dv_double_row_deletion());
  out.push_back(pair_row_deletion());
  return out;
}

std::string render_suites(const std::vector<SuiteResult>& suites, Format format) {
  if (format == Format::json) {
    auto doc = nlohmann::ordered_json::array();
    for (const auto& s : suites) {
      nlohmann::ordered_json row;
      row["suite"] = s.name;
      row["cases"] = s.cases;
      row["failures"] = s.failures;
      row["status"] = s.passed() ? "pass" : "fail";
      if (!s.passed())
        row["first_failure"] = s.first_failure;
      doc.push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
  }
  if (format != Format::table)
    throw ConfigError("props output supports table and json");

  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed() ? "PASS " : "FAIL ") << s.name << "  cases=" << s.cases
        << " failures=" << s.failures;
    if (!s.passed())
      out << "  first: " << s.first_failure;
    out << '\n';
  }
  return out.str();
}

} // namespace tokenlab::cli
