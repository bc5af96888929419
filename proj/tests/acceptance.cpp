// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every comparison is an exact integer comparison.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"
#include "tokenlab/tokenlab.hpp"

using namespace tokenlab;

namespace {

/// Collects the first few failure descriptions for one criterion.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (ok)
      return;
    ++failures_;
    if (failures_ <= 3)
      details_ += (details_.empty() ? "" : "; ") + what;
  }
  int cases() const { return cases_; }
  int failures() const { return failures_; }
  const std::string& details() const { return details_; }

private:
  int cases_ = 0;
  int failures_ = 0;
  std::string details_;
};

std::string str(std::int64_t v) { return std::to_string(v); }

/// Graphs with at most 20 vertices met while checking, reused by the
/// branch-and-bound versus brute-force criterion.
std::vector<Graph> corpus;

void collect(const Graph& g) {
  if (g.order() >= 1 && g.order() <= 20)
    corpus.push_back(g);
}

int solve(const Graph& g) {
  collect(g);
  return alpha(g).alpha;
}

bool certified(const DerivedGraph& dg, const TokenWitness& w, std::int64_t size) {
  return is_independent(dg.graph(), to_independent_set(dg, w)) &&
         static_cast<std::int64_t>(w.size()) == size;
}

Subgraph without_tokens(const DerivedGraph& dg, const std::function<bool(const TokenVertex&)>& drop) {
  return induced_on_tokens(dg, [&](const TokenVertex& tv) { return !drop(tv); });
}

void fan_double_vertex(Check& c) {
  const auto start = std::chrono::steady_clock::now();
  for (int m = 2; m <= 12; ++m) {
    const auto dg = double_vertex(fan(m));
    c.expect(solve(dg.graph()) == (m * m) / 4, "m=" + str(m));
  }
  const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 60.0, "sweep took " + std::to_string(secs) + " s");
  c.expect(double_vertex(fan(12)).graph().order() == 78, "F2(F_12) order");
}

void wheel_double_vertex(Check& c) {
  c.expect(solve(double_vertex(wheel(3)).graph()) == 2, "m=3");
  for (int m = 4; m <= 12; ++m) {
    const int a = solve(double_vertex(wheel(m)).graph());
    c.expect(a == (m * (m / 2)) / 2, "m=" + str(m) + " closed form");
    c.expect(a == dv_cycle(m), "m=" + str(m) + " dv_cycle");
  }
}

void pair_path_isomorphism(Check& c) {
  for (int m = 3; m <= 10; ++m) {
    const auto cp = pair_graph(path(m));
    const auto fp = double_vertex(path(m + 1));
    c.expect(cp.graph().order() == fp.graph().order(), "m=" + str(m) + " orders");

    // Map every vertex through phi and compare the image edge set with
    // the target edge set exactly.
    std::vector<Vertex> mapping;
    for (const auto& tv : cp.labels())
      mapping.push_back(fp.index_of(phi(tv)));
    std::vector<Edge> image;
    for (const auto& e : cp.graph().edges())
      image.emplace_back(mapping[static_cast<std::size_t>(e.u - 1)],
                         mapping[static_cast<std::size_t>(e.v - 1)]);
    std::sort(image.begin(), image.end());
    c.expect(image == fp.graph().edges(), "m=" + str(m) + " edge image");
    c.expect(is_isomorphism(cp.graph(), fp.graph(), mapping), "m=" + str(m) + " bijection");

    c.expect(solve(cp.graph()) == ((m + 1) * (m + 1)) / 4, "m=" + str(m) + " alpha");
  }
}

void pair_cycle_values(Check& c) {
  for (int m = 3; m <= 12; ++m) {
    const auto dg = pair_graph(cycle(m));
    const std::int64_t f = pair_cycle(m);
    c.expect(solve(dg.graph()) == f, "m=" + str(m) + " solver");
    c.expect(certified(dg, pair_cycle_witness(m), f), "m=" + str(m) + " witness");
  }
}

void apex_augmentation(Check& c) {
  for (int m = 3; m <= 10; ++m) {
    const auto cf = pair_graph(fan(m));
    const auto cw = pair_graph(wheel(m));
    const int a_fan = solve(cf.graph());
    const int a_wheel = solve(cw.graph());
    c.expect(a_fan == solve(pair_graph(path(m)).graph()) + 1, "fan m=" + str(m));
    c.expect(a_wheel == solve(pair_graph(cycle(m)).graph()) + 1, "wheel m=" + str(m));
    c.expect(certified(cf, pair_fan_witness(m), a_fan), "fan witness m=" + str(m));
    c.expect(certified(cw, pair_wheel_witness(m), a_wheel), "wheel witness m=" + str(m));
  }
}

void grid_values(Check& c) {
  for (int r = 1; r <= 6; ++r)
    for (int s = 1; s <= 6; ++s) {
      const Graph g = cartesian_product(path(r), path(s));
      collect(g);
      c.expect(brute_force_alpha(g, 36).alpha == grid_alpha(r, s), str(r) + "x" + str(s));
    }
}

/// Pairs every component with a distinct isomorphic expected graph.
bool same_components(const Graph& g, std::vector<Graph> expected) {
  const auto parts = components(g);
  if (parts.size() != expected.size())
    return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& part : parts) {
    bool matched = false;
    for (std::size_t i = 0; i < expected.size() && !matched; ++i)
      if (!used[i] && is_isomorphic(part.graph, expected[i]))
        used[i] = matched = true;
    if (!matched)
      return false;
  }
  return true;
}

void union_components(Check& c) {
  const std::pair<Graph, Graph> cases[] = {
      {path(3), path(4)}, {path(3), cycle(4)}, {cycle(3), cycle(4)}};
  const char* names[] = {"P3+P4", "P3+C4", "C3+C4"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [g1, g2] = cases[i];
    const auto dg = double_vertex(disjoint_union(g1, g2));
    collect(dg.graph());
    c.expect(same_components(dg.graph(), {double_vertex(g1).graph(), double_vertex(g2).graph(),
                                          cartesian_product(g1, g2)}),
             names[i]);
  }
}

void token_vertex_deletion(Check& c) {
  unsigned long long state = 0x5eedULL;
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 2;
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    const int n = 4 + static_cast<int>((state >> 33) % 4);
    const Graph g = oracle::random_graph(state, n, 450);

    std::vector<Vertex> x;
    for (int v = 1; v <= n; ++v) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      if ((state >> 40) % 3 == 0)
        x.push_back(v);
    }
    if (n - static_cast<int>(x.size()) < k)
      x.resize(static_cast<std::size_t>(std::max(0, n - k)));
    const VertexSubset removed(n, x);

    const auto rest = delete_vertices(g, removed);
    const auto lhs = k_token(rest.graph, k);
    const auto rhs = without_tokens(k_token(g, k), [&](const TokenVertex& tv) {
      return std::any_of(x.begin(), x.end(), [&](Vertex v) { return tv.contains(v); });
    });
    collect(lhs.graph());
    c.expect(is_isomorphic(lhs.graph(), rhs.graph), "trial " + str(trial));
  }
}

void l_classes(Check& c) {
  for (int m = 3; m <= 15; ++m) {
    const auto dg = pair_graph(cycle(m));
    for (int q = 2; q <= m - 1; ++q) {
      const bool independent = is_independent(dg.graph(), dg.indices_of(l_set(m, q).members));
      c.expect(independent == (m != 2 * q - 1), "m=" + str(m) + " q=" + str(q));
    }
  }
  for (int m = 4; m <= 12; ++m)
    c.expect(linking_profile(m) == predicted_linking_profile(m), "linking m=" + str(m));
}

void rim_deletions(Check& c) {
  for (int m = 4; m <= 10; ++m) {
    const auto dg = double_vertex(fan(m));
    const auto row_of = [&](std::vector<Vertex> s) {
      return without_tokens(dg, [&](const TokenVertex& tv) {
        return tv.contains(m + 1) ||
               std::any_of(s.begin(), s.end(), [&](Vertex i) { return tv.contains(i); });
      });
    };
    const int target = ((m - 1) * (m - 1)) / 4;
    for (int i = 1; i <= m; ++i)
      c.expect(solve(row_of({i}).graph) == target, "single m=" + str(m) + " i=" + str(i));
    for (int i = 1; i <= m; ++i)
      for (int j = i + 2; j <= m; ++j)
        c.expect(solve(row_of({i, j}).graph) < target,
                 "pair m=" + str(m) + " S={" + str(i) + "," + str(j) + "}");

    const auto cg = pair_graph(fan(m));
    for (int i = 1; i <= m; ++i) {
      const auto sub = without_tokens(cg, [&](const TokenVertex& tv) {
        return tv.contains(m + 1) || tv.contains(i);
      });
      c.expect(solve(sub.graph) <= (m * m) / 4 + 1, "pair rim m=" + str(m) + " i=" + str(i));
    }
  }
}

void avoid_corner(Check& c) {
  for (int n : {5, 7, 9, 11}) {
    const auto dg = pair_graph(cycle(n));
    const auto r = alpha_avoiding(dg.graph(), dg.index_of(TokenVertex::multiset(1, n)));
    c.expect(!r.aborted() && r.alpha == pair_cycle(n), "n=" + str(n));
  }
}

void oracle_equivalence(Check& c) {
  // Small derived graphs from the families above.
  for (int m = 2; m <= 5; ++m) {
    collect(double_vertex(fan(m)).graph());
    collect(double_vertex(path(m + 1)).graph());
    collect(pair_graph(path(m)).graph());
  }
  for (int m = 3; m <= 5; ++m) {
    collect(double_vertex(wheel(m)).graph());
    collect(double_vertex(cycle(m)).graph());
    collect(pair_graph(cycle(m)).graph());
  }
  for (int m = 1; m <= 4; ++m)
    collect(pair_graph(fan(m)).graph());
  collect(pair_graph(wheel(3)).graph());

  unsigned long long state = 0xc0ffeeULL;
  for (int i = 0; i < 150; ++i)
    collect(oracle::random_graph(state, 1 + i % 20, 80 + (i * 53) % 800));

  c.expect(corpus.size() >= 200, "corpus has " + str(static_cast<std::int64_t>(corpus.size())));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    const auto bnb = alpha(g);
    const auto brute = brute_force_alpha(g);
    c.expect(bnb.alpha == brute.alpha && is_independent(g, bnb.witness),
             "graph " + str(static_cast<std::int64_t>(i)) + " (" + str(g.order()) + " vertices)");
  }
}

void sequence_checks(Check& c) {
  c.expect(a002620_recurrence_checks(200), "recurrences");
  for (int m = 1; m <= 200; ++m) {
    const std::int64_t expected = (static_cast<std::int64_t>(m + 1) * (m + 1)) / 4 + 1;
    c.expect(pair_fan(m) == expected, "m=" + str(m));
  }
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Check&);
  };
  // Corpus collection in criteria 1-10 feeds criterion 12, so order matters.
  const Criterion criteria[] = {
      {"fan double vertex graphs, m=2..12", fan_double_vertex},
      {"wheel double vertex graphs, m=3..12", wheel_double_vertex},
      {"pair graph of P_m is F2(P_{m+1}) via phi, m=3..10", pair_path_isomorphism},
      {"pair graph of C_m: solver and L-union witness, m=3..12", pair_cycle_values},
      {"apex adds one for fan and wheel pair graphs, m=3..10", apex_augmentation},
      {"grid independence numbers, 1<=r,s<=6", grid_values},
      {"components of F2 of a disjoint union", union_components},
      {"token graph of G-X is the induced token subgraph, 50 random", token_vertex_deletion},
      {"L-class dichotomy m=3..15, linking profile m=4..12", l_classes},
      {"rim row deletions, m=4..10", rim_deletions},
      {"pair cycle max independent set avoiding {1,n}", avoid_corner},
      {"branch and bound equals brute force on the corpus", oracle_equivalence},
      {"A002620 recurrences and pair fan values, n<=200", sequence_checks},
  };

  int failed = 0;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    Check c;
    std::string error;
    try {
      criterion.run(c);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const bool ok = error.empty() && c.failures() == 0 && c.cases() > 0;
    if (!ok)
      ++failed;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  " << (index < 10 ? " " : "") << index << ". "
         << criterion.name << "  [" << c.cases() << " checks";
    if (c.failures())
      line << ", " << c.failures() << " failed: " << c.details();
    if (!error.empty())
      line << ", exception: " << error;
    line << "]";
    std::puts(line.str().c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
