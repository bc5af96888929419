#include "tokenlab/witnesses.hpp"

#include <algorithm>
#include <stdexcept>

#include "tokenlab/families.hpp"
#include "tokenlab/operations.hpp"

namespace tokenlab {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok)
    throw std::invalid_argument(message);
}

std::string args(const char* op, int m, int q) {
  return std::string(op) + "(" + std::to_string(m) + ", " + std::to_string(q) + ") out of range";
}

std::string arg(const char* op, int m) {
  return std::string(op) + "(" + std::to_string(m) + ") out of range";
}

void append(std::vector<TokenVertex>& out, const StructuredSet& s) {
  out.insert(out.end(), s.members.begin(), s.members.end());
}

} // namespace

StructuredSet l_set(int m, int q) {
  require(m >= 3 && q >= 1 && q <= m, args("l_set", m, q));
  StructuredSet s{SetRole::L, m, q, {}};
  for (int j = 1; j <= q; ++j)
    s.members.push_back(TokenVertex::multiset(j, m - (q - j)));
  return s;
}

bool l_is_independent_expected(int m, int q) {
  require(m >= 3 && q >= 1 && q <= m, args("l_is_independent_expected", m, q));
  return !(m == 2 * q - 1 && q >= 2 && q <= m - 1);
}

bool linked(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b) {
  for (Vertex x : a)
    for (Vertex y : b)
      if (x != y && g.adjacent(x, y))
        return true;
  return false;
}

std::set<IndexPair> linking_profile(int m) {
  require(m >= 3, arg("linking_profile", m));
  const auto cm = pair_graph(cycle(m));

  std::vector<int> cls(static_cast<std::size_t>(cm.graph().order()) + 1, 0);
  for (int q = 1; q <= m; ++q)
    for (const auto& tv : l_set(m, q).members)
      cls[static_cast<std::size_t>(cm.index_of(tv))] = q;

  std::set<IndexPair> out;
  for (const Edge& e : cm.graph().edges()) {
    const int a = cls[static_cast<std::size_t>(e.u)];
    const int b = cls[static_cast<std::size_t>(e.v)];
    out.emplace(std::min(a, b), std::max(a, b));
  }
  return out;
}

std::set<IndexPair> predicted_linking_profile(int m) {
  require(m >= 3, arg("predicted_linking_profile", m));
  std::set<IndexPair> out;
  for (int i = 1; i <= m - 1; ++i) {
    out.emplace(i, i + 1);
    const int j = m - i + 1;
    out.emplace(std::min(i, j), std::max(i, j));
  }
  return out;
}

StructuredSet r_set_dv(int m, int q) {
  require(m >= 2 && q >= 1 && q <= m, args("r_set_dv", m, q));
  StructuredSet s{SetRole::R_dv, m, q, {}};
  for (int i = 1; i <= m; ++i)
    if (i != q)
      s.members.push_back(TokenVertex::pair(q, i));
  return s;
}

StructuredSet r_set_pair(int m, int i) {
  require(m >= 1 && i >= 1 && i <= m, args("r_set_pair", m, i));
  StructuredSet s{SetRole::R_pair, m, i, {}};
  for (int j = 1; j <= m; ++j)
    s.members.push_back(TokenVertex::multiset(i, j));
  return s;
}

StructuredSet b_set_dv(int m) {
  require(m >= 1, arg("b_set_dv", m));
  StructuredSet s{SetRole::B_dv, m, 0, {}};
  for (int a = 1; a <= m; ++a)
    s.members.push_back(TokenVertex::pair(a, m + 1));
  return s;
}

StructuredSet b_set_pair(int m) {
  require(m >= 1, arg("b_set_pair", m));
  StructuredSet s{SetRole::B_pair, m, 0, {}};
  for (int i = 1; i <= m + 1; ++i)
    s.members.push_back(TokenVertex::multiset(i, m + 1));
  return s;
}

IndependentSet to_independent_set(const DerivedGraph& dg, const TokenWitness& w) {
  IndependentSet s{dg.graph().order(), dg.indices_of(w.members)};
  std::sort(s.members.begin(), s.members.end());
  return s;
}

TokenVertex phi(const TokenVertex& tv) {
  require(tv.kind() == TokenKind::multiset && tv.size() == 2,
          "phi expects a 2-multiset, got " + tv.to_string());
  return TokenVertex::pair(tv.first(), tv.last() + 1);
}

TokenVertex phi_inverse(const TokenVertex& tv) {
  require(tv.kind() == TokenKind::subset && tv.size() == 2,
          "phi_inverse expects a 2-subset, got " + tv.to_string());
  return TokenVertex::multiset(tv.first(), tv.last() - 1);
}

TokenWitness dv_path_witness(int m) {
  require(m >= 2, arg("dv_path_witness", m));
  TokenWitness w;
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      if ((i + j) % 2 == 1)
        w.members.push_back(TokenVertex::pair(i, j));
  return w;
}

TokenWitness dv_fan_witness(int m) {
  require(m >= 1, arg("dv_fan_witness", m));
  if (m == 1)
    return TokenWitness{{TokenVertex::pair(1, 2)}, WitnessSource::constructed, {}};
  return dv_path_witness(m);
}

TokenWitness wheel_rim_witness(int m, const SolveOptions& options) {
  require(m >= 3, arg("wheel_rim_witness", m));
  const auto dg = double_vertex(wheel(m));
  const auto rim = dg.touching(VertexSubset(m + 1, {m + 1}));
  const auto sub = delete_vertices(dg.graph(), rim);
  const auto result = alpha(sub.graph, options);

  TokenWitness w;
  w.source = WitnessSource::solver;
  w.note = "solver-extracted from the rim subgraph H_m";
  w.exact = !result.aborted();
  for (Vertex v : result.witness.members)
    w.members.push_back(dg.label_of(sub.to_parent(v)));
  return w;
}

TokenWitness dv_wheel_witness(int m, const SolveOptions& options) {
  require(m >= 3, arg("dv_wheel_witness", m));
  if (m >= 4)
    return wheel_rim_witness(m, options);

  const auto dg = double_vertex(wheel(3));
  const auto result = alpha(dg.graph(), options);
  TokenWitness w;
  w.source = WitnessSource::solver;
  w.note = "solver-extracted from the whole graph; the rim alone reaches only 1";
  w.members = dg.labels_of(result.witness.members);
  w.exact = !result.aborted();
  return w;
}

TokenWitness pair_path_witness(int m) {
  require(m >= 1, arg("pair_path_witness", m));
  TokenWitness w = dv_path_witness(m + 1);
  for (auto& tv : w.members)
    tv = phi_inverse(tv);
  std::sort(w.members.begin(), w.members.end());
  return w;
}

TokenWitness pair_fan_witness(int m) {
  require(m >= 1, arg("pair_fan_witness", m));
  TokenWitness w = pair_path_witness(m);
  w.members.push_back(TokenVertex::multiset(m + 1, m + 1));
  return w;
}

TokenWitness pair_cycle_witness(int m) {
  require(m >= 3, arg("pair_cycle_witness", m));
  TokenWitness w;
  if (m % 2 == 0) {
    for (int q = 2; q <= m; q += 2)
      append(w.members, l_set(m, q));
    return w;
  }

  const int k = (m - 1) / 2;
  // Below the middle: even classes up to k-1 (k odd) or k (k even).
  // Above: every other class ending at 2k+1, skipping L_{k+1} (and
  // L_{k+2} when k is even).
  const int low_end = k % 2 == 1 ? k - 1 : k;
  const int high_start = k % 2 == 1 ? k + 2 : k + 3;
  for (int q = 2; q <= low_end; q += 2)
    append(w.members, l_set(m, q));
  for (int q = high_start; q <= m; q += 2)
    append(w.members, l_set(m, q));
  return w;
}

TokenWitness pair_wheel_witness(int m) {
  require(m >= 3, arg("pair_wheel_witness", m));
  TokenWitness w = pair_cycle_witness(m);
  w.members.push_back(TokenVertex::multiset(m + 1, m + 1));
  return w;
}

} // namespace tokenlab
