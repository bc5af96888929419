#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tokenlab/graph.hpp"
#include "tokenlab/mis.hpp"
#include "tokenlab/token.hpp"

namespace tokenlab {

/// Which family of structured vertex sets a StructuredSet belongs to.
enum class SetRole {
  L,       ///< diagonal classes of C(C_m)
  R_dv,    ///< 2-subsets through a fixed vertex, in F_2
  R_pair,  ///< 2-multisets through a fixed vertex, in C(.)
  B_dv,    ///< 2-subsets through the apex m+1
  B_pair,  ///< 2-multisets through the apex m+1
};

struct StructuredSet {
  SetRole role;
  int m;
  /// q for L and R_dv, i for R_pair, 0 for the B sets.
  int index;
  std::vector<TokenVertex> members;
};

/// L_q = {{j, m-(q-j)} : 1 <= j <= q} over C(C_m). 1 <= q <= m, m >= 3.
StructuredSet l_set(int m, int q);

/// Whether L_q should be independent in C(C_m): false exactly when
/// m = 2q-1 with 2 <= q <= m-1.
bool l_is_independent_expected(int m, int q);

/// Some edge of g joins a member of a to a member of b.
bool linked(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b);

/// Unordered index pair {i, j}, stored with i <= j.
using IndexPair = std::pair<int, int>;

/// All {i, j} (i == j allowed) with L_i and L_j linked in C(C_m).
std::set<IndexPair> linking_profile(int m);

/// {i, i+1} and {i, m-i+1} for 1 <= i <= m-1.
std::set<IndexPair> predicted_linking_profile(int m);

/// R_q = {{q, i} : i in 1..m, i != q} (2-subsets). 1 <= q <= m.
StructuredSet r_set_dv(int m, int q);

/// R_i = {{i, j} : j in 1..m} (2-multisets, includes {i,i}). 1 <= i <= m.
StructuredSet r_set_pair(int m, int i);

/// {{a, m+1} : 1 <= a <= m} in F_2 of a fan or wheel.
StructuredSet b_set_dv(int m);

/// {{i, m+1} : 1 <= i <= m+1} in C of a fan or wheel.
StructuredSet b_set_pair(int m);

enum class WitnessSource {
  constructed,
  /// Extracted from the exact solver because no explicit construction
  /// is available.
  solver,
};

/// An independent set given by token labels, so it can be placed in any
/// derived graph that carries those labels.
struct TokenWitness {
  std::vector<TokenVertex> members;
  WitnessSource source = WitnessSource::constructed;
  std::string note;
  /// False when a solver-backed witness ran out of its time budget; the
  /// members are then independent but possibly not maximum.
  bool exact = true;

  std::size_t size() const { return members.size(); }
};

/// Resolve labels to vertex indices of dg. Throws if a label is missing.
IndependentSet to_independent_set(const DerivedGraph& dg, const TokenWitness& w);

/// {i, j} -> {i, j+1}: from 2-multisets of P_n to 2-subsets of P_{n+1}.
TokenVertex phi(const TokenVertex& tv);
TokenVertex phi_inverse(const TokenVertex& tv);

/// 2-subsets {i, j} of 1..m with i + j odd. m >= 2.
TokenWitness dv_path_witness(int m);

/// Odd-sum pairs of 1..m inside F_2(F_{m,1}); {1,2} for m = 1.
TokenWitness dv_fan_witness(int m);

/// Maximum independent set of F_2(W_{m,1}), m >= 3. For m >= 4 it is
/// solved on the rim part (2-subsets of 1..m); for m = 3 the rim only
/// reaches 1 and the whole graph is solved instead.
TokenWitness dv_wheel_witness(int m, const SolveOptions& options = {});

/// Maximum independent set of the rim part H_m of F_2(W_{m,1}), m >= 3.
TokenWitness wheel_rim_witness(int m, const SolveOptions& options = {});

/// dv_path_witness(m+1) pulled back through phi. m >= 1.
TokenWitness pair_path_witness(int m);

/// pair_path_witness(m) plus the apex diagonal {m+1, m+1}. m >= 1.
TokenWitness pair_fan_witness(int m);

/**
   Union of L classes of C(C_m), m >= 3:
     m = 2k:             L_2, L_4, ..., L_m
     m = 2k+1, k odd:    L_2, ..., L_{k-1}, L_{k+2}, L_{k+4}, ..., L_{2k+1}
     m = 2k+1, k even:   L_2, ..., L_k, L_{k+3}, L_{k+5}, ..., L_{2k+1}
 */
TokenWitness pair_cycle_witness(int m);

/// pair_cycle_witness(m) plus {m+1, m+1}. m >= 3.
TokenWitness pair_wheel_witness(int m);

} // namespace tokenlab
