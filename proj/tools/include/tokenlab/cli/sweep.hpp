#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tokenlab/cli/config.hpp"
#include "tokenlab/witnesses.hpp"

namespace tokenlab::cli {

/// One closed form checked by `verify`: a base family under an operator.
struct SweepTarget {
  FormulaId formula;
  std::string_view family;
  OperatorSpec::Kind op;
  /// Default parameter range when --m is not given.
  Range defaults;
};

std::span<const SweepTarget> sweep_targets();
const SweepTarget* find_target(FormulaId id);
const SweepTarget* find_target(std::string_view family, OperatorSpec::Kind op);

/// Witness construction for a target, if one exists.
std::optional<TokenWitness> make_witness(const SweepTarget& target, int m,
                                         const SolveOptions& options = {});

enum class RowStatus { ok, mismatch, aborted };
const char* to_string(RowStatus s);

struct VerificationRow {
  std::string family;
  std::string op;
  int m = 0;
  int vertices = 0;
  std::int64_t formula = 0;
  int alpha = 0;
  std::optional<int> witness;
  RowStatus status = RowStatus::ok;
  std::int64_t ms = 0;
};

/**
   Builds the derived graph, evaluates the formula, solves, and certifies
   the witness when a construction exists. A witness that is not
   independent is reported as a mismatch. Aborted rows carry no witness.
 */
VerificationRow verify_one(const SweepTarget& target, int m, Method method,
                           const SolveOptions& options = {});

/// Rows for every selected target and in-domain m, ordered by
/// (family, operator, m). Rows run on `config.jobs` threads.
std::vector<VerificationRow> run_sweep(const RunConfig& config);

/// 0 when all rows are ok, 2 if any aborted, else 1 if any mismatched.
int exit_code(const std::vector<VerificationRow>& rows);

} // namespace tokenlab::cli
