#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace tokenlab {

/// Closed-form independence numbers. All arithmetic is exact integer
/// arithmetic; arguments below a formula's verified domain throw
/// std::invalid_argument.
enum class FormulaId {
  dv_path,
  dv_cycle,
  dv_fan,
  dv_wheel,
  pair_path,
  pair_fan,
  pair_cycle,
  pair_wheel,
  grid,
  alpha_path,
  alpha_cycle,
};

struct FormulaInfo {
  FormulaId id;
  std::string_view name;
  /// Smallest parameter in the usual statement of the formula.
  int stated_min;
  /// Smallest parameter accepted here; every value from here up is
  /// confirmed against exhaustive search in the test suite.
  int verified_min;
};

std::span<const FormulaInfo> formula_table();
const FormulaInfo& formula_info(FormulaId id);
std::optional<FormulaId> parse_formula(std::string_view name);

/// Dispatch for the one-parameter formulas (everything but `grid`).
std::int64_t evaluate(FormulaId id, int m);

std::int64_t dv_path(int m);      ///< floor(m^2/4), m >= 2
std::int64_t dv_cycle(int m);     ///< floor(m*floor(m/2)/2), m >= 3
std::int64_t dv_fan(int m);       ///< floor(m^2/4) for m >= 2; 1 for m = 1
std::int64_t dv_wheel(int m);     ///< floor((m/2)*floor(m/2)) for m >= 4; 2 for m = 3
std::int64_t pair_path(int m);    ///< floor((m+1)^2/4), m >= 1
std::int64_t pair_fan(int m);     ///< pair_path(m) + 1, m >= 1
std::int64_t pair_cycle(int m);   ///< k(k+1) + floor((k+1)/2) if m = 2k+1, k(k+1) if m = 2k
std::int64_t pair_wheel(int m);   ///< pair_cycle(m) + 1, m >= 3
std::int64_t grid_alpha(int r, int s);
std::int64_t alpha_path(int m);   ///< ceil(m/2), m >= 1
std::int64_t alpha_cycle(int m);  ///< floor(m/2), m >= 3

/// OEIS A002620: floor(n^2/4), n >= 0.
std::int64_t a002620(int n);

/**
   Checks, for every n in 0..n_max:
     floor(n/2)*ceil(n/2) == floor(n^2/4)
     a(n) == a(n-1) + floor(n/2) == a(n-1) + ceil((n-1)/2)   (n >= 1, a(0) = 0)
     a(n) == a(n-2) + n - 1                                 (n >= 2)
 */
bool a002620_recurrence_checks(int n_max);

} // namespace tokenlab
