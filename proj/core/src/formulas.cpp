#include "tokenlab/formulas.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace tokenlab {

namespace {

constexpr std::array<FormulaInfo, 11> kFormulas{{
    {FormulaId::dv_path, "dv_path", 2, 2},
    {FormulaId::dv_cycle, "dv_cycle", 3, 3},
    {FormulaId::dv_fan, "dv_fan", 2, 1},
    {FormulaId::dv_wheel, "dv_wheel", 4, 3},
    {FormulaId::pair_path, "pair_path", 3, 1},
    {FormulaId::pair_fan, "pair_fan", 1, 1},
    {FormulaId::pair_cycle, "pair_cycle", 3, 3},
    {FormulaId::pair_wheel, "pair_wheel", 3, 3},
    {FormulaId::grid, "grid", 1, 1},
    {FormulaId::alpha_path, "alpha_path", 1, 1},
    {FormulaId::alpha_cycle, "alpha_cycle", 3, 3},
}};

void check_domain(FormulaId id, int m) {
  const auto& info = formula_info(id);
  if (m < info.verified_min)
    throw std::invalid_argument(std::string(info.name) + " is defined for m >= " +
                                std::to_string(info.verified_min) + ", got " + std::to_string(m));
}

std::int64_t floor_quarter_square(std::int64_t n) { return n * n / 4; }
std::int64_t ceil_half(std::int64_t n) { return (n + 1) / 2; }

} // namespace

std::span<const FormulaInfo> formula_table() { return kFormulas; }

const FormulaInfo& formula_info(FormulaId id) {
  for (const auto& f : kFormulas)
    if (f.id == id)
      return f;
  throw std::invalid_argument("unknown formula id");
}

std::optional<FormulaId> parse_formula(std::string_view name) {
  for (const auto& f : kFormulas)
    if (f.name == name)
      return f.id;
  return std::nullopt;
}

std::int64_t evaluate(FormulaId id, int m) {
  switch (id) {
  case FormulaId::dv_path: return dv_path(m);
  case FormulaId::dv_cycle: return dv_cycle(m);
  case FormulaId::dv_fan: return dv_fan(m);
  case FormulaId::dv_wheel: return dv_wheel(m);
  case FormulaId::pair_path: return pair_path(m);
  case FormulaId::pair_fan: return pair_fan(m);
  case FormulaId::pair_cycle: return pair_cycle(m);
  case FormulaId::pair_wheel: return pair_wheel(m);
  case FormulaId::alpha_path: return alpha_path(m);
  case FormulaId::alpha_cycle: return alpha_cycle(m);
  case FormulaId::grid: break;
  }
  throw std::invalid_argument("grid takes two parameters; use grid_alpha(r, s)");
}

std::int64_t dv_path(int m) {
  check_domain(FormulaId::dv_path, m);
  return floor_quarter_square(m);
}

std::int64_t dv_cycle(int m) {
  check_domain(FormulaId::dv_cycle, m);
  const std::int64_t mm = m;
  return mm * (mm / 2) / 2;
}

std::int64_t dv_fan(int m) {
  check_domain(FormulaId::dv_fan, m);
  return m == 1 ? 1 : floor_quarter_square(m);
}

std::int64_t dv_wheel(int m) {
  check_domain(FormulaId::dv_wheel, m);
  if (m == 3)
    return 2;
  const std::int64_t mm = m;
  return mm * (mm / 2) / 2;
}

std::int64_t pair_path(int m) {
  check_domain(FormulaId::pair_path, m);
  return floor_quarter_square(static_cast<std::int64_t>(m) + 1);
}

std::int64_t pair_fan(int m) {
  check_domain(FormulaId::pair_fan, m);
  return pair_path(m) + 1;
}

std::int64_t pair_cycle(int m) {
  check_domain(FormulaId::pair_cycle, m);
  const std::int64_t k = m / 2;
  if (m % 2 == 1)
    return k * (k + 1) + (k + 1) / 2;
  return k * (k + 1);
}

std::int64_t pair_wheel(int m) {
  check_domain(FormulaId::pair_wheel, m);
  return pair_cycle(m) + 1;
}

std::int64_t grid_alpha(int r, int s) {
  if (r < 1 || s < 1)
    throw std::invalid_argument("grid_alpha requires r, s >= 1");
  const std::int64_t cr = ceil_half(r);
  const std::int64_t cs = ceil_half(s);
  return cr * cs + (r - cr) * (s - cs);
}

std::int64_t alpha_path(int m) {
  check_domain(FormulaId::alpha_path, m);
  return ceil_half(m);
}

std::int64_t alpha_cycle(int m) {
  check_domain(FormulaId::alpha_cycle, m);
  return m / 2;
}

std::int64_t a002620(int n) {
  if (n < 0)
    throw std::invalid_argument("a002620 is defined for n >= 0");
  return floor_quarter_square(n);
}

bool a002620_recurrence_checks(int n_max) {
  if (n_max < 0)
    throw std::invalid_argument("n_max must be non-negative");
  for (std::int64_t n = 0; n <= n_max; ++n) {
    const auto a = a002620(static_cast<int>(n));
    if ((n / 2) * ceil_half(n) != a)
      return false;
    if (n >= 1) {
      const auto prev = a002620(static_cast<int>(n - 1));
      if (a != prev + n / 2 || a != prev + ceil_half(n - 1))
        return false;
    }
    if (n >= 2 && a != a002620(static_cast<int>(n - 2)) + n - 1)
      return false;
  }
  return true;
}

} // namespace tokenlab
