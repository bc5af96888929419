#include "tokenlab/cli/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

namespace tokenlab::cli {

namespace {

using K = OperatorSpec::Kind;

constexpr std::array<SweepTarget, 8> kTargets{{
    {FormulaId::dv_path, "path", K::double_vertex, {2, 12}},
    {FormulaId::dv_cycle, "cycle", K::double_vertex, {3, 12}},
    {FormulaId::dv_fan, "fan", K::double_vertex, {2, 12}},
    {FormulaId::dv_wheel, "wheel", K::double_vertex, {4, 12}},
    {FormulaId::pair_path, "path", K::pair_graph, {3, 10}},
    {FormulaId::pair_fan, "fan", K::pair_graph, {1, 10}},
    {FormulaId::pair_cycle, "cycle", K::pair_graph, {3, 12}},
    {FormulaId::pair_wheel, "wheel", K::pair_graph, {3, 10}},
}};

struct Job {
  const SweepTarget* target;
  int m;
};

} // namespace

std::span<const SweepTarget> sweep_targets() { return kTargets; }

const SweepTarget* find_target(FormulaId id) {
  for (const auto& t : kTargets)
    if (t.formula == id)
      return &t;
  return nullptr;
}

const SweepTarget* find_target(std::string_view family, OperatorSpec::Kind op) {
  for (const auto& t : kTargets)
    if (t.family == family && t.op == op)
      return &t;
  return nullptr;
}

std::optional<TokenWitness> make_witness(const SweepTarget& target, int m,
                                         const SolveOptions& options) {
  switch (target.formula) {
  case FormulaId::dv_path: return dv_path_witness(m);
  case FormulaId::dv_fan: return dv_fan_witness(m);
  case FormulaId::dv_wheel: return dv_wheel_witness(m, options);
  case FormulaId::pair_path: return pair_path_witness(m);
  case FormulaId::pair_fan: return pair_fan_witness(m);
  case FormulaId::pair_cycle: return pair_cycle_witness(m);
  case FormulaId::pair_wheel: return pair_wheel_witness(m);
  default: return std::nullopt;
  }
}

const char* to_string(RowStatus s) {
  switch (s) {
  case RowStatus::ok: return "ok";
  case RowStatus::mismatch: return "mismatch";
  case RowStatus::aborted: return "aborted";
  }
  return "mismatch";
}

VerificationRow verify_one(const SweepTarget& target, int m, Method method,
                           const SolveOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto built = build(target.family, m, OperatorSpec{target.op, 2});
  const auto& dg = *built.derived;

  VerificationRow row;
  row.family = std::string(target.family);
  row.op = OperatorSpec{target.op, 2}.name();
  row.m = m;
  row.vertices = dg.graph().order();
  row.formula = evaluate(target.formula, m);

  const auto result = solve(dg.graph(), method, options);
  row.alpha = result.alpha;

  bool witness_ok = true;
  bool witness_aborted = false;
  if (!result.aborted()) {
    if (auto w = make_witness(target, m, options)) {
      row.witness = static_cast<int>(w->size());
      const auto set = to_independent_set(dg, *w);
      witness_ok = is_independent(dg.graph(), set) && *row.witness == row.formula;
      witness_aborted = !w->exact;
    }
  }

  if (result.aborted() || witness_aborted)
    row.status = RowStatus::aborted;
  else if (row.alpha != row.formula || !witness_ok)
    row.status = RowStatus::mismatch;
  else
    row.status = RowStatus::ok;

  row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return row;
}

std::vector<VerificationRow> run_sweep(const RunConfig& config) {
  std::vector<Job> jobs;
  for (FormulaId id : config.families) {
    const SweepTarget* t = find_target(id);
    if (!t)
      throw ConfigError("formula " + std::string(formula_info(id).name) + " has no sweep");
    const Range r = config.m.value_or(t->defaults);
    const int lo = std::max(r.lo, formula_info(id).verified_min);
    for (int m = lo; m <= r.hi; ++m)
      jobs.push_back({t, m});
  }
  if (jobs.empty())
    throw ConfigError("no (family, m) pair falls inside a formula domain");

  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return std::make_tuple(a.target->family, OperatorSpec{a.target->op, 2}.name(), a.m) <
           std::make_tuple(b.target->family, OperatorSpec{b.target->op, 2}.name(), b.m);
  });
  jobs.erase(std::unique(jobs.begin(), jobs.end(),
                         [](const Job& a, const Job& b) { return a.target == b.target && a.m == b.m; }),
             jobs.end());

  SolveOptions options;
  options.budget = config.budget;

  std::vector<VerificationRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = verify_one(*jobs[i].target, jobs[i].m, config.method, options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };

  const int threads = std::clamp(config.jobs, 1, static_cast<int>(jobs.size()));
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
  }
  if (failure)
    std::rethrow_exception(failure);

  if (!config.timing)
    for (auto& row : rows)
      row.ms = 0;
  return rows;
}

int exit_code(const std::vector<VerificationRow>& rows) {
  bool mismatch = false;
  for (const auto& row : rows) {
    if (row.status == RowStatus::aborted)
      return kExitAborted;
    mismatch = mismatch || row.status == RowStatus::mismatch;
  }
  return mismatch ? kExitMismatch : kExitOk;
}

} // namespace tokenlab::cli
