// tokenlab: build derived graphs, solve for independence numbers, and
// sweep closed-form formulas against the exact solver.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "tokenlab/cli/config.hpp"
#include "tokenlab/cli/props.hpp"
#include "tokenlab/cli/report.hpp"
#include "tokenlab/cli/sweep.hpp"
#include "tokenlab/tokenlab.hpp"

namespace {

using namespace tokenlab;
using namespace tokenlab::cli;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file)
    throw ConfigError("cannot open " + out_path + " for writing");
  file << text;
}

std::string describe(const std::string& family, int m, const OperatorSpec& op) {
  std::string s = family + " " + std::to_string(m);
  if (op.kind != OperatorSpec::Kind::none)
    s += " (" + op.name() + ")";
  return s;
}

std::optional<std::chrono::milliseconds> budget_from(long long ms) {
  if (ms < 0)
    return std::nullopt;
  if (ms == 0)
    throw ConfigError("--budget-ms must be positive");
  return std::chrono::milliseconds(ms);
}

struct GraphArgs {
  std::string family;
  int m = 0;
  std::string op;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("family", args.family, "path | cycle | complete | fan | wheel")->required();
  cmd->add_option("m", args.m, "family parameter")->required();
  cmd->add_option("--op", args.op, "dv | pair | token:k (default: the base graph)");
}

int run_build(const GraphArgs& args, const std::string& format, const std::string& out) {
  const auto op = OperatorSpec::parse(args.op);
  const auto built = build(args.family, args.m, op);
  const auto fmt = parse_format(format);
  std::string text;
  if (fmt == Format::dot) {
    text = built.derived ? to_dot(*built.derived) : to_dot(built.base);
  } else if (fmt == Format::json) {
    text = (built.derived ? to_json(*built.derived) : to_json(built.base)) + "\n";
  } else {
    throw ConfigError("build supports --format dot or json");
  }
  emit(text, out);
  return kExitOk;
}

int run_alpha(const GraphArgs& args, const std::string& method, long long budget_ms,
              const std::string& format, const std::string& out) {
  const auto op = OperatorSpec::parse(args.op);
  const auto built = build(args.family, args.m, op);
  SolveOptions options;
  options.budget = budget_from(budget_ms);
  const auto result = solve(built.target(), parse_method(method), options);
  const auto fmt = parse_format(format);

  const double ms = std::chrono::duration<double, std::milli>(result.elapsed).count();
  std::string text;
  if (fmt == Format::json) {
    nlohmann::ordered_json doc;
    doc["family"] = args.family;
    doc["m"] = args.m;
    doc["operator"] = op.name();
    doc["vertices"] = built.target().order();
    doc["edges"] = built.target().edge_count();
    doc["alpha"] = result.alpha;
    auto witness = nlohmann::ordered_json::array();
    for (Vertex v : result.witness.members) {
      if (built.derived)
        witness.push_back(built.derived->label_of(v).elements());
      else
        witness.push_back(v);
    }
    doc["witness"] = witness;
    doc["nodes"] = result.nodes;
    doc["elapsed_ms"] = ms;
    doc["status"] = result.aborted() ? "aborted" : "exact";
    text = doc.dump() + "\n";
  } else if (fmt == Format::table) {
    std::ostringstream o;
    o << "graph:   " << describe(args.family, args.m, op) << ", " << built.target().order()
      << " vertices, " << built.target().edge_count() << " edges\n";
    o << "alpha:   " << result.alpha << (result.aborted() ? " (lower bound, aborted)" : "") << '\n';
    o << "witness:";
    for (Vertex v : result.witness.members)
      o << ' ' << (built.derived ? built.derived->label_of(v).to_string() : std::to_string(v));
    o << '\n';
    o << "nodes:   " << result.nodes << '\n';
    o << "elapsed: " << std::fixed << std::setprecision(3) << ms << " ms\n";
    text = o.str();
  } else {
    throw ConfigError("alpha supports --format table or json");
  }
  emit(text, out);
  return result.aborted() ? kExitAborted : kExitOk;
}

int run_witness(const GraphArgs& args, const std::string& format, const std::string& out) {
  const auto op = OperatorSpec::parse(args.op);
  if (op.kind != OperatorSpec::Kind::double_vertex && op.kind != OperatorSpec::Kind::pair_graph)
    throw ConfigError("witness requires --op dv or --op pair");
  const auto* target = find_target(args.family, op.kind);
  if (!target)
    throw ConfigError("no closed form for " + describe(args.family, args.m, op));
  const auto built = build(args.family, args.m, op);
  std::int64_t formula = 0;
  try {
    formula = evaluate(target->formula, args.m);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const auto witness = make_witness(*target, args.m);
  if (!witness)
    throw ConfigError("no witness construction for " + describe(args.family, args.m, op));

  const auto& dg = *built.derived;
  const auto set = to_independent_set(dg, *witness);
  const bool independent = is_independent(dg.graph(), set);
  const bool ok = independent && static_cast<std::int64_t>(witness->size()) == formula;
  const char* source = witness->source == WitnessSource::solver ? "solver" : "constructed";

  const auto fmt = parse_format(format);
  std::string text;
  if (fmt == Format::dot) {
    DotOptions options;
    options.highlight = set.members;
    text = to_dot(dg, options);
  } else if (fmt == Format::json) {
    nlohmann::ordered_json doc;
    doc["family"] = args.family;
    doc["m"] = args.m;
    doc["operator"] = op.name();
    doc["members"] = nlohmann::ordered_json::parse(tokens_to_json(witness->members));
    doc["size"] = witness->size();
    doc["formula"] = formula;
    doc["independent"] = independent;
    doc["source"] = source;
    doc["status"] = ok ? "ok" : "mismatch";
    text = doc.dump() + "\n";
  } else if (fmt == Format::table) {
    std::ostringstream o;
    o << "witness for " << describe(args.family, args.m, op) << ", " << witness->size()
      << " vertices (" << source << ")\n";
    for (const auto& tv : witness->members)
      o << "  " << tv.to_string() << '\n';
    if (!witness->note.empty())
      o << "note:        " << witness->note << '\n';
    o << "independent: " << (independent ? "yes" : "no") << '\n';
    o << "size:        " << witness->size() << "  formula: " << formula << "  -> "
      << (ok ? "ok" : "mismatch") << '\n';
    text = o.str();
  } else {
    throw ConfigError("witness supports --format table, json or dot");
  }
  emit(text, out);
  return ok ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"tokenlab: double vertex graphs, pair graphs and their independence numbers"};
  app.require_subcommand(1);

  GraphArgs build_args, alpha_args, witness_args;
  std::string format = "table", out, method = "auto";
  std::string build_format = "json", witness_format = "table";
  long long budget_ms = -1;

  auto* build_cmd = app.add_subcommand("build", "Write a family graph or its derived graph");
  add_graph_args(build_cmd, build_args);
  build_cmd->add_option("--format", build_format, "dot | json");
  build_cmd->add_option("--out", out, "output path (default stdout)");

  auto* alpha_cmd = app.add_subcommand("alpha", "Compute the independence number");
  add_graph_args(alpha_cmd, alpha_args);
  alpha_cmd->add_option("--method", method, "auto | brute | bnb");
  alpha_cmd->add_option("--budget-ms", budget_ms, "abort the search after N ms");
  alpha_cmd->add_option("--format", format, "table | json");
  alpha_cmd->add_option("--out", out, "output path (default stdout)");

  std::vector<std::string> families{"all"};
  std::string m_range;
  int jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  bool no_timing = false;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the solver");
  verify_cmd->add_option("--families", families, "comma-separated formula names, or all")
      ->delimiter(',');
  verify_cmd->add_option("--m", m_range, "parameter range A..B (default: per-family)");
  verify_cmd->add_option("--method", method, "auto | brute | bnb");
  verify_cmd->add_option("--budget-ms", budget_ms, "per-instance time budget");
  verify_cmd->add_option("--format", format, "table | csv | json");
  verify_cmd->add_option("--out", out, "output path (default stdout)");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--seed", seed, "accepted for symmetry with props; sweeps are not random");
  verify_cmd->add_flag("--no-timing", no_timing, "write ms as 0 for byte-stable reports");

  auto* witness_cmd = app.add_subcommand("witness", "Emit and certify an explicit independent set");
  add_graph_args(witness_cmd, witness_args);
  witness_cmd->add_option("--format", witness_format, "table | json | dot");
  witness_cmd->add_option("--out", out, "output path (default stdout)");

  int sizes = 50;
  auto* props_cmd = app.add_subcommand("props", "Run the structural property suites");
  props_cmd->add_option("--seed", seed, "randomization seed");
  props_cmd->add_option("--sizes", sizes, "random instances per randomized suite");
  props_cmd->add_option("--format", format, "table | json");
  props_cmd->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*build_cmd)
      return run_build(build_args, build_format, out);
    if (*alpha_cmd)
      return run_alpha(alpha_args, method, budget_ms, format, out);
    if (*witness_cmd)
      return run_witness(witness_args, witness_format, out);
    if (*verify_cmd) {
      RunConfig config;
      config.families = parse_families(families);
      if (!m_range.empty())
        config.m = Range::parse(m_range);
      config.method = parse_method(method);
      config.budget = budget_from(budget_ms);
      config.format = parse_format(format);
      config.out = out;
      config.seed = seed;
      config.jobs = jobs;
      config.timing = !no_timing;
      if (config.jobs < 1)
        throw ConfigError("--jobs must be >= 1");
      const auto rows = run_sweep(config);
      emit(render(rows, config.format), config.out);
      return exit_code(rows);
    }
    if (*props_cmd) {
      const auto suites = run_property_suites(seed, sizes);
      emit(render_suites(suites, parse_format(format)), out);
      const bool all = std::all_of(suites.begin(), suites.end(),
                                   [](const SuiteResult& s) { return s.passed(); });
      return all ? kExitOk : kExitMismatch;
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}
