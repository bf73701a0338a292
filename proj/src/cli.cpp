#include "reconf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "reconf/costing.hpp"
#include "reconf/facts.hpp"
#include "reconf/model_io.hpp"
#include "reconf/oracle.hpp"
#include "reconf/report.hpp"
#include "reconf/scenarios.hpp"
#include "reconf/solver.hpp"
#include "reconf/validator.hpp"

namespace reconf {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string instance;
  std::string costs;
  std::string legacy;
  std::string solution;
  std::string actions;
  std::string format = "facts";
  std::optional<double> timeLimit;
  std::optional<std::uint64_t> nodeLimit;
  int allOptimal = 0;
  int workers = 1;
  bool noAlteration = false;
  std::string scenario;
  int things = 0;
  std::string outDir;
};

facts::FactFile read_facts(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  facts::FactFile file;
  try {
    file = facts::parse(ss.str());
  } catch (const facts::ParseError& e) {
    throw UsageError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  }
  for (const std::string& w : file.warnings) err << path << ": warning: " << w << "\n";
  return file;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << text;
}

Format format_of(const Options& o) { return o.format == "json" ? Format::Json : Format::Facts; }

CostModel load_costs(const Options& o, std::ostream& err) {
  std::vector<std::string> warnings;
  CostModel model = cost_model_from_facts(read_facts(o.costs, err), &warnings);
  for (const std::string& w : warnings) err << o.costs << ": warning: " << w << "\n";
  return model;
}

ReconfigProblem load_problem(const Options& o, std::ostream& err) {
  Instance instance = instance_from_facts(read_facts(o.instance, err));
  if (o.legacy.empty()) {
    ReconfigProblem problem;
    problem.instance = derive_bounds(std::move(instance));
    check_instance(problem.instance);
    return problem;
  }
  return make_problem(std::move(instance), legacy_from_facts(read_facts(o.legacy, err)), !o.noAlteration);
}

SolveOptions solve_options(const Options& o, std::ostream& err) {
  SolveOptions s;
  std::optional<double> seconds = o.timeLimit;
  if (!seconds) {
    if (const char* env = std::getenv("RECONF_TIME_LIMIT")) {
      try {
        seconds = std::stod(env);
      } catch (const std::exception&) {
        throw UsageError(std::string("RECONF_TIME_LIMIT is not a number: ") + env);
      }
    }
  }
  if (seconds) s.budget.timeLimit = std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000));
  s.budget.nodeLimit = o.nodeLimit;
  s.workers = std::max(1, o.workers);
  s.allOptimal = o.allOptimal;
  s.onIncumbent = [&err](const ProgressEvent& e) {
    err << "incumbent cost=" << e.cost << " nodes=" << e.nodes << " elapsedMs=" << e.elapsedMs << "\n";
  };
  return s;
}

int exit_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal:
    case SolveStatus::FeasibleSuboptimal: return kExitOk;
    case SolveStatus::Infeasible: return kExitInfeasible;
    case SolveStatus::Unknown: return kExitBudget;
  }
  return kExitUsage;
}

int cmd_solve(const Options& o, bool reconfiguration, std::ostream& out, std::ostream& err) {
  const ReconfigProblem problem = load_problem(o, err);
  const CostModel model = load_costs(o, err);
  const SolveResult result = solve_reconfiguration(problem, model, solve_options(o, err));
  out << render_result(result, format_of(o), reconfiguration);
  return exit_for(result.status);
}

Solution make_solution(const ReconfigProblem& problem, const CostModel& model, const Configuration& config) {
  Solution s;
  s.config = config;
  s.actions = make_actions(problem, config);
  s.cost = reconfig_cost(problem.legacy, config, s.actions, model);
  return s;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const ReconfigProblem problem = load_problem(o, err);
  const CostModel model = load_costs(o, err);
  OracleLimits limits;
  if (o.allOptimal > 0) limits.maxOptima = static_cast<std::size_t>(o.allOptimal);
  OracleResult found;
  try {
    found = o.legacy.empty() ? brute_force_configuration(problem.instance, model, limits)
                             : brute_force_reconfiguration(problem, model, limits);
  } catch (const SizeError& e) {
    throw UsageError(e.what());
  }
  SolveResult result;
  result.nodes = found.candidates;
  result.status = found.feasible ? SolveStatus::Optimal : SolveStatus::Infeasible;
  if (found.feasible) {
    result.best = make_solution(problem, model, *found.optima.begin());
    if (o.allOptimal > 0) {
      for (const Configuration& c : found.optima) result.optima.push_back(make_solution(problem, model, c));
    }
  }
  out << render_result(result, format_of(o), !o.legacy.empty());
  return exit_for(result.status);
}

// Actions from -a, else from the solution file, else the ones the
// configuration implies.
ActionSet load_actions(const Options& o, const facts::FactFile& solution, const ReconfigProblem& problem,
                       const Configuration& config, std::ostream& err) {
  if (!o.actions.empty()) return actions_from_facts(read_facts(o.actions, err));
  if (has_actions(solution)) return actions_from_facts(solution);
  return make_actions(problem, config);
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const ReconfigProblem problem = load_problem(o, err);
  const facts::FactFile solution = read_facts(o.solution, err);
  const Configuration config = configuration_from_facts(solution);
  ValidationReport report;
  if (o.legacy.empty()) {
    report = check_configuration(problem.instance, config);
  } else {
    const ActionSet actions = load_actions(o, solution, problem, config, err);
    try {
      report = check_reconfiguration(problem, config, actions);
    } catch (const PreconditionError& e) {
      report.add("T1", {}, e.what());
    }
  }
  if (format_of(o) == Format::Json) {
    out << render_report(report, Format::Json);
  } else {
    err << render_report(report, Format::Facts);
    out << (report.valid ? "valid" : "invalid") << "\n";
  }
  return report.valid ? kExitOk : kExitInvalid;
}

int cmd_cost(const Options& o, std::ostream& out, std::ostream& err) {
  const ReconfigProblem problem = load_problem(o, err);
  const CostModel model = load_costs(o, err);
  const facts::FactFile solution = read_facts(o.solution, err);
  const Configuration config = configuration_from_facts(solution);
  CostBreakdown cost;
  if (o.legacy.empty()) {
    cost = config_cost(config, model);
  } else {
    cost = reconfig_cost(problem.legacy, config, load_actions(o, solution, problem, config, err), model);
  }
  out << render_cost(cost, format_of(o));
  return kExitOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  Scenario s;
  try {
    s = generate(o.scenario, o.things);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::filesystem::path dir(o.outDir);
  std::filesystem::create_directories(dir);
  write_file(dir / "instance.facts", facts::serialize(to_facts(s.after)));
  write_file(dir / "legacy.facts", facts::serialize(to_facts(s.legacy)));
  write_file(dir / "old_instance.facts", facts::serialize(to_facts(s.before)));
  write_file(dir / "costs.facts", facts::serialize(to_facts(benchmark_costs())));
  out << "wrote " << s.name << " scenario with " << s.after.things.size() << " things to " << dir.string() << "\n";
  return kExitOk;
}

void add_solve_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--time-limit", o.timeLimit, "Search budget in seconds (default: $RECONF_TIME_LIMIT)");
  cmd->add_option("--node-limit", o.nodeLimit, "Search budget in nodes");
  cmd->add_option("--all-optimal", o.allOptimal, "Report up to N optimal solutions");
  cmd->add_option("--workers", o.workers, "Search threads");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cost-optimal house configuration and reconfiguration"};
  app.name("reconf");
  app.require_subcommand(1);

  auto format = [&o](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"facts", "json"}));
  };

  auto* solve = app.add_subcommand("solve", "Cheapest configuration from scratch");
  solve->add_option("-i,--instance", o.instance, "Instance facts")->required();
  solve->add_option("-c,--costs", o.costs, "Cost facts")->required();
  add_solve_flags(solve, o);
  format(solve);

  auto* reconfigure = app.add_subcommand("reconfigure", "Cheapest reconfiguration of a legacy configuration");
  reconfigure->add_option("-i,--instance", o.instance, "New instance facts")->required();
  reconfigure->add_option("-l,--legacy", o.legacy, "Legacy configuration facts")->required();
  reconfigure->add_option("-c,--costs", o.costs, "Cost facts")->required();
  reconfigure->add_flag("--no-alteration", o.noAlteration, "Reused cabinets keep their height");
  add_solve_flags(reconfigure, o);
  format(reconfigure);

  auto* validate = app.add_subcommand("validate", "Check a solution against the requirements");
  validate->add_option("-i,--instance", o.instance, "Instance facts")->required();
  validate->add_option("-s,--solution", o.solution, "Solution facts")->required();
  validate->add_option("-l,--legacy", o.legacy, "Legacy configuration facts");
  validate->add_option("-a,--actions", o.actions, "reuse/delete/create facts");
  validate->add_flag("--no-alteration", o.noAlteration, "Reused cabinets keep their height");
  format(validate);

  auto* cost = app.add_subcommand("cost", "Price an existing solution");
  cost->add_option("-i,--instance", o.instance, "Instance facts")->required();
  cost->add_option("-s,--solution", o.solution, "Solution facts")->required();
  cost->add_option("-c,--costs", o.costs, "Cost facts")->required();
  cost->add_option("-l,--legacy", o.legacy, "Legacy configuration facts");
  cost->add_option("-a,--actions", o.actions, "reuse/delete/create facts");
  format(cost);

  auto* gen = app.add_subcommand("generate", "Write a benchmark scenario");
  gen->add_option("--scenario", o.scenario, "Scenario family")
      ->required()
      ->check(CLI::IsMember({"empty", "long", "newroom", "swap"}));
  gen->add_option("--things", o.things, "Number of things");
  gen->add_option("-o,--output", o.outDir, "Output directory")->required();

  auto* oracle = app.add_subcommand("oracle", "Exhaustive search on tiny instances");
  oracle->add_option("-i,--instance", o.instance, "Instance facts")->required();
  oracle->add_option("-c,--costs", o.costs, "Cost facts")->required();
  oracle->add_option("-l,--legacy", o.legacy, "Legacy configuration facts");
  oracle->add_flag("--no-alteration", o.noAlteration, "Reused cabinets keep their height");
  oracle->add_option("--all-optimal", o.allOptimal, "Report up to N optimal solutions");
  format(oracle);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(o, false, out, err);
    if (*reconfigure) return cmd_solve(o, true, out, err);
    if (*validate) return cmd_validate(o, out, err);
    if (*cost) return cmd_cost(o, out, err);
    if (*gen) return cmd_generate(o, out);
    if (*oracle) return cmd_oracle(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const CostError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace reconf
