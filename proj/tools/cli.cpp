#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prefalloc/allocation.hpp"
#include "prefalloc/classify.hpp"
#include "prefalloc/error.hpp"
#include "prefalloc/evaluate.hpp"
#include "prefalloc/io.hpp"
#include "prefalloc/random.hpp"
#include "prefalloc/reductions/matchings.hpp"
#include "prefalloc/reductions/out_stars.hpp"
#include "prefalloc/reductions/out_trees.hpp"
#include "prefalloc/reductions/sources.hpp"
#include "prefalloc/reductions/two_agent_sat.hpp"
#include "prefalloc/reductions/two_path_sat.hpp"
#include "prefalloc/solve.hpp"

namespace prefalloc::cli {

namespace {

using nlohmann::ordered_json;

// File-level failures that are not library errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path, std::istream& in, std::ostream& err) {
  ParsedInstance parsed = parse_instance(read_text(path, in));
  for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
  return std::move(parsed.instance);
}

Objective objective_from(const std::string& text) {
  const auto objective = parse_objective(text);
  if (!objective) throw InputError("unknown objective '" + text + "'");
  return *objective;
}

ordered_json profile_json(const Instance& inst, const DissatisfactionProfile& p) {
  ordered_json values = ordered_json::object();
  for (AgentIndex a = 0; a < p.values.size(); ++a) values[inst.agent_id(a)] = p.values[a];
  return values;
}

ordered_json allocation_json(const Instance& inst, const Allocation& alloc) {
  ordered_json body = ordered_json::object();
  for (const auto& [agent, items] : to_named(inst, alloc)) body[agent] = items;
  return body;
}

struct SolveArgs {
  std::string instance;
  std::string objective = "sum";
  std::string algorithm = "auto";
  std::optional<std::int64_t> threshold;
  bool table = false;
  bool force = false;
  bool timing = false;
  unsigned threads = 1;
};

void print_table(const Instance& inst, const ordered_json& report, const Allocation* alloc,
                 const DissatisfactionProfile* p, std::ostream& out) {
  for (const auto& [key, value] : report.items()) {
    if (value.is_structured()) continue;
    out << std::left << std::setw(12) << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
  if (alloc == nullptr || p == nullptr) return;
  out << '\n' << std::left << std::setw(12) << "agent" << ' ' << std::setw(16) << "dissatisfaction" << " bundle\n";
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    out << std::left << std::setw(12) << inst.agent_id(a) << ' ' << std::setw(16) << p->values[a] << ' ';
    bool first = true;
    for (ItemIndex v : alloc->bundle(a)) {
      out << (first ? "" : " ") << inst.item_name(v);
      first = false;
    }
    out << '\n';
  }
}

int cmd_solve(const SolveArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(args.instance, in, err);
  const Objective objective = objective_from(args.objective);

  SolveOptions options;
  options.limits.oracle_limit = args.force ? std::numeric_limits<std::uint64_t>::max() : oracle_limit_from_env();
  options.threads = args.threads;
  if (args.algorithm != "auto") {
    options.algorithm = parse_solver(args.algorithm);
    if (!options.algorithm) throw InputError("unknown algorithm '" + args.algorithm + "'");
  }

  const auto start = std::chrono::steady_clock::now();
  const SolveOutcome outcome = solve(inst, objective, options);
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

  const DissatisfactionProfile p = profile(inst, outcome.allocation);
  ordered_json report;
  report["objective"] = to_string(objective);
  report["algorithm"] = to_string(outcome.used);
  report["value"] = outcome.value;
  bool yes = true;
  if (args.threshold) {
    yes = outcome.value <= *args.threshold;
    report["threshold"] = *args.threshold;
    report["decision"] = yes ? "yes" : "no";
  }
  if (yes) {
    report["profile"] = profile_json(inst, p);
    report["allocation"] = allocation_json(inst, outcome.allocation);
  }
  if (args.timing) report["wall_ms"] = elapsed.count();

  if (args.table) {
    print_table(inst, report, yes ? &outcome.allocation : nullptr, yes ? &p : nullptr, out);
  } else {
    out << report.dump(2) << '\n';
  }
  return yes ? kOk : kNo;
}

int cmd_eval(const std::string& instance_path, const std::string& allocation_path, bool lenient, std::istream& in,
             std::ostream& out, std::ostream& err) {
  if (instance_path == "-" && allocation_path == "-") throw InputError("only one input can be read from stdin");
  const Instance inst = load_instance(instance_path, in, err);
  const NamedAllocation named = parse_allocation(read_text(allocation_path, in));
  std::vector<std::string> warnings;
  const Allocation alloc = resolve_allocation(inst, named, lenient, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  out << serialize_profile(inst, profile(inst, alloc));
  return kOk;
}

int cmd_classify(const std::string& instance_path, std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst = load_instance(instance_path, in, err);
  const JunctionSummary summary = junctions(inst);
  DispatchLimits limits;
  limits.oracle_limit = oracle_limit_from_env();

  ordered_json report;
  report["agents"] = ordered_json::array();
  for (AgentIndex a = 0; a < inst.agent_count(); ++a) {
    ordered_json entry;
    entry["id"] = inst.agent_id(a);
    entry["classes"] = ordered_json::array();
    for (GraphClass c : classes_of(inst.graph(a))) entry["classes"].push_back(to_string(c));
    entry["junctions"] = ordered_json::array();
    for (ItemIndex v : summary.per_agent[a]) entry["junctions"].push_back(inst.item_name(v));
    report["agents"].push_back(std::move(entry));
  }
  report["gamma"] = summary.gamma;
  report["recommended"]["sum"] = to_string(dispatch(inst, Objective::Sum, limits));
  report["recommended"]["max"] = to_string(dispatch(inst, Objective::Max, limits));
  out << report.dump(2) << '\n';
  return kOk;
}

struct GenerateArgs {
  std::string reduction;
  std::string source;
  std::string random;
  std::size_t items = 6;
  std::size_t agents = 2;
  std::uint64_t seed = 0;
  std::uint32_t density = 35;
  std::size_t max_gamma = 4;
};

int cmd_generate(const GenerateArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
  ordered_json meta;
  Instance inst;
  if (!args.random.empty()) {
    const auto cls = gen::parse_random_class(args.random);
    if (!cls) throw InputError("unknown random class '" + args.random + "'");
    gen::RandomOptions options;
    options.items = args.items;
    options.agents = args.agents;
    options.density = args.density;
    options.max_gamma = args.max_gamma;
    gen::Rng rng(args.seed);
    inst = gen::random_instance(*cls, options, rng);
    meta["random"] = args.random;
    meta["seed"] = args.seed;
    meta["items"] = args.items;
    meta["agents"] = args.agents;
  } else {
    if (args.source.empty()) throw InputError("--reduction needs a source file");
    const std::string text = read_text(args.source, in);
    meta["reduction"] = args.reduction;
    const auto record = [&](Objective objective, std::int64_t threshold) {
      meta["objective"] = to_string(objective);
      meta["threshold"] = threshold;
    };
    if (args.reduction == "x3c-stars") {
      reductions::OutStarReduction r(reductions::parse_x3c(text));
      record(r.objective(), r.threshold());
      inst = r.instance();
    } else if (args.reduction == "x3c-trees") {
      reductions::OutTreeReduction r(reductions::parse_x3c(text));
      record(r.objective(), r.threshold());
      inst = r.instance();
    } else if (args.reduction == "x3c-matchings") {
      reductions::MatchingReduction r(reductions::parse_x3c(text));
      record(r.objective(), r.threshold());
      inst = r.instance();
    } else if (args.reduction == "sat-paths") {
      reductions::TwoPathSatReduction r(reductions::parse_dimacs(text));
      record(r.objective(), r.threshold());
      inst = r.instance();
    } else if (args.reduction == "sat-2agents") {
      reductions::TwoAgentSatReduction r(reductions::parse_dimacs(text));
      meta["thresholds"]["sum"] = r.threshold(Objective::Sum);
      meta["thresholds"]["max"] = r.threshold(Objective::Max);
      inst = r.instance();
    } else {
      throw InputError("unknown reduction '" + args.reduction + "'");
    }
  }
  meta["item_count"] = inst.item_count();
  meta["agent_count"] = inst.agent_count();
  out << serialize_instance(inst);
  err << meta.dump() << '\n';
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Min-Sum and Min-Max dissatisfaction over preference DAGs", "prefalloc"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Optimize or decide an instance");
  solve_cmd->add_option("instance", solve_args.instance, "Instance JSON file, - for stdin")->required();
  solve_cmd->add_option("--objective", solve_args.objective, "sum or max")
      ->check(CLI::IsMember({"sum", "max"}));
  solve_cmd->add_option("--algorithm", solve_args.algorithm, "auto, oracle or a solver name");
  solve_cmd->add_option("--threshold", solve_args.threshold, "Decide whether the optimum is at most this");
  auto* json_flag = solve_cmd->add_flag("--json", "JSON report (default)");
  solve_cmd->add_flag("--table", solve_args.table, "Plain-text table")->excludes(json_flag);
  solve_cmd->add_flag("--force", solve_args.force, "Ignore the oracle size limit");
  solve_cmd->add_flag("--timing", solve_args.timing, "Include wall time in the report");
  solve_cmd->add_option("--threads", solve_args.threads, "Oracle worker threads")->check(CLI::Range(1u, 256u));

  std::string eval_instance;
  std::string eval_allocation;
  bool lenient = false;
  auto* eval_cmd = app.add_subcommand("eval", "Dissatisfaction profile of an allocation");
  eval_cmd->add_option("instance", eval_instance, "Instance JSON file, - for stdin")->required();
  eval_cmd->add_option("allocation", eval_allocation, "Allocation JSON file, - for stdin")->required();
  eval_cmd->add_flag("--lenient", lenient, "Drop items outside the receiving agent's graph");

  std::string classify_instance;
  auto* classify_cmd = app.add_subcommand("classify", "Graph classes, junctions and solver choice");
  classify_cmd->add_option("instance", classify_instance, "Instance JSON file, - for stdin")->required();

  GenerateArgs gen_args;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a reduction or random instance");
  auto* reduction_opt = gen_cmd->add_option("--reduction", gen_args.reduction, "Reduction kind")
                            ->check(CLI::IsMember({"x3c-stars", "x3c-trees", "sat-2agents", "x3c-matchings",
                                                   "sat-paths"}));
  gen_cmd->add_option("source", gen_args.source, "X3C JSON or DIMACS file, - for stdin")->needs(reduction_opt);
  auto* random_opt = gen_cmd->add_option("--random", gen_args.random, "Random graph class");
  random_opt->excludes(reduction_opt);
  gen_cmd->add_option("--items", gen_args.items, "Item count")->needs(random_opt);
  gen_cmd->add_option("--agents", gen_args.agents, "Agent count")->needs(random_opt);
  gen_cmd->add_option("--seed", gen_args.seed, "PRNG seed")->needs(random_opt);
  gen_cmd->add_option("--density", gen_args.density, "Arc percentage for dag classes")
      ->check(CLI::Range(0u, 100u))
      ->needs(random_opt);
  gen_cmd->add_option("--max-gamma", gen_args.max_gamma, "Junction budget for bounded-gamma")->needs(random_opt);
  gen_cmd->require_option(1, 0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve_args, in, out, err);
    if (*eval_cmd) return cmd_eval(eval_instance, eval_allocation, lenient, in, out, err);
    if (*classify_cmd) return cmd_classify(classify_instance, in, out, err);
    if (gen_args.reduction.empty() && gen_args.random.empty()) throw InputError("give --reduction or --random");
    return cmd_generate(gen_args, in, out, err);
  } catch (const ValidationError& e) {
    err << "error: invalid allocation\n";
    for (const auto& v : e.violations()) err << "  " << v.message() << '\n';
    return kInputError;
  } catch (const UnsupportedError& e) {
    err << "error: unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << " (size " << e.size() << ", limit " << e.limit()
        << "; set PREFALLOC_ORACLE_LIMIT or pass --force)\n";
    return kTooLarge;
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace prefalloc::cli
