// lazyflip: command-line driver for the solver, generators and oracles.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lazyflip/cstree.hpp"
#include "lazyflip/generators.hpp"
#include "lazyflip/io.hpp"
#include "lazyflip/model.hpp"
#include "lazyflip/oracle.hpp"
#include "lazyflip/solver.hpp"

namespace {

using namespace lazyflip;

constexpr int kInputError = 2;

struct GridSize {
  std::size_t height = 0;
  std::size_t width = 0;
};

GridSize parse_grid_size(const std::string& text) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) throw CLI::ValidationError("--size", "expected HxW");
  GridSize size;
  try {
    std::size_t used = 0;
    size.height = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const std::string rest = text.substr(x + 1);
    size.width = std::stoul(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--size", "expected HxW, got '" + text + "'");
  }
  if (size.height == 0 || size.width == 0) {
    throw CLI::ValidationError("--size", "grid dimensions must be positive");
  }
  return size;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  os << text;
  if (!os) throw std::runtime_error("failed writing '" + path + "'");
}

// solve ----------------------------------------------------------------------

struct SolveOptions {
  std::string model;
  std::size_t max_depth = 0;
  std::string init = "unary";
  std::optional<double> time_limit;
  std::string trace_path;
  std::string out_path;
};

int run_solve(const SolveOptions& opt) {
  const FactorGraph graph = load_model(opt.model);

  SolveParams params;
  params.max_depth = opt.max_depth;
  params.time_limit = opt.time_limit;
  std::vector<Label> given;
  if (opt.init == "unary") {
    params.init_policy = InitPolicy::unary_min;
  } else if (opt.init == "zeros") {
    params.init_policy = InitPolicy::all_zero;
  } else if (opt.init.rfind("file:", 0) == 0) {
    params.init_policy = InitPolicy::given;
    given = load_configuration(opt.init.substr(5));
  } else {
    throw CLI::ValidationError("--init", "expected unary, zeros or file:<path>");
  }

  const SolveResult result = solve(graph, params, given);

  if (!opt.out_path.empty()) {
    std::ostringstream os;
    write_configuration(os, result.configuration.bits);
    write_text(opt.out_path, os.str());
  }
  if (!opt.trace_path.empty()) {
    write_text(opt.trace_path, trace_to_json(result.trace) + "\n");
  }

  std::cout << "energy " << format_real(result.recomputed_energy) << '\n'
            << "accumulated_energy " << format_real(result.configuration.energy) << '\n'
            << "completed_depth " << result.completed_depth << '\n'
            << "reached_depth " << result.reached_depth << '\n'
            << "flips_accepted " << result.counters.flips_accepted << '\n'
            << "subsets_evaluated " << result.counters.subsets_evaluated << '\n'
            << "cstree_nodes " << result.counters.cstree_nodes << '\n'
            << "search_exhausted " << (result.search_exhausted ? "true" : "false") << '\n'
            << "time_limit_reached " << (result.time_limit_reached ? "true" : "false") << '\n';
  return 0;
}

// generate -------------------------------------------------------------------

struct GenerateOptions {
  std::string size;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  std::string output;
  std::size_t variables = 8;
  std::size_t factors = 8;
  std::size_t max_arity = 3;
};

void emit_model(const FactorGraph& graph, const std::string& output) {
  if (output.empty() || output == "-") {
    write_model(std::cout, graph);
  } else {
    save_model(output, graph);
  }
}

// exact / verify / count-subgraphs --------------------------------------------

struct ExactOptions {
  std::string model;
  std::size_t max_vars = 24;
  std::string out_path;
};

int run_exact(const ExactOptions& opt) {
  const FactorGraph graph = load_model(opt.model);
  const oracle::Minimum best = oracle::brute_force_minimize(graph, opt.max_vars);
  std::ostringstream config;
  write_configuration(config, best.bits);
  if (!opt.out_path.empty()) write_text(opt.out_path, config.str());
  std::cout << "energy " << format_real(best.energy) << '\n' << "configuration " << config.str();
  return 0;
}

struct VerifyOptions {
  std::string model;
  std::string configuration;
  std::size_t hamming = 1;
  std::uint64_t budget = 50'000'000;
};

int run_verify(const VerifyOptions& opt) {
  const FactorGraph graph = load_model(opt.model);
  const std::vector<Label> bits = load_configuration(opt.configuration);
  if (bits.size() != graph.variable_count()) {
    throw ModelError("configuration has " + std::to_string(bits.size()) +
                     " variables, model has " + std::to_string(graph.variable_count()));
  }
  const bool holds = oracle::verify_hamming_bound(graph, bits, opt.hamming, opt.budget);
  std::cout << "energy " << format_real(graph.energy(bits)) << '\n'
            << "hamming " << opt.hamming << ' ' << (holds ? "holds" : "violated") << '\n';
  return holds ? 0 : 1;
}

struct CountOptions {
  std::string model;
  std::optional<std::size_t> max_size;
  bool check = false;
  std::string dump_path;
};

int run_count(const CountOptions& opt) {
  const FactorGraph graph = load_model(opt.model);
  CSTree tree(graph);
  const auto counts = grow_levels(tree, opt.max_size.value_or(graph.variable_count()));
  std::uint64_t total = 0;
  for (std::size_t n = 1; n < counts.size(); ++n) {
    std::cout << "size " << n << ' ' << counts[n] << '\n';
    total += counts[n];
  }
  std::cout << "total " << total << '\n';

  if (!opt.dump_path.empty()) {
    std::ofstream os(opt.dump_path);
    if (!os) throw std::runtime_error("cannot open '" + opt.dump_path + "' for writing");
    tree.dump(os);
  }

  if (opt.check) {
    const auto report = oracle::enumerate_connected_subsets_recursive(graph, opt.max_size);
    bool agree = report.total == total;
    for (std::size_t n = 1; n < report.counts.size(); ++n) {
      const std::uint64_t mine = n < counts.size() ? counts[n] : 0;
      agree = agree && mine == report.counts[n];
    }
    std::cout << "check " << (agree ? "ok" : "MISMATCH") << " oracle_total " << report.total
              << '\n';
    return agree ? 0 : 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy Flipper MAP inference for binary factor graphs"};
  app.require_subcommand(1);

  SolveOptions solve_opt;
  auto* solve_cmd = app.add_subcommand("solve", "Minimize the energy of a model");
  solve_cmd->add_option("model", solve_opt.model, "Model file (bfg 1)")->required()->check(
      CLI::ExistingFile);
  solve_cmd->add_option("--max-depth", solve_opt.max_depth, "Largest subset size to search")
      ->required()
      ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
  solve_cmd->add_option("--init", solve_opt.init, "unary | zeros | file:<path>");
  solve_cmd->add_option("--time-limit", solve_opt.time_limit, "Seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--trace", solve_opt.trace_path, "Write the solve trace as JSON");
  solve_cmd->add_option("--out", solve_opt.out_path, "Write the final configuration");

  GenerateOptions gen_opt;
  auto* generate_cmd = app.add_subcommand("generate", "Write a synthetic model");
  generate_cmd->require_subcommand(1);
  auto* ising_cmd = generate_cmd->add_subcommand("ising", "Ferromagnetic Ising grid");
  ising_cmd->add_option("--size", gen_opt.size, "HxW")->required();
  ising_cmd->add_option("--alpha", gen_opt.alpha, "Coupling weight")->check(
      CLI::NonNegativeNumber);
  ising_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  ising_cmd->add_option("-o,--output", gen_opt.output, "Output file (default stdout)");
  auto* grid_cmd = generate_cmd->add_subcommand("subgraph-grid", "Optimal subgraph model");
  grid_cmd->add_option("--size", gen_opt.size, "HxW cells")->required();
  grid_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  grid_cmd->add_option("-o,--output", gen_opt.output, "Output file (default stdout)");
  auto* random_cmd = generate_cmd->add_subcommand("random", "Random higher-order model");
  random_cmd->add_option("--vars", gen_opt.variables, "Variable count");
  random_cmd->add_option("--factors", gen_opt.factors, "Higher-order factor count");
  random_cmd->add_option("--max-arity", gen_opt.max_arity, "Largest factor arity")
      ->check(CLI::Range(2, 30));
  random_cmd->add_option("--seed", gen_opt.seed, "Random seed");
  random_cmd->add_option("-o,--output", gen_opt.output, "Output file (default stdout)");

  ExactOptions exact_opt;
  auto* exact_cmd = app.add_subcommand("exact", "Brute-force global minimum");
  exact_cmd->add_option("model", exact_opt.model)->required()->check(CLI::ExistingFile);
  exact_cmd->add_option("--max-vars", exact_opt.max_vars, "Refuse larger models");
  exact_cmd->add_option("--out", exact_opt.out_path, "Write the optimal configuration");

  VerifyOptions verify_opt;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check that no flip of <= N variables lowers the energy");
  verify_cmd->add_option("model", verify_opt.model)->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("configuration", verify_opt.configuration)
      ->required()
      ->check(CLI::ExistingFile);
  verify_cmd->add_option("--hamming", verify_opt.hamming, "Hamming radius")->required();
  verify_cmd->add_option("--budget", verify_opt.budget, "Maximum number of flips to test");

  CountOptions count_opt;
  auto* count_cmd =
      app.add_subcommand("count-subgraphs", "Count connected subsets with the CS-tree");
  count_cmd->add_option("model", count_opt.model)->required()->check(CLI::ExistingFile);
  count_cmd->add_option("--max-size", count_opt.max_size, "Largest subset size")
      ->check(CLI::PositiveNumber);
  count_cmd->add_flag("--check", count_opt.check, "Cross-check with the recursive enumerator");
  count_cmd->add_option("--dump", count_opt.dump_path, "Write the CS-tree node table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve_cmd) return run_solve(solve_opt);
    if (*exact_cmd) return run_exact(exact_opt);
    if (*verify_cmd) return run_verify(verify_opt);
    if (*count_cmd) return run_count(count_opt);
    if (*ising_cmd) {
      const GridSize size = parse_grid_size(gen_opt.size);
      emit_model(generate_ising({size.height, size.width, gen_opt.alpha, gen_opt.seed}),
                 gen_opt.output);
      return 0;
    }
    if (*grid_cmd) {
      const GridSize size = parse_grid_size(gen_opt.size);
      emit_model(generate_subgraph_grid({size.height, size.width, gen_opt.seed}), gen_opt.output);
      return 0;
    }
    if (*random_cmd) {
      emit_model(generate_random({gen_opt.variables, gen_opt.factors, gen_opt.max_arity, true,
                                  gen_opt.seed}),
                 gen_opt.output);
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
