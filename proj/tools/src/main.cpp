#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "osbop/errors.hpp"

#include "commands.hpp"

namespace {

using osbop_cli::UsageError;

/// "7" or "lo..hi" (inclusive).
void expand_seed_token(const std::string& token, std::vector<std::uint64_t>& seeds) {
  const auto parse_one = [](const std::string& text) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return static_cast<std::uint64_t>(value);
    } catch (const std::exception&) {
      throw UsageError("bad seed '" + text + "'");
    }
  };

  const std::size_t dots = token.find("..");
  if (dots == std::string::npos) {
    seeds.push_back(parse_one(token));
    return;
  }
  const std::uint64_t lo = parse_one(token.substr(0, dots));
  const std::uint64_t hi = parse_one(token.substr(dots + 2));
  if (hi < lo || hi - lo >= 100000) throw UsageError("bad seed range '" + token + "'");
  for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
}

void parse_range(const std::string& token, int& lo, int& hi) {
  const auto parse_one = [&](const std::string& text) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return value;
    } catch (const std::exception&) {
      throw UsageError("bad range '" + token + "'");
    }
  };
  const std::size_t dots = token.find("..");
  if (dots == std::string::npos) {
    lo = hi = parse_one(token);
    return;
  }
  lo = parse_one(token.substr(0, dots));
  hi = parse_one(token.substr(dots + 2));
  if (hi < lo) throw UsageError("bad range '" + token + "'");
}

void add_input_flags(CLI::App* cmd, osbop_cli::InputSpec& input) {
  cmd->add_option("--input", input.matrix_file, "Pair order matrix CSV file");
  cmd->add_option("--preflib", input.preflib_file, "PrefLib election file");
}

template <typename Report>
void emit(const Report& report, const std::string& out_format) {
  if (out_format == "json")
    std::cout << osbop_cli::to_json(report).dump(2) << "\n";
  else if (out_format == "csv")
    std::cout << osbop_cli::to_csv(report);
  else
    std::cout << osbop_cli::to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Consensus-set solvers for bucket orders: exact enumeration,\n"
               "utopian lower bounds and stochastic local search over weighted\n"
               "ensembles of complete rankings with ties."};
  app.require_subcommand(1);
  std::function<int()> action;

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Stochastic local search (multi-seed)");
  osbop_cli::SolveOptions solve_options;
  std::vector<std::string> seed_tokens;
  std::string solve_out;
  add_input_flags(solve, solve_options.input);
  solve->add_option("--variant", solve_options.variant,
                    "obop (b=1), osbop-e (equal weights) or osbop (tuned weights)")
      ->required();
  solve->add_option("--b", solve_options.b, "Ensemble size");
  solve->add_option("--iters", solve_options.iters, "Outer iterations (t1)");
  solve->add_option("--tune-iters", solve_options.tune_iters,
                    "Weight-tuning iterations (t2)");
  solve->add_option("--seed", seed_tokens, "Seed or lo..hi range; repeatable");
  solve->add_option("--threads", solve_options.threads, "Worker pool size (0 = auto)");
  solve->add_option("--out", solve_out, "Report format: json or csv (default: text)");
  solve->add_option("--trace-csv", solve_options.trace_csv,
                    "Write the best seed's convergence trace to this file");
  solve->callback([&] {
    action = [&]() {
      if (!seed_tokens.empty()) {
        solve_options.seeds.clear();
        for (const std::string& token : seed_tokens)
          expand_seed_token(token, solve_options.seeds);
      }
      emit(osbop_cli::run_solve(solve_options), solve_out);
      return 0;
    };
  });

  // ---- exact ----
  auto* exact = app.add_subcommand("exact", "Exhaustive search (equal weights)");
  osbop_cli::ExactCmdOptions exact_options;
  std::string exact_out;
  add_input_flags(exact, exact_options.input);
  exact->add_option("--b", exact_options.b, "Ensemble size (1 = single ranking)");
  exact->add_option("--budget", exact_options.budget, "Candidate evaluation budget");
  exact->add_option("--out", exact_out, "Report format: json or csv (default: text)");
  exact->callback([&] {
    action = [&]() {
      emit(osbop_cli::run_exact(exact_options), exact_out);
      return 0;
    };
  });

  // ---- utopia ----
  auto* utopia = app.add_subcommand("utopia", "Utopian matrices and lower bounds");
  osbop_cli::UtopiaCmdOptions utopia_options;
  std::string utopia_b = "1";
  std::string utopia_out;
  add_input_flags(utopia, utopia_options.input);
  utopia->add_option("--b", utopia_b, "Grid order b or range lo..hi");
  utopia->add_option("--b-range", utopia_b, "Alias of --b accepting lo..hi");
  utopia->add_option("--out", utopia_out, "Report format: json or csv (default: text)");
  utopia->callback([&] {
    action = [&]() {
      parse_range(utopia_b, utopia_options.b_lo, utopia_options.b_hi);
      emit(osbop_cli::run_utopia(utopia_options), utopia_out);
      return 0;
    };
  });

  // ---- space ----
  auto* space = app.add_subcommand("space", "Solution-space size table (CSV)");
  osbop_cli::SpaceOptions space_options;
  std::string n_range = "2..10";
  std::string b_range = "1..4";
  space->add_option("--n-range", n_range, "Item counts, lo..hi");
  space->add_option("--b-range", b_range, "Ensemble sizes, lo..hi");
  space->add_flag("--strict", space_options.strict, "Count rankings without ties (b=1)");
  space->callback([&] {
    action = [&]() {
      parse_range(n_range, space_options.n_lo, space_options.n_hi);
      parse_range(b_range, space_options.b_lo, space_options.b_hi);
      std::cout << osbop_cli::run_space(space_options);
      return 0;
    };
  });

  // ---- reproduce-tables ----
  auto* reproduce = app.add_subcommand(
      "reproduce-tables", "Re-run the bundled benchmark grid against reference values");
  osbop_cli::ReproduceOptions reproduce_options;
  reproduce->add_option("--data-dir", reproduce_options.data_dir,
                        "Directory holding <id>.{toi,toc,soi,soc,csv} dataset files")
      ->required();
  reproduce->add_option("--iters", reproduce_options.iters, "Outer iterations (t1)");
  reproduce->add_option("--tune-iters", reproduce_options.tune_iters,
                        "Weight-tuning iterations (t2)");
  reproduce->add_option("--seeds", reproduce_options.seed_count, "Seeds per instance");
  reproduce->add_option("--budget", reproduce_options.budget, "Exact-search budget");
  reproduce->add_option("--threads", reproduce_options.threads, "Worker pool size");
  reproduce->callback([&] {
    action = [&]() {
      std::cout << osbop_cli::run_reproduce(reproduce_options);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // usage error
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const osbop::BudgetError& e) {
    std::fprintf(stderr, "error: %s\nthe stochastic `solve` command handles spaces this "
                         "large\n", e.what());
    return 3;
  } catch (const osbop::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}
