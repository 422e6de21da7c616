#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "osbop/ensemble.hpp"
#include "osbop/enumeration.hpp"
#include "osbop/errors.hpp"
#include "osbop/exact.hpp"
#include "osbop/matrix_io.hpp"
#include "osbop/objective.hpp"
#include "osbop/preflib.hpp"
#include "osbop/sls.hpp"

#include "reference_tables.hpp"

namespace osbop_cli {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw osbop::ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Canonical report form of a solver ensemble: duplicates merged, largest
/// weight first, zero weights flagged rather than dropped.
EnsembleText describe(const osbop::WeightedEnsemble& ensemble) {
  const osbop::WeightedEnsemble merged = osbop::canonicalized(ensemble);
  EnsembleText text;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    text.members.emplace_back(osbop::format_bucket_order(merged.orders()[k]),
                              merged.weights()[k]);
    if (merged.weights()[k] <= 1e-12) text.degenerate_weights = true;
  }
  return text;
}

/// Reports must re-evaluate to the fitness they claim.
void self_verify(const EnsembleText& text, const osbop::PairOrderMatrix& c,
                 double claimed) {
  std::vector<osbop::BucketOrder> orders;
  std::vector<double> weights;
  for (const auto& [member, weight] : text.members) {
    orders.push_back(osbop::parse_bucket_order(member, c.item_count()));
    weights.push_back(weight);
  }
  const double again =
      osbop::fitness(osbop::WeightedEnsemble(std::move(orders), std::move(weights)), c);
  if (std::abs(again - claimed) > 1e-9)
    throw std::logic_error("report self-verification failed: " + format_full(claimed) +
                           " vs " + format_full(again));
}

int worker_count(int requested, std::size_t jobs) {
  if (requested > 0) return requested;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<int>(std::min<std::size_t>(jobs, hw));
}

/// Runs one solver per seed on a bounded pool; results keep seed order.
std::vector<osbop::SlsResult> run_seeds(const osbop::PairOrderMatrix& c,
                                        const osbop::SlsConfig& base,
                                        const std::vector<std::uint64_t>& seeds,
                                        int threads) {
  std::vector<osbop::SlsResult> results;
  results.reserve(seeds.size());
  const std::size_t wave = static_cast<std::size_t>(worker_count(threads, seeds.size()));
  for (std::size_t start = 0; start < seeds.size(); start += wave) {
    const std::size_t end = std::min(seeds.size(), start + wave);
    std::vector<std::future<osbop::SlsResult>> futures;
    futures.reserve(end - start);
    for (std::size_t i = start; i < end; ++i) {
      osbop::SlsConfig config = base;
      config.seed = seeds[i];
      futures.push_back(std::async(std::launch::async,
                                   [&c, config] { return osbop::sls_osbop(c, config); }));
    }
    for (auto& future : futures) results.push_back(future.get());
  }
  return results;
}

}  // namespace

osbop::PairOrderMatrix load_input(const InputSpec& input, InputEcho& echo) {
  const bool has_matrix = !input.matrix_file.empty();
  const bool has_preflib = !input.preflib_file.empty();
  if (has_matrix == has_preflib)
    throw UsageError("exactly one of --input and --preflib is required");

  if (has_matrix) {
    echo.file = input.matrix_file;
    echo.format = "matrix";
    osbop::PairOrderMatrix c = osbop::read_matrix(read_file(input.matrix_file));
    echo.n = c.item_count();
    return c;
  }
  echo.file = input.preflib_file;
  echo.format = "preflib";
  const osbop::Profile profile =
      osbop::parse_preflib(read_file(input.preflib_file), input.preflib_file);
  for (const std::string& warning : profile.warnings)
    std::fprintf(stderr, "warning: %s: %s\n", input.preflib_file.c_str(), warning.c_str());
  osbop::PairOrderMatrix c = osbop::build_matrix(profile);
  echo.n = c.item_count();
  return c;
}

SolveReport run_solve(const SolveOptions& options) {
  if (options.variant != "obop" && options.variant != "osbop-e" &&
      options.variant != "osbop")
    throw UsageError("unknown variant '" + options.variant + "'");
  if (options.variant == "obop" && options.b != 1)
    throw UsageError("variant obop solves a single ranking; drop --b or use osbop/osbop-e");
  if (options.b < 1) throw UsageError("--b must be positive");
  if (options.iters < 0) throw UsageError("--iters must be >= 0");
  if (options.tune_iters < 0) throw UsageError("--tune-iters must be >= 0");
  if (options.seeds.empty()) throw UsageError("at least one --seed is required");

  SolveReport report;
  const osbop::PairOrderMatrix c = load_input(options.input, report.input);
  report.variant = options.variant;
  report.b = options.b;
  report.iters = options.iters;
  report.tune_iters = options.tune_iters;
  report.threads = worker_count(options.threads, options.seeds.size());
  report.u_c = osbop::utopia(c, 1).value;
  report.u_c_b = osbop::utopia(c, options.b).value;

  osbop::SlsConfig base;
  base.b = options.b;
  base.equal_weights = options.variant != "osbop";
  base.outer_iters = options.iters;
  base.tune_iters = options.tune_iters;

  const auto start = Clock::now();
  const std::vector<osbop::SlsResult> runs =
      run_seeds(c, base, options.seeds, options.threads);
  report.wall_ms = elapsed_ms(start);

  for (std::size_t i = 0; i < runs.size(); ++i) {
    SolveReport::PerSeed per_seed;
    per_seed.seed = options.seeds[i];
    per_seed.fitness = runs[i].fitness;
    per_seed.ensemble = describe(runs[i].ensemble);
    self_verify(per_seed.ensemble, c, per_seed.fitness);
    report.results.push_back(std::move(per_seed));
  }

  report.best_index = 0;
  for (std::size_t i = 1; i < report.results.size(); ++i)
    if (report.results[i].fitness < report.results[report.best_index].fitness)
      report.best_index = i;
  report.w1 = report.results[report.best_index].ensemble.members.front().second;

  if (!options.trace_csv.empty()) {
    std::ofstream out(options.trace_csv);
    if (!out) throw osbop::ParseError("cannot write '" + options.trace_csv + "'");
    out << osbop::trace_to_csv(runs[report.best_index].trace);
  }
  return report;
}

ExactReport run_exact(const ExactCmdOptions& options) {
  if (options.b < 1) throw UsageError("--b must be positive");

  ExactReport report;
  const osbop::PairOrderMatrix c = load_input(options.input, report.input);
  report.variant = options.b == 1 ? "obop" : "osbop-e";
  report.b = options.b;
  report.budget = options.budget;
  report.u_c = osbop::utopia(c, 1).value;
  report.u_c_b = osbop::utopia(c, options.b).value;

  osbop::ExactOptions exact_options;
  exact_options.budget = options.budget;

  const auto start = Clock::now();
  const osbop::ExactResult result = osbop::exact_osbop_equal(c, options.b, exact_options);
  report.wall_ms = elapsed_ms(start);

  report.optimum = result.optimum;
  report.explored = result.explored;
  for (const auto& set : result.solutions) {
    std::vector<std::string> texts;
    texts.reserve(set.size());
    for (const auto& order : set) texts.push_back(osbop::format_bucket_order(order));
    report.solutions.push_back(std::move(texts));

    const double again = osbop::fitness(osbop::equal_weight_ensemble(set), c);
    if (std::abs(again - result.optimum) > 1e-9)
      throw std::logic_error("exact solution failed re-evaluation");
  }
  return report;
}

UtopiaCmdReport run_utopia(const UtopiaCmdOptions& options) {
  if (options.b_lo < 1 || options.b_hi < options.b_lo)
    throw UsageError("bad b range");

  UtopiaCmdReport report;
  const osbop::PairOrderMatrix c = load_input(options.input, report.input);

  const auto start = Clock::now();
  for (int b = options.b_lo; b <= options.b_hi; ++b) {
    const osbop::UtopiaReport utopia = osbop::utopia(c, b);
    UtopiaCmdReport::PerB per_b;
    per_b.b = b;
    per_b.value = utopia.value;
    per_b.feasible_bucket_matrix = osbop::BucketMatrix::try_from(utopia.matrix).has_value();
    for (osbop::Item u = 1; u <= c.item_count(); ++u) {
      std::vector<double> row;
      for (osbop::Item v = 1; v <= c.item_count(); ++v)
        row.push_back(utopia.matrix.at(u, v));
      per_b.matrix.push_back(std::move(row));
    }
    report.reports.push_back(std::move(per_b));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

std::string run_space(const SpaceOptions& options) {
  if (options.n_lo < 1 || options.n_hi < options.n_lo) throw UsageError("bad n range");
  if (options.b_lo < 1 || options.b_hi < options.b_lo) throw UsageError("bad b range");
  if (options.strict && (options.b_lo != 1 || options.b_hi != 1))
    throw UsageError("--strict is defined for b = 1 only");

  std::string out = "n,b,count,strict_count\n";
  for (int n = options.n_lo; n <= options.n_hi; ++n) {
    for (int b = options.b_lo; b <= options.b_hi; ++b) {
      const osbop::SpaceSize size = osbop::space_size(n, b, options.strict);
      out += std::to_string(n) + "," + std::to_string(b) + "," + size.count.str() + ",";
      if (b == 1) out += osbop::factorial(n).str();
      out += "\n";
    }
  }
  return out;
}

namespace {

struct ReproduceCell {
  double computed = 0.0;
  bool available = false;
};

std::string cell(const ReproduceCell& value, double reference) {
  char buffer[96];
  if (!value.available) return "-/" + format_full(reference);
  std::snprintf(buffer, sizeof(buffer), "%.4f/%.4f (d=%.4f)", value.computed, reference,
                std::abs(value.computed - reference));
  return buffer;
}

}  // namespace

std::string run_reproduce(const ReproduceOptions& options) {
  namespace fs = std::filesystem;
  if (options.data_dir.empty()) throw UsageError("--data-dir is required");

  std::vector<std::uint64_t> seeds;
  for (int s = 1; s <= options.seed_count; ++s)
    seeds.push_back(static_cast<std::uint64_t>(s));

  std::ostringstream out;
  out << "id      n   u_C                      u_C^2                    OBOP            "
         "         OSBOP2e                  OSBOP2                   w1\n";

  for (const ReferenceRow& row : kReferenceRows) {
    const char* extensions[] = {".toi", ".toc", ".soi", ".soc", ".csv"};
    std::string file;
    for (const char* ext : extensions) {
      const fs::path candidate = fs::path(options.data_dir) / (std::string(row.id) + ext);
      if (fs::exists(candidate)) {
        file = candidate.string();
        break;
      }
    }
    if (file.empty()) {
      out << row.id << "  (dataset file not found; expected " << row.id
          << ".{toi,toc,soi,soc,csv})\n";
      continue;
    }

    InputSpec input;
    InputEcho echo;
    if (file.size() >= 4 && file.substr(file.size() - 4) == ".csv")
      input.matrix_file = file;
    else
      input.preflib_file = file;
    const osbop::PairOrderMatrix c = load_input(input, echo);

    ReproduceCell u_c{osbop::utopia(c, 1).value, true};
    ReproduceCell u_c2{osbop::utopia(c, 2).value, true};

    osbop::ExactOptions exact_options;
    exact_options.budget = options.budget;

    ReproduceCell obop;
    if (osbop::fubini(c.item_count()) <= osbop::BigInt(options.budget)) {
      obop = {osbop::exact_obop(c, exact_options).optimum, true};
    } else {
      osbop::SlsConfig config;
      config.b = 1;
      config.outer_iters = options.iters;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& run : run_seeds(c, config, seeds, options.threads))
        best = std::min(best, run.fitness);
      obop = {best, true};
    }

    ReproduceCell osbop2_e;
    if (osbop::binomial(osbop::fubini(c.item_count()), 2) <= osbop::BigInt(options.budget)) {
      osbop2_e = {osbop::exact_osbop_equal(c, 2, exact_options).optimum, true};
    } else {
      osbop::SlsConfig config;
      config.b = 2;
      config.outer_iters = options.iters;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& run : run_seeds(c, config, seeds, options.threads))
        best = std::min(best, run.fitness);
      osbop2_e = {best, true};
    }

    osbop::SlsConfig tuned;
    tuned.b = 2;
    tuned.equal_weights = false;
    tuned.outer_iters = options.iters;
    tuned.tune_iters = options.tune_iters;
    double best_fitness = std::numeric_limits<double>::infinity();
    double best_w1 = 1.0;
    for (const auto& run : run_seeds(c, tuned, seeds, options.threads)) {
      if (run.fitness < best_fitness) {
        best_fitness = run.fitness;
        best_w1 = describe(run.ensemble).members.front().second;
      }
    }

    out << row.id << "  " << echo.n << "  " << cell(u_c, row.u_c) << "  "
        << cell(u_c2, row.u_c2) << "  " << cell(obop, row.obop)
        << (row.exact_small ? " " : "~") << "  " << cell(osbop2_e, row.osbop2_e)
        << (row.exact_small ? " " : "~") << "  "
        << cell({best_fitness, true}, row.osbop2) << "~  "
        << cell({best_w1, true}, row.w1) << "~\n";
  }
  out << "(~ marks stochastic best-found references, not exact targets)\n";
  return out.str();
}

}  // namespace osbop_cli
