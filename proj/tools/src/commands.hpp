#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osbop/matrix.hpp"

#include "report.hpp"

namespace osbop_cli {

struct InputSpec {
  std::string matrix_file;
  std::string preflib_file;
};

/// Reads and validates the input matrix; fills the echo for reports.
osbop::PairOrderMatrix load_input(const InputSpec& input, InputEcho& echo);

struct SolveOptions {
  InputSpec input;
  std::string variant = "obop";  // obop | osbop-e | osbop
  int b = 1;
  long iters = 10000;
  int tune_iters = 100;
  std::vector<std::uint64_t> seeds{1};
  int threads = 0;        // 0 = one worker per seed, capped by the hardware
  std::string trace_csv;  // optional: write the best seed's trace here
};
SolveReport run_solve(const SolveOptions& options);

struct ExactCmdOptions {
  InputSpec input;
  int b = 1;
  std::uint64_t budget = 10'000'000;
};
ExactReport run_exact(const ExactCmdOptions& options);

struct UtopiaCmdOptions {
  InputSpec input;
  int b_lo = 1;
  int b_hi = 1;
};
UtopiaCmdReport run_utopia(const UtopiaCmdOptions& options);

struct SpaceOptions {
  int n_lo = 2;
  int n_hi = 10;
  int b_lo = 1;
  int b_hi = 4;
  bool strict = false;
};
/// CSV table "n,b,count,strict_count" (arbitrary precision).
std::string run_space(const SpaceOptions& options);

struct ReproduceOptions {
  std::string data_dir;
  long iters = 10000;
  int tune_iters = 100;
  int seed_count = 20;
  std::uint64_t budget = 10'000'000;
  int threads = 0;
};
/// Text table of computed vs bundled reference values per dataset id.
std::string run_reproduce(const ReproduceOptions& options);

}  // namespace osbop_cli
