#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace osbop_cli {

/// Thrown for invalid flag combinations and malformed flag values (exit 1).
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct InputEcho {
  std::string file;
  std::string format;  // "matrix" | "preflib"
  int n = 0;
};

struct EnsembleText {
  std::vector<std::pair<std::string, double>> members;  // order text, weight; w1 first
  bool degenerate_weights = false;                      // some weight collapsed to 0
};

struct SolveReport {
  InputEcho input;
  std::string variant;
  int b = 1;
  long iters = 0;
  int tune_iters = 0;
  int threads = 1;
  double u_c = 0.0;
  double u_c_b = 0.0;
  struct PerSeed {
    std::uint64_t seed = 0;
    double fitness = 0.0;
    EnsembleText ensemble;
  };
  std::vector<PerSeed> results;
  std::size_t best_index = 0;
  double w1 = 1.0;
  double wall_ms = 0.0;
};

struct ExactReport {
  InputEcho input;
  std::string variant;  // "obop" for b = 1, "osbop-e" otherwise
  int b = 1;
  std::uint64_t budget = 0;
  std::uint64_t explored = 0;
  double u_c = 0.0;
  double u_c_b = 0.0;
  double optimum = 0.0;
  std::vector<std::vector<std::string>> solutions;
  double wall_ms = 0.0;
};

struct UtopiaCmdReport {
  InputEcho input;
  struct PerB {
    int b = 1;
    double value = 0.0;
    bool feasible_bucket_matrix = false;
    std::vector<std::vector<double>> matrix;  // row major
  };
  std::vector<PerB> reports;
  double wall_ms = 0.0;
};

std::string format_full(double x);  // %.17g

nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const ExactReport& report);
nlohmann::json to_json(const UtopiaCmdReport& report);

std::string to_csv(const SolveReport& report);
std::string to_csv(const ExactReport& report);
std::string to_csv(const UtopiaCmdReport& report);

// Human-readable summaries; fitness printed at four decimals.
std::string to_text(const SolveReport& report);
std::string to_text(const ExactReport& report);
std::string to_text(const UtopiaCmdReport& report);

}  // namespace osbop_cli
