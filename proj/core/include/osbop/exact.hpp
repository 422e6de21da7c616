#pragma once

#include <cstdint>
#include <vector>

#include "osbop/bucket_order.hpp"
#include "osbop/matrix.hpp"

namespace osbop {

struct ExactOptions {
  /// Largest number of candidate evaluations an exact call may attempt;
  /// BudgetError is thrown up front when the space is bigger.
  std::uint64_t budget = 10'000'000;
};

/// Outcome of an exhaustive search: the global optimum, every candidate
/// attaining it and the number of candidates evaluated. Each solution is a
/// set of equal-weight bucket orders (a single order when b = 1), members
/// sorted by text form and the sets sorted lexicographically, so tie lists
/// are reproducible.
struct ExactResult {
  static constexpr double kTieTolerance = 1e-12;

  double optimum = 0.0;
  std::vector<std::vector<BucketOrder>> solutions;
  std::uint64_t explored = 0;
};

/// Minimizes distance(to_matrix(x), c) over all fubini(n) bucket orders.
ExactResult exact_obop(const PairOrderMatrix& c, const ExactOptions& options = {});

/// Minimizes fitness over every unordered b-subset of distinct bucket orders
/// taken with weights 1/b. b = 1 is exactly exact_obop.
ExactResult exact_osbop_equal(const PairOrderMatrix& c, int b,
                              const ExactOptions& options = {});

}  // namespace osbop
