#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osbop/ensemble.hpp"
#include "osbop/matrix.hpp"
#include "osbop/random.hpp"

namespace osbop {

/// The seven neighborhood moves on a bucket order.
enum class MutationKind {
  kBucketInsertion,    // move one bucket to a different position
  kBucketsInterchange, // swap two buckets
  kBucketInversion,    // reverse a chain of >= 2 consecutive buckets
  kBucketUnion,        // join two consecutive buckets
  kBucketDivision,     // split a bucket with >= 2 items into two consecutive ones
  kItemInsertion,      // move one item into another bucket or a new singleton
  kItemInterchange,    // swap one item between two buckets
};

const char* to_string(MutationKind kind);

/// Kinds that can be applied to the given order (and can change it), in enum
/// order. Empty only for the single-item order.
std::vector<MutationKind> applicable_mutations(const BucketOrder& order);

/// One application of `kind`. Throws ValidationError when the kind is not
/// applicable to this order.
BucketOrder mutate_order(const BucketOrder& order, MutationKind kind, Rng& rng);

/// Mutates a random selection of members: the count is uniform on {1..b},
/// the members are drawn without replacement, and each selected member gets
/// one uniformly chosen applicable mutation. Weights are carried over
/// unchanged (the solver resets them to 1/b separately).
WeightedEnsemble mutate_solution(const WeightedEnsemble& ensemble, Rng& rng);

/// b bucket orders sampled independently and uniformly over all ordered
/// partitions of {1..n}, with weights 1/b. Uniformity comes from a two-step
/// scheme: the bucket count is drawn with probability Surj(n,k)/F(n), then a
/// uniform surjection onto that many blocks is built item by item from exact
/// extension counts.
WeightedEnsemble initial_solution(int item_count, int b, Rng& rng);

struct TunedWeights {
  double fitness = 0.0;
  std::vector<double> weights;
};

/// Randomized coordinate search on the weight simplex: tune_iters proposals,
/// each adding r ~ U[-0.5, 0.5] to one weight (clamped to [0,1]) and rescaling
/// the remaining weights proportionally so the total stays 1; a proposal is
/// kept only when the fitness strictly improves. With b = 1 the simplex is a
/// point and the input is returned unchanged.
TunedWeights tune_weights(const PairOrderMatrix& c, const WeightedEnsemble& ensemble,
                          int tune_iters, Rng& rng);

struct SlsConfig {
  int b = 1;
  bool equal_weights = true;      // Eq: fixed 1/b weights vs tuned weights
  long outer_iters = 10000;       // t1
  int tune_iters = 100;           // t2
  std::uint64_t seed = 0;
  std::uint64_t max_evaluations = 0;  // optional safety cap; 0 = unlimited
};

struct SlsTrace {
  struct Point {
    long iteration;       // 0 is the initial solution
    double best_fitness;  // incumbent fitness after this iteration
  };
  std::vector<Point> points;
  std::uint64_t accepted_moves = 0;
  std::uint64_t evaluations = 0;
};

struct SlsResult {
  WeightedEnsemble ensemble;
  double fitness = 0.0;
  SlsTrace trace;
};

/// Stochastic local search over ensembles of b bucket orders: random initial
/// solution with weights 1/b, then outer_iters rounds of mutate / reset
/// weights / (optionally) tune / accept-if-not-worse. The incumbent fitness
/// never increases. Fully deterministic given (c, config).
SlsResult sls_osbop(const PairOrderMatrix& c, const SlsConfig& config);

/// "iteration,best_fitness" CSV (with header) for convergence plots.
std::string trace_to_csv(const SlsTrace& trace);

}  // namespace osbop
