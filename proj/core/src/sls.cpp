#include "osbop/sls.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "osbop/enumeration.hpp"
#include "osbop/errors.hpp"

#include "evaluate.hpp"

namespace osbop {

const char* to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::kBucketInsertion: return "bucket-insertion";
    case MutationKind::kBucketsInterchange: return "buckets-interchange";
    case MutationKind::kBucketInversion: return "bucket-inversion";
    case MutationKind::kBucketUnion: return "bucket-union";
    case MutationKind::kBucketDivision: return "bucket-division";
    case MutationKind::kItemInsertion: return "item-insertion";
    case MutationKind::kItemInterchange: return "item-interchange";
  }
  return "unknown";
}

std::vector<MutationKind> applicable_mutations(const BucketOrder& order) {
  const bool several_buckets = order.bucket_count() >= 2;
  const bool divisible = std::any_of(order.buckets().begin(), order.buckets().end(),
                                     [](const auto& bucket) { return bucket.size() >= 2; });
  const bool several_items = order.item_count() >= 2;

  std::vector<MutationKind> kinds;
  if (several_buckets) kinds.push_back(MutationKind::kBucketInsertion);
  if (several_buckets) kinds.push_back(MutationKind::kBucketsInterchange);
  if (several_buckets) kinds.push_back(MutationKind::kBucketInversion);
  if (several_buckets) kinds.push_back(MutationKind::kBucketUnion);
  if (divisible) kinds.push_back(MutationKind::kBucketDivision);
  if (several_items) kinds.push_back(MutationKind::kItemInsertion);
  if (several_buckets) kinds.push_back(MutationKind::kItemInterchange);
  return kinds;
}

namespace {

/// Two distinct indices in [0, k); the second is drawn from the k-1 others.
std::pair<std::size_t, std::size_t> two_distinct(Rng& rng, std::size_t k) {
  const std::size_t first = uniform_index(rng, k);
  std::size_t second = uniform_index(rng, k - 1);
  if (second >= first) ++second;
  return {first, second};
}

void require(bool applicable, MutationKind kind, const BucketOrder& order) {
  if (!applicable)
    throw ValidationError(std::string(to_string(kind)) + " not applicable to '" +
                          format_bucket_order(order) + "'");
}

}  // namespace

BucketOrder mutate_order(const BucketOrder& order, MutationKind kind, Rng& rng) {
  auto buckets = order.buckets();
  const std::size_t k = buckets.size();

  switch (kind) {
    case MutationKind::kBucketInsertion: {
      require(k >= 2, kind, order);
      const auto [src, dst] = two_distinct(rng, k);
      auto bucket = std::move(buckets[src]);
      buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(src));
      buckets.insert(buckets.begin() + static_cast<std::ptrdiff_t>(dst), std::move(bucket));
      break;
    }
    case MutationKind::kBucketsInterchange: {
      require(k >= 2, kind, order);
      const auto [i, j] = two_distinct(rng, k);
      std::swap(buckets[i], buckets[j]);
      break;
    }
    case MutationKind::kBucketInversion: {
      require(k >= 2, kind, order);
      auto [lo, hi] = two_distinct(rng, k);
      if (lo > hi) std::swap(lo, hi);
      std::reverse(buckets.begin() + static_cast<std::ptrdiff_t>(lo),
                   buckets.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
      break;
    }
    case MutationKind::kBucketUnion: {
      require(k >= 2, kind, order);
      const std::size_t i = uniform_index(rng, k - 1);
      auto& left = buckets[i];
      auto& right = buckets[i + 1];
      left.insert(left.end(), right.begin(), right.end());
      buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      break;
    }
    case MutationKind::kBucketDivision: {
      std::vector<std::size_t> eligible;
      for (std::size_t i = 0; i < k; ++i)
        if (buckets[i].size() >= 2) eligible.push_back(i);
      require(!eligible.empty(), kind, order);
      const std::size_t i = eligible[uniform_index(rng, eligible.size())];

      std::vector<Item> first, second;
      do {
        first.clear();
        second.clear();
        for (Item u : buckets[i]) (uniform_index(rng, 2) == 0 ? first : second).push_back(u);
      } while (first.empty() || second.empty());
      buckets[i] = std::move(first);
      buckets.insert(buckets.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(second));
      break;
    }
    case MutationKind::kItemInsertion: {
      require(order.item_count() >= 2, kind, order);
      const std::size_t src = uniform_index(rng, k);
      const std::size_t at = uniform_index(rng, buckets[src].size());
      const Item item = buckets[src][at];
      buckets[src].erase(buckets[src].begin() + static_cast<std::ptrdiff_t>(at));
      if (buckets[src].empty()) buckets.erase(buckets.begin() + static_cast<std::ptrdiff_t>(src));

      if (uniform_index(rng, 2) == 0) {
        buckets[uniform_index(rng, buckets.size())].push_back(item);
      } else {
        const std::size_t pos = uniform_index(rng, buckets.size() + 1);
        buckets.insert(buckets.begin() + static_cast<std::ptrdiff_t>(pos),
                       std::vector<Item>{item});
      }
      break;
    }
    case MutationKind::kItemInterchange: {
      require(k >= 2, kind, order);
      const auto [a, b] = two_distinct(rng, k);
      const std::size_t ia = uniform_index(rng, buckets[a].size());
      const std::size_t ib = uniform_index(rng, buckets[b].size());
      std::swap(buckets[a][ia], buckets[b][ib]);
      break;
    }
  }
  return BucketOrder(order.item_count(), std::move(buckets));
}

namespace {

std::vector<BucketOrder> mutate_orders(const std::vector<BucketOrder>& orders, Rng& rng) {
  const std::size_t b = orders.size();
  const std::size_t count = 1 + uniform_index(rng, b);

  std::vector<std::size_t> indices(b);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  for (std::size_t t = 0; t < count; ++t)
    std::swap(indices[t], indices[t + uniform_index(rng, b - t)]);
  indices.resize(count);
  std::sort(indices.begin(), indices.end());

  std::vector<BucketOrder> mutated = orders;
  for (std::size_t i : indices) {
    const auto kinds = applicable_mutations(mutated[i]);
    if (kinds.empty()) continue;  // single-item order: nothing can change
    const MutationKind kind = kinds[uniform_index(rng, kinds.size())];
    mutated[i] = mutate_order(mutated[i], kind, rng);
  }
  return mutated;
}

double big_ratio(const BigInt& numerator, const BigInt& denominator) {
  using BigFloat = boost::multiprecision::cpp_bin_float_50;
  return (BigFloat(numerator) / BigFloat(denominator)).convert_to<double>();
}

/// surj[m][j] = number of surjections of m labeled items onto j labeled blocks.
std::vector<std::vector<BigInt>> surjection_table(int n) {
  std::vector<std::vector<BigInt>> surj(
      static_cast<std::size_t>(n) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
  surj[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= m; ++j)
      surj[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          j * (surj[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)] +
               surj[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)]);
  return surj;
}

/// Uniform over all ordered partitions: the bucket count k is drawn with
/// probability surj(n,k)/F(n), then a uniform surjection onto k blocks is
/// grown item by item from exact extension counts.
BucketOrder sample_bucket_order(int n, Rng& rng,
                                const std::vector<std::vector<BigInt>>& surj,
                                const BigInt& total) {
  int k = n;
  {
    const double u = uniform_real01(rng);
    double cum = 0.0;
    for (int j = 1; j <= n; ++j) {
      cum += big_ratio(surj[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)], total);
      if (u < cum) {
        k = j;
        break;
      }
    }
  }

  // W[m][j]: completions when m items remain and j of the k blocks are empty.
  std::vector<std::vector<BigInt>> W(
      static_cast<std::size_t>(n) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(k) + 1));
  W[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 0; j <= k; ++j) {
      BigInt ways = (k - j) * W[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)];
      if (j > 0)
        ways += j * W[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j - 1)];
      W[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] = ways;
    }

  std::vector<std::vector<Item>> blocks(static_cast<std::size_t>(k));
  int empty = k;
  for (Item item = 1; item <= n; ++item) {
    const int m = n - item + 1;
    bool open_new;
    if (empty == 0) {
      open_new = false;
    } else if (empty == k) {
      open_new = true;
    } else {
      const double p_new =
          big_ratio(empty * W[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(empty - 1)],
                    W[static_cast<std::size_t>(m)][static_cast<std::size_t>(empty)]);
      open_new = uniform_real01(rng) < p_new;
    }

    std::size_t target = 0;
    if (open_new) {
      std::size_t skip = uniform_index(rng, static_cast<std::size_t>(empty));
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if (blocks[i].empty() && skip-- == 0) {
          target = i;
          break;
        }
      --empty;
    } else {
      std::size_t skip = uniform_index(rng, static_cast<std::size_t>(k - empty));
      for (std::size_t i = 0; i < blocks.size(); ++i)
        if (!blocks[i].empty() && skip-- == 0) {
          target = i;
          break;
        }
    }
    blocks[target].push_back(item);
  }
  return BucketOrder(n, std::move(blocks));
}

}  // namespace

WeightedEnsemble mutate_solution(const WeightedEnsemble& ensemble, Rng& rng) {
  return WeightedEnsemble(mutate_orders(ensemble.orders(), rng), ensemble.weights());
}

WeightedEnsemble initial_solution(int item_count, int b, Rng& rng) {
  if (item_count < 1) throw ValidationError("initial_solution needs a positive item count");
  if (b < 1) throw ValidationError("initial_solution needs a positive ensemble size");

  const auto surj = surjection_table(item_count);
  BigInt total = 0;
  for (int j = 1; j <= item_count; ++j)
    total += surj[static_cast<std::size_t>(item_count)][static_cast<std::size_t>(j)];

  std::vector<BucketOrder> orders;
  orders.reserve(static_cast<std::size_t>(b));
  for (int i = 0; i < b; ++i)
    orders.push_back(sample_bucket_order(item_count, rng, surj, total));
  return equal_weight_ensemble(std::move(orders));
}

namespace {

struct TuneOutcome {
  double fitness;
  std::vector<double> weights;
};

TuneOutcome tune_impl(const std::vector<BucketOrder>& orders, std::vector<double> weights,
                      double current_fitness, int tune_iters, Rng& rng,
                      detail::EnsembleEvaluator& evaluate, std::uint64_t& evaluations) {
  const std::size_t b = weights.size();
  if (b == 1 || tune_iters <= 0) return {current_fitness, std::move(weights)};

  std::vector<double> trial(b);
  for (int it = 0; it < tune_iters; ++it) {
    const std::size_t i = uniform_index(rng, b);
    const double r = uniform_real(rng, -0.5, 0.5);
    const double moved = std::clamp(weights[i] + r, 0.0, 1.0);

    double others = 0.0;
    for (std::size_t j = 0; j < b; ++j)
      if (j != i) others += weights[j];

    if (others > 0.0) {
      const double factor = (1.0 - moved) / others;
      for (std::size_t j = 0; j < b; ++j) trial[j] = weights[j] * factor;
    } else {
      // The chosen weight held the whole mass; spread the rest evenly.
      const double share = (1.0 - moved) / static_cast<double>(b - 1);
      for (std::size_t j = 0; j < b; ++j) trial[j] = share;
    }
    trial[i] = moved;

    const double f = evaluate(orders, trial);
    ++evaluations;
    if (f < current_fitness) {
      current_fitness = f;
      weights = trial;
    }
  }
  return {current_fitness, std::move(weights)};
}

}  // namespace

TunedWeights tune_weights(const PairOrderMatrix& c, const WeightedEnsemble& ensemble,
                          int tune_iters, Rng& rng) {
  if (ensemble.item_count() != c.item_count())
    throw ValidationError("tune_weights: ensemble and matrix item counts differ");
  if (tune_iters < 0) throw ValidationError("tune_weights needs tune_iters >= 0");

  detail::EnsembleEvaluator evaluate(c);
  std::uint64_t evaluations = 0;
  const double f = evaluate(ensemble.orders(), ensemble.weights());
  auto outcome = tune_impl(ensemble.orders(), ensemble.weights(), f, tune_iters, rng,
                           evaluate, evaluations);
  return TunedWeights{outcome.fitness, std::move(outcome.weights)};
}

SlsResult sls_osbop(const PairOrderMatrix& c, const SlsConfig& config) {
  if (config.b < 1) throw ValidationError("sls_osbop needs b >= 1");
  if (config.outer_iters < 0) throw ValidationError("sls_osbop needs outer_iters >= 0");
  if (config.tune_iters < 0) throw ValidationError("sls_osbop needs tune_iters >= 0");

  Rng rng = make_rng(config.seed);
  detail::EnsembleEvaluator evaluate(c);
  SlsTrace trace;
  trace.points.reserve(static_cast<std::size_t>(config.outer_iters) + 1);

  const std::size_t b = static_cast<std::size_t>(config.b);
  const std::vector<double> reset_weights(b, 1.0 / static_cast<double>(config.b));

  std::vector<BucketOrder> current =
      initial_solution(c.item_count(), config.b, rng).orders();
  std::vector<double> weights = reset_weights;
  double f = evaluate(current, weights);
  ++trace.evaluations;
  if (!config.equal_weights) {
    auto tuned = tune_impl(current, weights, f, config.tune_iters, rng, evaluate,
                           trace.evaluations);
    f = tuned.fitness;
    weights = std::move(tuned.weights);
  }
  trace.points.push_back({0, f});

  for (long iter = 1; iter <= config.outer_iters; ++iter) {
    if (config.max_evaluations != 0 && trace.evaluations >= config.max_evaluations) break;

    std::vector<BucketOrder> candidate = mutate_orders(current, rng);
    std::vector<double> candidate_weights = reset_weights;
    double candidate_f = evaluate(candidate, candidate_weights);
    ++trace.evaluations;
    if (!config.equal_weights) {
      auto tuned = tune_impl(candidate, std::move(candidate_weights), candidate_f,
                             config.tune_iters, rng, evaluate, trace.evaluations);
      candidate_f = tuned.fitness;
      candidate_weights = std::move(tuned.weights);
    }

    if (candidate_f <= f) {  // equal fitness accepted to keep the walk moving
      current = std::move(candidate);
      weights = std::move(candidate_weights);
      f = candidate_f;
      ++trace.accepted_moves;
    }
    trace.points.push_back({iter, f});
  }

  return SlsResult{WeightedEnsemble(std::move(current), std::move(weights)), f,
                   std::move(trace)};
}

std::string trace_to_csv(const SlsTrace& trace) {
  std::string out = "iteration,best_fitness\n";
  char line[64];
  for (const auto& point : trace.points) {
    std::snprintf(line, sizeof(line), "%ld,%.17g\n", point.iteration, point.best_fitness);
    out += line;
  }
  return out;
}

}  // namespace osbop
