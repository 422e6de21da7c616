#include "osbop/exact.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "osbop/enumeration.hpp"
#include "osbop/errors.hpp"
#include "osbop/objective.hpp"

#include "evaluate.hpp"

namespace osbop {

namespace {

void check_budget(const BigInt& candidates, std::uint64_t budget) {
  if (candidates > BigInt(budget))
    throw BudgetError("exhaustive search needs " + candidates.str() +
                      " evaluations, budget is " + std::to_string(budget));
}

/// Near-optimal candidates collected during the scan; entries that fall more
/// than the tie tolerance behind the incumbent are dropped lazily, and the
/// final filter runs against the true optimum.
template <typename Candidate>
class TieCollector {
public:
  void offer(double f, const Candidate& candidate) {
    if (f > best_ + ExactResult::kTieTolerance) return;
    if (f < best_) best_ = f;
    near_.emplace_back(f, candidate);
    if (near_.size() >= prune_threshold_) {
      prune();
      prune_threshold_ = std::max<std::size_t>(kPruneSize, 2 * near_.size());
    }
  }

  double best() const { return best_; }

  std::vector<Candidate> winners() {
    prune();
    std::vector<Candidate> out;
    out.reserve(near_.size());
    for (auto& [f, candidate] : near_) out.push_back(std::move(candidate));
    return out;
  }

private:
  static constexpr std::size_t kPruneSize = 4096;

  void prune() {
    std::erase_if(near_, [&](const auto& entry) {
      return entry.first > best_ + ExactResult::kTieTolerance;
    });
  }

  double best_ = std::numeric_limits<double>::infinity();
  std::size_t prune_threshold_ = kPruneSize;
  std::vector<std::pair<double, Candidate>> near_;
};

std::vector<std::vector<BucketOrder>> sorted_solution_sets(
    std::vector<std::vector<BucketOrder>> sets) {
  std::vector<std::pair<std::vector<std::string>, std::vector<BucketOrder>>> keyed;
  keyed.reserve(sets.size());
  for (auto& set : sets) {
    std::sort(set.begin(), set.end(), [](const BucketOrder& a, const BucketOrder& b) {
      return format_bucket_order(a) < format_bucket_order(b);
    });
    std::vector<std::string> key;
    key.reserve(set.size());
    for (const auto& order : set) key.push_back(format_bucket_order(order));
    keyed.emplace_back(std::move(key), std::move(set));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::vector<BucketOrder>> out;
  out.reserve(keyed.size());
  for (auto& [key, set] : keyed) out.push_back(std::move(set));
  return out;
}

}  // namespace

ExactResult exact_obop(const PairOrderMatrix& c, const ExactOptions& options) {
  const int n = c.item_count();
  check_budget(fubini(n), options.budget);

  detail::EnsembleEvaluator evaluate(c);
  std::vector<BucketOrder> single;
  const std::vector<double> unit{1.0};

  TieCollector<BucketOrder> ties;
  std::uint64_t explored = 0;
  for_each_bucket_order(n, [&](const BucketOrder& order) {
    single.assign(1, order);
    const double f = evaluate(single, unit);
    ++explored;
    ties.offer(f, order);
  });

  ExactResult result;
  result.optimum = ties.best();
  result.explored = explored;
  std::vector<std::vector<BucketOrder>> sets;
  for (auto& order : ties.winners()) sets.push_back({std::move(order)});
  result.solutions = sorted_solution_sets(std::move(sets));
  return result;
}

ExactResult exact_osbop_equal(const PairOrderMatrix& c, int b,
                              const ExactOptions& options) {
  if (b < 1) throw ValidationError("ensemble size b must be positive");
  if (b == 1) return exact_obop(c, options);

  const int n = c.item_count();
  const BigInt space = fubini(n);
  if (space < b)
    throw ValidationError("only " + space.str() + " distinct bucket orders exist for " +
                          std::to_string(n) + " items, cannot pick " + std::to_string(b));
  check_budget(binomial(space, b), options.budget);

  const std::vector<BucketOrder> pool = enumerate_bucket_orders(n);
  const double weight = 1.0 / static_cast<double>(b);
  detail::EnsembleEvaluator evaluate(c);

  // Unordered subsets as ascending index vectors, advanced lexicographically.
  std::vector<std::size_t> subset(static_cast<std::size_t>(b));
  for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = i;

  TieCollector<std::vector<std::size_t>> ties;
  std::uint64_t explored = 0;
  while (true) {
    const double f = evaluate.equal_weight(pool, subset, weight);
    ++explored;
    ties.offer(f, subset);

    // Advance to the next combination: bump the rightmost index with room.
    int i = b - 1;
    while (i >= 0 &&
           subset[static_cast<std::size_t>(i)] ==
               pool.size() - subset.size() + static_cast<std::size_t>(i))
      --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < subset.size(); ++j)
      subset[j] = subset[j - 1] + 1;
  }

  ExactResult result;
  result.optimum = ties.best();
  result.explored = explored;
  std::vector<std::vector<BucketOrder>> sets;
  for (const auto& indices : ties.winners()) {
    std::vector<BucketOrder> set;
    set.reserve(indices.size());
    for (std::size_t idx : indices) set.push_back(pool[idx]);
    sets.push_back(std::move(set));
  }
  result.solutions = sorted_solution_sets(std::move(sets));
  return result;
}

}  // namespace osbop
