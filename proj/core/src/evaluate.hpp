#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "osbop/bucket_order.hpp"
#include "osbop/matrix.hpp"

namespace osbop::detail {

/// Fitness kernel for the search loops: reproduces aggregate() followed by
/// distance() with the same operation order, but into a reused buffer, so hot
/// paths get bit-identical values without per-candidate allocation.
class EnsembleEvaluator {
public:
  explicit EnsembleEvaluator(const PairOrderMatrix& c)
      : n_(c.item_count()),
        c_(&c),
        scratch_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), 0.5) {}

  double operator()(const std::vector<BucketOrder>& orders,
                    const std::vector<double>& weights) {
    fill_aggregate(
        [&](std::size_t k, Item u, Item v) { return compare(orders[k], u, v); },
        orders.size(), [&](std::size_t k) { return weights[k]; });
    return l1_to_input();
  }

  /// Equal-weight fitness of pool members selected by ascending index.
  double equal_weight(const std::vector<BucketOrder>& pool,
                      const std::vector<std::size_t>& subset, double weight) {
    fill_aggregate(
        [&](std::size_t k, Item u, Item v) { return compare(pool[subset[k]], u, v); },
        subset.size(), [&](std::size_t) { return weight; });
    return l1_to_input();
  }

private:
  static double compare(const BucketOrder& order, Item u, Item v) {
    const int pu = order.bucket_of(u);
    const int pv = order.bucket_of(v);
    return pu < pv ? 1.0 : (pu > pv ? 0.0 : 0.5);
  }

  template <typename EntryAt, typename WeightAt>
  void fill_aggregate(EntryAt&& entry_at, std::size_t b, WeightAt&& weight_at) {
    for (Item u = 1; u <= n_; ++u) {
      for (Item v = u + 1; v <= n_; ++v) {
        double x = 0.0;
        for (std::size_t k = 0; k < b; ++k) x += weight_at(k) * entry_at(k, u, v);
        x = std::clamp(x, 0.0, 1.0);
        cell(u, v) = x;
        cell(v, u) = 1.0 - x;
      }
    }
  }

  double l1_to_input() const {
    const auto& target = c_->entries();
    double d = 0.0;
    for (std::size_t i = 0; i < scratch_.size(); ++i)
      d += std::abs(scratch_[i] - target[i]);
    return d;
  }

  double& cell(Item u, Item v) {
    return scratch_[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(v - 1)];
  }

  int n_;
  const PairOrderMatrix* c_;
  std::vector<double> scratch_;
};

}  // namespace osbop::detail
