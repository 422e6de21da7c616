#pragma once

#include <vector>

#include "osbop/bucket_order.hpp"
#include "osbop/matrix.hpp"

namespace osbop {

/// b bucket orders over the same item set plus a weight vector on the simplex.
/// Duplicate orders are allowed (they arise during search); canonicalized()
/// merges them for reporting. Immutable after construction.
class WeightedEnsemble {
public:
  static constexpr double kWeightSumTolerance = 1e-9;

  /// Throws ValidationError unless sizes match, all orders share one item
  /// count, every weight lies in [0,1] and the weights sum to 1 within 1e-9.
  WeightedEnsemble(std::vector<BucketOrder> orders, std::vector<double> weights);

  std::size_t size() const { return orders_.size(); }  // b
  int item_count() const { return orders_.front().item_count(); }
  const std::vector<BucketOrder>& orders() const { return orders_; }
  const std::vector<double>& weights() const { return weights_; }

  friend bool operator==(const WeightedEnsemble&, const WeightedEnsemble&) = default;

private:
  std::vector<BucketOrder> orders_;
  std::vector<double> weights_;
};

/// Equal-weight ensemble (1/b each) over the given orders.
WeightedEnsemble equal_weight_ensemble(std::vector<BucketOrder> orders);

/// Weighted combination of the member bucket matrices. The upper triangle is
/// the weighted sum and the lower triangle its complement, so the result is
/// exactly complementary.
PairOrderMatrix aggregate(const WeightedEnsemble& ensemble);

/// Reporting form: duplicate orders merged with their weights summed, members
/// sorted by descending weight (ties by text form). Leaves the aggregate
/// matrix unchanged.
WeightedEnsemble canonicalized(const WeightedEnsemble& ensemble);

}  // namespace osbop
