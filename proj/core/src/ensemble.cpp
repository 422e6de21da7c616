#include "osbop/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "osbop/errors.hpp"

namespace osbop {

WeightedEnsemble::WeightedEnsemble(std::vector<BucketOrder> orders,
                                   std::vector<double> weights)
    : orders_(std::move(orders)), weights_(std::move(weights)) {
  if (orders_.empty()) throw ValidationError("ensemble needs at least one bucket order");
  if (orders_.size() != weights_.size())
    throw ValidationError("ensemble has " + std::to_string(orders_.size()) +
                          " orders but " + std::to_string(weights_.size()) + " weights");
  const int n = orders_.front().item_count();
  for (const auto& order : orders_)
    if (order.item_count() != n)
      throw ValidationError("ensemble mixes item counts " + std::to_string(n) + " and " +
                            std::to_string(order.item_count()));
  double sum = 0.0;
  for (double w : weights_) {
    if (w < 0.0 || w > 1.0)
      throw ValidationError("weight " + std::to_string(w) + " outside [0,1]");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kWeightSumTolerance)
    throw ValidationError("weights sum to " + std::to_string(sum) + ", expected 1");
}

WeightedEnsemble equal_weight_ensemble(std::vector<BucketOrder> orders) {
  const std::size_t b = orders.size();
  std::vector<double> weights(b, 1.0 / static_cast<double>(b));
  return WeightedEnsemble(std::move(orders), std::move(weights));
}

PairOrderMatrix aggregate(const WeightedEnsemble& ensemble) {
  const int n = ensemble.item_count();
  const auto& orders = ensemble.orders();
  const auto& weights = ensemble.weights();

  std::vector<double> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.5);
  auto cell = [&](Item u, Item v) -> double& {
    return entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v - 1)];
  };
  for (Item u = 1; u <= n; ++u) {
    for (Item v = u + 1; v <= n; ++v) {
      double x = 0.0;
      for (std::size_t k = 0; k < orders.size(); ++k) {
        const int pu = orders[k].bucket_of(u);
        const int pv = orders[k].bucket_of(v);
        x += weights[k] * (pu < pv ? 1.0 : (pu > pv ? 0.0 : 0.5));
      }
      x = std::clamp(x, 0.0, 1.0);
      cell(u, v) = x;
      cell(v, u) = 1.0 - x;
    }
  }
  return PairOrderMatrix(n, std::move(entries));
}

WeightedEnsemble canonicalized(const WeightedEnsemble& ensemble) {
  std::map<std::string, std::pair<BucketOrder, double>> merged;
  for (std::size_t k = 0; k < ensemble.size(); ++k) {
    const auto& order = ensemble.orders()[k];
    const double w = ensemble.weights()[k];
    auto [it, inserted] = merged.try_emplace(format_bucket_order(order), order, w);
    if (!inserted) it->second.second += w;
  }

  std::vector<std::pair<BucketOrder, double>> members;
  members.reserve(merged.size());
  for (auto& [text, member] : merged) members.push_back(std::move(member));
  std::stable_sort(members.begin(), members.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  std::vector<BucketOrder> orders;
  std::vector<double> weights;
  orders.reserve(members.size());
  weights.reserve(members.size());
  for (auto& [order, w] : members) {
    orders.push_back(std::move(order));
    weights.push_back(std::min(w, 1.0));  // merged duplicates may carry 1 + eps
  }
  return WeightedEnsemble(std::move(orders), std::move(weights));
}

}  // namespace osbop
