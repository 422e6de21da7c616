#include "osbop/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>

#include "osbop/errors.hpp"

namespace osbop {

namespace {

std::string entry_name(Item u, Item v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void check_square(int n, std::size_t size) {
  if (n < 1) throw ValidationError("matrix needs a positive item count");
  if (size != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ValidationError("matrix has " + std::to_string(size) + " entries, expected " +
                          std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace

PairOrderMatrix::PairOrderMatrix(int item_count, std::vector<double> entries)
    : n_(item_count), entries_(std::move(entries)) {
  check_square(n_, entries_.size());
  for (Item u = 1; u <= n_; ++u) {
    for (Item v = 1; v <= n_; ++v) {
      double& x = entries_[index(u, v)];
      if (x < -kComplementTolerance || x > 1.0 + kComplementTolerance)
        throw ValidationError("entry " + entry_name(u, v) + " = " + std::to_string(x) +
                              " outside [0,1]");
      x = std::clamp(x, 0.0, 1.0);
    }
    double& diag = entries_[index(u, u)];
    if (std::abs(diag - 0.5) > kComplementTolerance)
      throw ValidationError("diagonal entry " + entry_name(u, u) + " must be 0.5");
    diag = 0.5;
  }
  for (Item u = 1; u <= n_; ++u) {
    for (Item v = u + 1; v <= n_; ++v) {
      const double sum = entries_[index(u, v)] + entries_[index(v, u)];
      if (std::abs(sum - 1.0) > kComplementTolerance)
        throw ValidationError("entries " + entry_name(u, v) + " and " + entry_name(v, u) +
                              " sum to " + std::to_string(sum) + ", expected 1");
    }
  }
}

BucketMatrix::BucketMatrix(Unchecked, int item_count, std::vector<double> entries)
    : n_(item_count), entries_(std::move(entries)) {}

BucketMatrix BucketMatrix::checked(int item_count, std::vector<double> entries) {
  check_square(item_count, entries.size());
  const int n = item_count;
  auto at = [&](Item u, Item v) -> double {
    return entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v - 1)];
  };

  for (Item u = 1; u <= n; ++u) {
    for (Item v = 1; v <= n; ++v) {
      const double x = at(u, v);
      if (x != 0.0 && x != 0.5 && x != 1.0)
        throw ValidationError("entry " + entry_name(u, v) + " = " + std::to_string(x) +
                              " not in {0, 0.5, 1}");
    }
    if (at(u, u) != 0.5)
      throw ValidationError("diagonal entry " + entry_name(u, u) + " must be 0.5");
  }
  for (Item u = 1; u <= n; ++u)
    for (Item v = u + 1; v <= n; ++v)
      if (at(u, v) + at(v, u) != 1.0)
        throw ValidationError("entries " + entry_name(u, v) + " and " + entry_name(v, u) +
                              " are not complementary");

  // The weak relation u <= v (entry >= 0.5) must be transitive; with
  // complementarity this makes it a total preorder, i.e. an ordered partition.
  for (Item u = 1; u <= n; ++u)
    for (Item v = 1; v <= n; ++v)
      for (Item w = 1; w <= n; ++w)
        if (at(u, v) >= 0.5 && at(v, w) >= 0.5 && at(u, w) < 0.5)
          throw ValidationError("transitivity violated at triple (" + std::to_string(u) +
                                "," + std::to_string(v) + "," + std::to_string(w) + ")");

  return BucketMatrix(Unchecked{}, n, std::move(entries));
}

std::optional<BucketMatrix> BucketMatrix::try_from(const PairOrderMatrix& m) {
  try {
    return checked(m.item_count(), m.entries());
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

PairOrderMatrix BucketMatrix::as_pair_order() const {
  return PairOrderMatrix(n_, entries_);
}

BucketMatrix to_matrix(const BucketOrder& order) {
  const int n = order.item_count();
  std::vector<double> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (Item u = 1; u <= n; ++u) {
    const int pu = order.bucket_of(u);
    for (Item v = 1; v <= n; ++v) {
      const int pv = order.bucket_of(v);
      const double x = pu < pv ? 1.0 : (pu > pv ? 0.0 : 0.5);
      entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(v - 1)] = x;
    }
  }
  return BucketMatrix(BucketMatrix::Unchecked{}, n, std::move(entries));
}

BucketOrder from_matrix(const BucketMatrix& m) {
  const int n = m.item_count();

  // Row sums are strictly larger for earlier buckets and equal inside one,
  // so sorting by them recovers the order. Sums of {0, 0.5, 1} are exact.
  std::vector<double> score(static_cast<std::size_t>(n));
  for (Item u = 1; u <= n; ++u) {
    double s = 0.0;
    for (Item v = 1; v <= n; ++v) s += m.at(u, v);
    score[static_cast<std::size_t>(u - 1)] = s;
  }

  std::vector<Item> items(static_cast<std::size_t>(n));
  std::iota(items.begin(), items.end(), Item{1});
  std::stable_sort(items.begin(), items.end(), [&](Item a, Item b) {
    return score[static_cast<std::size_t>(a - 1)] > score[static_cast<std::size_t>(b - 1)];
  });

  std::vector<std::vector<Item>> buckets;
  for (Item u : items) {
    if (buckets.empty() || score[static_cast<std::size_t>(buckets.back().front() - 1)] !=
                               score[static_cast<std::size_t>(u - 1)])
      buckets.emplace_back();
    buckets.back().push_back(u);
  }
  return BucketOrder(n, std::move(buckets));
}

}  // namespace osbop
