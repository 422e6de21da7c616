#pragma once

#include <optional>
#include <vector>

#include "osbop/bucket_order.hpp"

namespace osbop {

/// Square matrix over [0,1] with 0.5 diagonal and complementary off-diagonal
/// pairs: C(u,v) + C(v,u) = 1 within 1e-9. Encodes aggregate pairwise
/// precedence strengths; in general the induced relation is not transitive.
/// Immutable after construction.
class PairOrderMatrix {
public:
  static constexpr double kComplementTolerance = 1e-9;

  /// Row-major entries, validated. Range dust within 1e-9 outside [0,1] is
  /// clamped and the diagonal is snapped to exactly 0.5; anything worse throws
  /// ValidationError.
  PairOrderMatrix(int item_count, std::vector<double> entries);

  int item_count() const { return n_; }
  double at(Item u, Item v) const { return entries_[index(u, v)]; }
  const std::vector<double>& entries() const { return entries_; }

  friend bool operator==(const PairOrderMatrix&, const PairOrderMatrix&) = default;

private:
  std::size_t index(Item u, Item v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::vector<double> entries_;
};

/// Pairwise encoding of a bucket order: 1 when the row item strictly precedes
/// the column item, 0 when it follows, 0.5 on ties and on the diagonal.
/// Values are exactly in {0, 0.5, 1} and the induced relation is a total
/// preorder. Immutable after construction.
class BucketMatrix {
public:
  /// Validates everything, including transitivity of the induced relation;
  /// ValidationError messages name the offending entry or triple.
  static BucketMatrix checked(int item_count, std::vector<double> entries);

  /// Non-throwing variant for feasibility probes.
  static std::optional<BucketMatrix> try_from(const PairOrderMatrix& m);

  int item_count() const { return n_; }
  double at(Item u, Item v) const { return entries_[index(u, v)]; }
  const std::vector<double>& entries() const { return entries_; }

  PairOrderMatrix as_pair_order() const;

  friend bool operator==(const BucketMatrix&, const BucketMatrix&) = default;

private:
  struct Unchecked {};
  BucketMatrix(Unchecked, int item_count, std::vector<double> entries);
  friend BucketMatrix to_matrix(const BucketOrder&);

  std::size_t index(Item u, Item v) const {
    return static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v - 1);
  }

  int n_ = 0;
  std::vector<double> entries_;
};

/// Bucket matrix induced by an order.
BucketMatrix to_matrix(const BucketOrder& order);

/// Inverse of to_matrix: the unique order whose bucket matrix equals m.
BucketOrder from_matrix(const BucketMatrix& m);

}  // namespace osbop
