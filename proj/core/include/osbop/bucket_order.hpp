#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace osbop {

/// Items are 1-based integers everywhere in the public interface.
using Item = int;

/// An ordered partition of {1..n}: a complete ranking where the items inside
/// a bucket are mutually tied and earlier buckets precede later ones.
/// Immutable after construction.
class BucketOrder {
public:
  /// Validates and canonicalizes (items inside each bucket are stored in
  /// ascending order). Throws ValidationError when a bucket is empty, an item
  /// repeats or falls outside 1..n, or some item is missing.
  BucketOrder(int item_count, std::vector<std::vector<Item>> buckets);

  int item_count() const { return n_; }
  std::size_t bucket_count() const { return buckets_.size(); }
  const std::vector<std::vector<Item>>& buckets() const { return buckets_; }

  /// 0-based index of the bucket holding item u.
  int bucket_of(Item u) const { return positions_[static_cast<std::size_t>(u - 1)]; }

  friend bool operator==(const BucketOrder&, const BucketOrder&) = default;

private:
  int n_ = 0;
  std::vector<std::vector<Item>> buckets_;
  std::vector<int> positions_;
};

/// Parses the bar/comma notation, e.g. "1,3|2,4": buckets separated by '|',
/// tied items by ','. Every item in 1..item_count must appear exactly once;
/// whitespace around tokens is ignored. Throws ParseError otherwise.
BucketOrder parse_bucket_order(std::string_view text, int item_count);

/// Canonical text form: buckets joined by '|', items ascending inside each
/// bucket. parse_bucket_order(format_bucket_order(x), n) == x.
std::string format_bucket_order(const BucketOrder& order);

}  // namespace osbop
