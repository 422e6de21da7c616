#include "osbop/bucket_order.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "osbop/errors.hpp"

namespace osbop {

BucketOrder::BucketOrder(int item_count, std::vector<std::vector<Item>> buckets)
    : n_(item_count), buckets_(std::move(buckets)) {
  if (n_ < 1) throw ValidationError("bucket order needs a positive item count");
  if (buckets_.empty()) throw ValidationError("bucket order has no buckets");

  positions_.assign(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < buckets_.size(); ++i) {
    auto& bucket = buckets_[i];
    if (bucket.empty())
      throw ValidationError("bucket " + std::to_string(i + 1) + " is empty");
    std::sort(bucket.begin(), bucket.end());
    for (Item u : bucket) {
      if (u < 1 || u > n_)
        throw ValidationError("item " + std::to_string(u) + " outside 1.." +
                              std::to_string(n_));
      int& pos = positions_[static_cast<std::size_t>(u - 1)];
      if (pos != -1)
        throw ValidationError("item " + std::to_string(u) + " appears twice");
      pos = static_cast<int>(i);
    }
  }
  for (Item u = 1; u <= n_; ++u) {
    if (positions_[static_cast<std::size_t>(u - 1)] == -1)
      throw ValidationError("item " + std::to_string(u) + " is missing");
  }
}

namespace {

Item parse_item(std::string_view token, int n) {
  const auto first = token.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    throw ParseError("empty item token in bucket order");
  const auto last = token.find_last_not_of(" \t");
  token = token.substr(first, last - first + 1);

  Item value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("bad item token '" + std::string(token) + "' in bucket order");
  if (value < 1 || value > n)
    throw ParseError("item " + std::to_string(value) + " outside 1.." + std::to_string(n));
  return value;
}

}  // namespace

BucketOrder parse_bucket_order(std::string_view text, int item_count) {
  if (text.find_first_not_of(" \t") == std::string_view::npos)
    throw ParseError("empty bucket order text");

  std::vector<std::vector<Item>> buckets;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view part =
        text.substr(start, bar == std::string_view::npos ? bar : bar - start);
    if (part.find_first_not_of(" \t") == std::string_view::npos)
      throw ParseError("empty bucket in '" + std::string(text) + "'");

    std::vector<Item> bucket;
    std::size_t item_start = 0;
    while (true) {
      const std::size_t comma = part.find(',', item_start);
      const std::string_view token = part.substr(
          item_start, comma == std::string_view::npos ? comma : comma - item_start);
      bucket.push_back(parse_item(token, item_count));
      if (comma == std::string_view::npos) break;
      item_start = comma + 1;
    }
    buckets.push_back(std::move(bucket));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }

  try {
    return BucketOrder(item_count, std::move(buckets));
  } catch (const ValidationError& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

std::string format_bucket_order(const BucketOrder& order) {
  std::ostringstream out;
  bool first_bucket = true;
  for (const auto& bucket : order.buckets()) {
    if (!first_bucket) out << '|';
    first_bucket = false;
    bool first_item = true;
    for (Item u : bucket) {
      if (!first_item) out << ',';
      first_item = false;
      out << u;
    }
  }
  return out.str();
}

}  // namespace osbop
