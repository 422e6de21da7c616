#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "osbop/bucket_order.hpp"

namespace osbop {

/// Counts overflow 64 bits quickly (binomial(fubini(10), 4) has 43 digits),
/// so every space-size computation uses arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;

/// Number of ordered set partitions of n items, via the recurrence
/// F(n) = sum_{k=1..n} binomial(n,k) F(n-k), F(0) = 1.
BigInt fubini(int n);

BigInt factorial(int n);

/// Exact binomial coefficient, k >= 0.
BigInt binomial(const BigInt& n, int k);

struct SpaceSize {
  int n = 0;
  int b = 1;
  BigInt count;
};

/// Size of the candidate space: binomial(fubini(n), b) unordered b-subsets,
/// or n! when strict (rankings without ties; defined for b = 1 only —
/// anything else throws ValidationError).
SpaceSize space_size(int n, int b, bool strict = false);

namespace detail {

template <typename Visitor>
void visit_block_arrangements(int n, const std::vector<std::vector<Item>>& blocks,
                              Visitor& visit) {
  const std::size_t k = blocks.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<std::vector<Item>> buckets;
    buckets.reserve(k);
    for (std::size_t slot : perm) buckets.push_back(blocks[slot]);
    visit(BucketOrder(n, std::move(buckets)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

template <typename Visitor>
void visit_partitions(int n, int k, int item, int used,
                      std::vector<std::vector<Item>>& blocks, Visitor& visit) {
  if (item > n) {
    if (used == k) visit_block_arrangements(n, blocks, visit);
    return;
  }
  const int remaining_after = n - item;  // items left once this one is placed
  // Existing blocks first, then a new one: restricted-growth (lexicographic) order.
  for (int j = 0; j < used; ++j) {
    if (k - used > remaining_after) break;  // cannot open the missing blocks anymore
    blocks[static_cast<std::size_t>(j)].push_back(item);
    visit_partitions(n, k, item + 1, used, blocks, visit);
    blocks[static_cast<std::size_t>(j)].pop_back();
  }
  if (used < k && k - used - 1 <= remaining_after) {
    blocks.emplace_back(1, item);
    visit_partitions(n, k, item + 1, used + 1, blocks, visit);
    blocks.pop_back();
  }
}

}  // namespace detail

/// Visits every bucket order of {1..n} exactly once, in a fixed order:
/// bucket count k ascending; within k, the restricted-growth strings with
/// exactly k blocks lexicographically; within a string, the k! block
/// arrangements in lexicographic order. Tie lists derived from this stream
/// are therefore reproducible.
template <typename Visitor>
void for_each_bucket_order(int n, Visitor&& visit) {
  if (n < 1) return;
  for (int k = 1; k <= n; ++k) {
    std::vector<std::vector<Item>> blocks;
    blocks.reserve(static_cast<std::size_t>(k));
    detail::visit_partitions(n, k, 1, 0, blocks, visit);
  }
}

/// Materialized enumeration in the same order. The caller is responsible for
/// keeping fubini(n) within addressable memory.
std::vector<BucketOrder> enumerate_bucket_orders(int n);

}  // namespace osbop
