#pragma once

#include <vector>

#include "osbop/bucket_order.hpp"
#include "osbop/matrix.hpp"
#include "osbop/random.hpp"

namespace bench {

inline osbop::PairOrderMatrix random_matrix(int n, std::uint64_t seed) {
  osbop::Rng rng = osbop::make_rng(seed);
  std::vector<double> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.5);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const double x = osbop::uniform_real01(rng);
      entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(v - 1)] = x;
      entries[static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(n) +
              static_cast<std::size_t>(u - 1)] = 1.0 - x;
    }
  return osbop::PairOrderMatrix(n, std::move(entries));
}

}  // namespace bench
