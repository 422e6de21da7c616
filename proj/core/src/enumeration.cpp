#include "osbop/enumeration.hpp"

#include <string>

#include "osbop/errors.hpp"

namespace osbop {

BigInt fubini(int n) {
  if (n < 0) throw ValidationError("fubini undefined for negative n");
  std::vector<BigInt> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int m = 1; m <= n; ++m) {
    // Pascal row for binomial(m, k).
    BigInt coeff = 1;
    BigInt total = 0;
    for (int k = 1; k <= m; ++k) {
      coeff = coeff * (m - k + 1) / k;
      total += coeff * f[static_cast<std::size_t>(m - k)];
    }
    f[static_cast<std::size_t>(m)] = total;
  }
  return f[static_cast<std::size_t>(n)];
}

BigInt factorial(int n) {
  if (n < 0) throw ValidationError("factorial undefined for negative n");
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& n, int k) {
  if (k < 0) throw ValidationError("binomial undefined for negative k");
  if (n < k) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - (i - 1)) / i;  // exact at every step
  return r;
}

SpaceSize space_size(int n, int b, bool strict) {
  if (n < 1) throw ValidationError("space_size needs a positive item count");
  if (b < 1) throw ValidationError("space_size needs a positive ensemble size");
  if (strict) {
    if (b != 1)
      throw ValidationError("the no-ties space is defined for b = 1 only");
    return SpaceSize{n, b, factorial(n)};
  }
  return SpaceSize{n, b, binomial(fubini(n), b)};
}

std::vector<BucketOrder> enumerate_bucket_orders(int n) {
  std::vector<BucketOrder> all;
  for_each_bucket_order(n, [&](const BucketOrder& order) { all.push_back(order); });
  return all;
}

}  // namespace osbop
