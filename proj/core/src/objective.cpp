#include "osbop/objective.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "osbop/errors.hpp"

namespace osbop {

double distance(const PairOrderMatrix& p, const PairOrderMatrix& c) {
  if (p.item_count() != c.item_count())
    throw ValidationError("distance between matrices of order " +
                          std::to_string(p.item_count()) + " and " +
                          std::to_string(c.item_count()));
  const auto& a = p.entries();
  const auto& b = c.entries();
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double fitness(const WeightedEnsemble& ensemble, const PairOrderMatrix& c) {
  if (ensemble.item_count() != c.item_count())
    throw ValidationError("fitness of an ensemble over " +
                          std::to_string(ensemble.item_count()) +
                          " items against a matrix of order " +
                          std::to_string(c.item_count()));
  return distance(aggregate(ensemble), c);
}

double round_to_grid(double x, int b) {
  if (b < 1) throw ValidationError("grid parameter b must be positive");
  if (x < 0.0 || x > 1.0)
    throw ValidationError("round_to_grid input " + std::to_string(x) + " outside [0,1]");

  if (b == 1) {
    // Closed middle interval: 0.25 and 0.75 both map to 0.5.
    if (x > 0.75) return 1.0;
    if (x >= 0.25) return 0.5;
    return 0.0;
  }
  // Half-open bins with boundaries rounding up: l/(2b) for the l with
  // (2l-1)/(4b) <= x < (2l+1)/(4b), plus the closed top bin at (4b-1)/(4b).
  const double scaled = 2.0 * static_cast<double>(b) * x;
  const double l =
      std::max(0.0, std::min(std::floor(scaled + 0.5), 2.0 * static_cast<double>(b)));
  return l / (2.0 * static_cast<double>(b));
}

UtopiaReport utopia(const PairOrderMatrix& c, int b) {
  if (b < 1) throw ValidationError("utopia order b must be positive");
  const int n = c.item_count();

  std::vector<double> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.5);
  auto cell = [&](Item u, Item v) -> double& {
    return entries[static_cast<std::size_t>(u - 1) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(v - 1)];
  };
  for (Item u = 1; u <= n; ++u) {
    for (Item v = u + 1; v <= n; ++v) {
      const double x = round_to_grid(c.at(u, v), b);
      cell(u, v) = x;
      cell(v, u) = 1.0 - x;
    }
  }
  PairOrderMatrix matrix(n, std::move(entries));
  const double value = distance(matrix, c);
  return UtopiaReport{b, std::move(matrix), value};
}

}  // namespace osbop
