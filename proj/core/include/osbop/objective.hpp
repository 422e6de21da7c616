#pragma once

#include "osbop/ensemble.hpp"
#include "osbop/matrix.hpp"

namespace osbop {

/// L1 distance summed over every ordered pair of items (the diagonal
/// contributes nothing for valid inputs). Throws ValidationError on a
/// dimension mismatch.
double distance(const PairOrderMatrix& p, const PairOrderMatrix& c);

/// Objective value of a weighted ensemble: distance(aggregate(ensemble), c).
/// For b = 1 this is the single-ranking objective.
double fitness(const WeightedEnsemble& ensemble, const PairOrderMatrix& c);

/// Nearest value to x on the grid {0, 1/(2b), 2/(2b), ..., 1}.
///   b = 1:  1 when x > 0.75, 0.5 when 0.25 <= x <= 0.75, 0 when x < 0.25.
///   b >= 2: 0 when x < 1/(4b), 1 when x >= (4b-1)/(4b), otherwise l/(2b)
///           for the unique l with (2l-1)/(4b) <= x < (2l+1)/(4b).
/// Always |result - x| <= 1/(4b). Throws ValidationError when x is outside
/// [0,1] or b < 1.
double round_to_grid(double x, int b);

/// Entrywise grid rounding of a matrix together with its distance to the
/// original. `value` is a lower bound on the fitness of every equal-weight
/// ensemble of size b (for b = 1, of every bucket matrix).
struct UtopiaReport {
  int b = 1;
  PairOrderMatrix matrix;
  double value = 0.0;
};

/// Rounds the upper triangle of c to the 1/(2b) grid and mirrors the lower
/// triangle, keeping the matrix complementary; entries of c that sit exactly
/// on a bin boundary round at the same absolute error either way, so `value`
/// is unaffected by the mirroring.
UtopiaReport utopia(const PairOrderMatrix& c, int b);

}  // namespace osbop
