#pragma once

#include <string>
#include <string_view>

#include "osbop/matrix.hpp"

namespace osbop {

/// Reads the matrix CSV format: first line the item count n, then n lines of
/// n comma-separated decimals. Entries must lie in [0,1], the diagonal must
/// be 0.5 within 1e-6 (it is snapped to exactly 0.5), and complementarity
/// violations are repaired by averaging (x, 1-x) when within 1e-6 and are
/// errors beyond that. Repair leaves exact pairs untouched, so files written
/// by write_matrix read back bit-identically.
PairOrderMatrix read_matrix(std::string_view content);

/// Full-precision CSV in the same format; read_matrix(write_matrix(c)) == c.
std::string write_matrix(const PairOrderMatrix& c);

}  // namespace osbop
