#pragma once

// Row helpers for periodic stencils: copy a neighbour row shifted by one cell so that kernels
// can run over contiguous, aligned-in-index spans.

#include <algorithm>
#include <span>

namespace mpfv::detail {

/// (i + 1) mod n and (i - 1) mod n for 0 <= i < n, without a division.
inline int next_index(int i, int n) { return i + 1 == n ? 0 : i + 1; }
inline int prev_index(int i, int n) { return i == 0 ? n - 1 : i - 1; }

/// out[i] = row[(i + 1) mod n]
inline void shift_from_east(std::span<const double> row, std::span<double> out) {
  const std::size_t n = row.size();
  std::copy(row.begin() + 1, row.end(), out.begin());
  out[n - 1] = row[0];
}

/// out[i] = row[(i - 1) mod n]
inline void shift_from_west(std::span<const double> row, std::span<double> out) {
  const std::size_t n = row.size();
  out[0] = row[n - 1];
  std::copy(row.begin(), row.end() - 1, out.begin() + 1);
}

}  // namespace mpfv::detail
