#pragma once

#include <span>
#include <vector>

#include "mpfv/grid.hpp"

namespace mpfv {

/// One value per cell, row-major (i fastest). Holds cell means or any other per-cell quantity.
class CellField {
 public:
  explicit CellField(Grid grid, double fill = 0.0) : grid_(grid), values_(grid.cell_count(), fill) {}
  CellField(Grid grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }

  double& operator[](std::size_t index) { return values_[index]; }
  double operator[](std::size_t index) const { return values_[index]; }
  double& operator()(CellIndex k) { return values_[grid_.index(k)]; }
  double operator()(CellIndex k) const { return values_[grid_.index(k)]; }
  /// Periodic access; any integer pair is valid.
  double wrapped(int i, int j) const { return values_[grid_.index(i, j)]; }

  std::span<double> values() { return values_; }
  std::span<const double> values() const { return values_; }
  std::span<double> row(int j) { return std::span<double>(values_).subspan(grid_.index(0, j), grid_.nx()); }
  std::span<const double> row(int j) const {
    return std::span<const double>(values_).subspan(grid_.index(0, j), grid_.nx());
  }

  double min() const;
  double max() const;
  /// Sum of mean * |K|.
  double mass() const;

  friend bool operator==(const CellField& a, const CellField& b) {
    return a.grid_ == b.grid_ && a.values_ == b.values_;
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Per-cell rate of change of the cell means.
using CellTendency = CellField;

}  // namespace mpfv
