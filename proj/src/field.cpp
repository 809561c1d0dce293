#include "mpfv/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace mpfv {

CellField::CellField(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.cell_count()) {
    throw std::invalid_argument("cell field size does not match grid");
  }
}

double CellField::min() const { return *std::min_element(values_.begin(), values_.end()); }

double CellField::max() const { return *std::max_element(values_.begin(), values_.end()); }

double CellField::mass() const {
  double sum = 0.0;
  for (const double v : values_) sum += v;
  return sum * grid_.cell_area();
}

}  // namespace mpfv
