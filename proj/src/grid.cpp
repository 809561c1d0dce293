#include "mpfv/grid.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mpfv {

namespace {

void sort_unique(std::vector<CellIndex>& cells) {
  std::sort(cells.begin(), cells.end(), [](CellIndex a, CellIndex b) {
    return a.j != b.j ? a.j < b.j : a.i < b.i;
  });
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

}  // namespace

Grid::Grid(int nx, int ny) : nx_(nx), ny_(ny), dx_(1.0 / nx), dy_(1.0 / ny) {
  // Below 5 cells per direction the periodic stencils overlap themselves.
  if (nx < kMinCells || ny < kMinCells) {
    throw std::invalid_argument("grid must have at least 5x5 cells, got " + std::to_string(nx) + "x" +
                                std::to_string(ny));
  }
}

std::array<CellIndex, 4> face_neighbors(const Grid& g, CellIndex k) {
  return {g.wrap(k.i + 1, k.j), g.wrap(k.i - 1, k.j), g.wrap(k.i, k.j + 1), g.wrap(k.i, k.j - 1)};
}

std::vector<CellIndex> neighborhood(const Grid& g, CellIndex k, Neighborhood kind) {
  std::vector<CellIndex> cells;
  switch (kind) {
    case Neighborhood::NKInclusive:
      cells.push_back(k);
      for (const auto& n : face_neighbors(g, k)) cells.push_back(n);
      break;
    case Neighborhood::N2UnionN:
      for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
          if (std::abs(di) + std::abs(dj) <= 2) cells.push_back(g.wrap(k.i + di, k.j + dj));
        }
      }
      break;
    case Neighborhood::VN:
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) cells.push_back(g.wrap(k.i + di, k.j + dj));
      }
      break;
  }
  sort_unique(cells);
  return cells;
}

std::pair<CellIndex, CellIndex> face_cells(const Grid& g, FaceId f) {
  const CellIndex k = g.wrap(f.owner.i, f.owner.j);
  const CellIndex l = f.orientation == Orientation::Vertical ? g.wrap(k.i + 1, k.j) : g.wrap(k.i, k.j + 1);
  return {k, l};
}

std::vector<CellIndex> face_union_neighborhood(const Grid& g, FaceId f) {
  const auto [k, l] = face_cells(g, f);
  auto cells = neighborhood(g, k, Neighborhood::NKInclusive);
  const auto other = neighborhood(g, l, Neighborhood::NKInclusive);
  cells.insert(cells.end(), other.begin(), other.end());
  sort_unique(cells);
  return cells;
}

std::array<CellIndex, 4> vertex_cells(const Grid& g, VertexId v) {
  return {g.wrap(v.i, v.j), g.wrap(v.i + 1, v.j), g.wrap(v.i, v.j + 1), g.wrap(v.i + 1, v.j + 1)};
}

}  // namespace mpfv
