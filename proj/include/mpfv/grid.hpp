#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

namespace mpfv {

/// Column/row address of a cell. Arithmetic on indices always wraps through Grid::wrap.
struct CellIndex {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

enum class Orientation { Vertical, Horizontal };

/// A face named by the cell on its low side: vertical faces sit on the owner's +x
/// side, horizontal faces on its +y side. The outward normal from the owner is +x / +y.
struct FaceId {
  Orientation orientation = Orientation::Vertical;
  CellIndex owner;
};

/// The vertex at the upper-right corner of cell (i, j), i.e. (x_{i+1/2}, y_{j+1/2}).
struct VertexId {
  int i = 0;
  int j = 0;
};

enum class Neighborhood {
  NKInclusive,  // N(K) u {K}: plus stencil, 5 cells
  N2UnionN,     // N^2(K) u N(K): Manhattan radius 2, 13 cells
  VN,           // vertex-sharing 3x3 block, 9 cells
};

/// Uniform doubly periodic mesh of the unit square.
class Grid {
 public:
  static constexpr int kMinCells = 5;

  Grid(int nx, int ny);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double dx() const { return dx_; }
  double dy() const { return dy_; }
  double cell_area() const { return dx_ * dy_; }
  std::size_t cell_count() const { return static_cast<std::size_t>(nx_) * static_cast<std::size_t>(ny_); }

  double x_center(int i) const { return (i + 0.5) / nx_; }
  double y_center(int j) const { return (j + 0.5) / ny_; }
  /// x_{i+1/2}, the right edge of column i.
  double x_edge(int i) const { return static_cast<double>(i + 1) / nx_; }
  double y_edge(int j) const { return static_cast<double>(j + 1) / ny_; }

  CellIndex wrap(int i, int j) const { return {wrap_axis(i, nx_), wrap_axis(j, ny_)}; }
  /// Periodic wrap of one coordinate; in-range values skip the modulo.
  static int wrap_axis(int i, int n) {
    if (static_cast<unsigned>(i) < static_cast<unsigned>(n)) return i;
    const int r = i % n;
    return r < 0 ? r + n : r;
  }
  std::size_t index(CellIndex k) const {
    return static_cast<std::size_t>(k.j) * static_cast<std::size_t>(nx_) + static_cast<std::size_t>(k.i);
  }
  std::size_t index(int i, int j) const { return index(wrap(i, j)); }
  CellIndex cell(std::size_t index) const {
    return {static_cast<int>(index % static_cast<std::size_t>(nx_)),
            static_cast<int>(index / static_cast<std::size_t>(nx_))};
  }
  bool contains(CellIndex k) const { return k.i >= 0 && k.i < nx_ && k.j >= 0 && k.j < ny_; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.nx_ == b.nx_ && a.ny_ == b.ny_; }

 private:
  int nx_;
  int ny_;
  double dx_;
  double dy_;
};

/// Face neighbours in the fixed order [+x, -x, +y, -y].
std::array<CellIndex, 4> face_neighbors(const Grid& g, CellIndex k);

/// Deduplicated cell set, row-major order.
std::vector<CellIndex> neighborhood(const Grid& g, CellIndex k, Neighborhood kind);

/// The two cells separated by f: first the owner K, then L on the +x / +y side.
std::pair<CellIndex, CellIndex> face_cells(const Grid& g, FaceId f);

/// N(K) u N(L) for the face between K and L (8 cells on a quad grid).
std::vector<CellIndex> face_union_neighborhood(const Grid& g, FaceId f);

/// The four cells sharing a vertex: (i,j), (i+1,j), (i,j+1), (i+1,j+1), wrapped.
std::array<CellIndex, 4> vertex_cells(const Grid& g, VertexId v);

}  // namespace mpfv
