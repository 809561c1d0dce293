#include "mpfv/limiters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mpfv/kernels.hpp"
#include "row_ops.hpp"

namespace mpfv {

namespace {

double lesser(double a, double b) { return b < a ? b : a; }
double greater(double a, double b) { return b > a ? b : a; }

Bounds scan(const CellField& u, auto&& cells) {
  Bounds b{u(*cells.begin()), u(*cells.begin())};
  for (const CellIndex c : cells) {
    b.m = lesser(b.m, u(c));
    b.M = greater(b.M, u(c));
  }
  return b;
}

Bounds require_global(std::optional<Bounds> global_mm) {
  if (!global_mm) throw std::invalid_argument("Global limiter needs the step's global bounds");
  return *global_mm;
}

// Unlimited linear values at the four face midpoints and four corners.
struct LinearPoints {
  double right, left, up, down;
  double ne, nw, se, sw;
};

LinearPoints linear_points(const LinearRecon& r, std::size_t k) {
  const double hx = 0.5 * r.grid.dx();
  const double hy = 0.5 * r.grid.dy();
  const double ax = r.slope_x[k] * hx;
  const double ay = r.slope_y[k] * hy;
  const double c = r.mean[k];
  return {c + ax, c - ax, c + ay, c - ay, c + (ax + ay), c + (ay - ax), c + (ax - ay), c - (ax + ay)};
}

struct Accumulate {
  double mean;
  double alpha = 1.0;
  void operator()(double p, Bounds b) { alpha = lesser(alpha, bj_factor(p, mean, b)); }
};

// Face bounds for the four faces of k in the order [+x, -x, +y, -y].
struct FaceSet {
  Bounds east, west, north, south;
};

FaceSet face_set(LimiterKind kind, const CellField& u, CellIndex k) {
  const Grid& g = u.grid();
  const CellIndex w = g.wrap(k.i - 1, k.j);
  const CellIndex s = g.wrap(k.i, k.j - 1);
  return {face_bounds(kind, u, {Orientation::Vertical, k}), face_bounds(kind, u, {Orientation::Vertical, w}),
          face_bounds(kind, u, {Orientation::Horizontal, k}), face_bounds(kind, u, {Orientation::Horizontal, s})};
}

double limit_linear(LimiterKind kind, const LinearPoints& p, double mean, const FaceSet& faces, Bounds cell,
                    const std::array<Bounds, 4>& corners) {
  Accumulate acc{mean};
  switch (kind) {
    case LimiterKind::Unlimited:
      return 1.0;
    case LimiterKind::BJ:
    case LimiterKind::Global:
      for (const double v : {p.right, p.left, p.up, p.down}) acc(v, cell);
      break;
    case LimiterKind::NKMP:
    case LimiterKind::N2NMP:
      acc(p.right, faces.east);
      acc(p.left, faces.west);
      acc(p.up, faces.north);
      acc(p.down, faces.south);
      break;
    case LimiterKind::Kuzmin:
      acc(p.ne, corners[0]);
      acc(p.nw, corners[1]);
      acc(p.se, corners[2]);
      acc(p.sw, corners[3]);
      break;
  }
  return acc.alpha;
}

double limit_cubic(LimiterKind kind, const std::array<double, kTracePointCount>& p, double mean,
                   const FaceSet& faces, Bounds cell) {
  Accumulate acc{mean};
  switch (kind) {
    case LimiterKind::Unlimited:
      return 1.0;
    case LimiterKind::BJ:
    case LimiterKind::Global:
      for (const double v : p) acc(v, cell);
      break;
    case LimiterKind::NKMP:
    case LimiterKind::N2NMP:
      acc(p[R0], faces.east);
      acc(p[R1], faces.east);
      acc(p[L0], faces.west);
      acc(p[L1], faces.west);
      acc(p[U0], faces.north);
      acc(p[U1], faces.north);
      acc(p[D0], faces.south);
      acc(p[D1], faces.south);
      acc(p[Center], cell);
      break;
    case LimiterKind::Kuzmin:
      throw std::invalid_argument("the Kuzmin limiter is defined for the linear reconstruction only");
  }
  return acc.alpha;
}

// Cell bounds used by the centre / all-point constraints of each kind.
Bounds constraint_cell_bounds(LimiterKind kind, const CellField& u, CellIndex k, std::optional<Bounds> global_mm) {
  switch (kind) {
    case LimiterKind::Unlimited:
    case LimiterKind::Kuzmin:
      return {};
    default:
      return cell_bounds(kind, u, k, global_mm);
  }
}

std::array<Bounds, 4> corner_bounds(const CellField& u, CellIndex k) {
  return {vertex_bounds(u, {k.i, k.j}), vertex_bounds(u, {k.i - 1, k.j}), vertex_bounds(u, {k.i, k.j - 1}),
          vertex_bounds(u, {k.i - 1, k.j - 1})};
}

void plus_extrema(const Grid& g, std::span<const double> lo_in, std::span<const double> hi_in,
                  std::vector<double>& lo, std::vector<double>& hi) {
  // Row by row: north and south rows are views, east and west are shifted into scratch rows.
  const auto& kt = kernels::active();
  const std::size_t nx = static_cast<std::size_t>(g.nx());
  std::vector<double> east(nx);
  std::vector<double> west(nx);
  std::vector<double> discard(nx);
  const auto pass = [&](std::span<const double> in, std::vector<double>& out, bool low) {
    for (int j = 0; j < g.ny(); ++j) {
      const auto row = [&](int jj) {
        return std::span<const double>(in.data() + static_cast<std::size_t>((jj + g.ny()) % g.ny()) * nx, nx);
      };
      const auto c = row(j);
      detail::shift_from_east(c, east);
      detail::shift_from_west(c, west);
      std::span<double> dst(out.data() + static_cast<std::size_t>(j) * nx, nx);
      if (low) {
        kt.min_max5(c, east, west, row(j + 1), row(j - 1), dst, discard);
      } else {
        kt.min_max5(c, east, west, row(j + 1), row(j - 1), discard, dst);
      }
    }
  };
  pass(lo_in, lo, true);
  pass(hi_in, hi, false);
}

}  // namespace

double bj_factor(double p, double mean, Bounds b) {
  const double d = p - mean;
  double a = 1.0;
  if (d > 0.0) {
    a = (b.M - mean) / d;
  } else if (d < 0.0) {
    a = (b.m - mean) / d;
  } else {
    return 1.0;
  }
  return std::clamp(lesser(1.0, a), 0.0, 1.0);
}

Bounds face_bounds(LimiterKind kind, const CellField& u, FaceId f) {
  const Grid& g = u.grid();
  const auto [k, l] = face_cells(g, f);
  switch (kind) {
    case LimiterKind::NKMP:
      return {lesser(u(k), u(l)), greater(u(k), u(l))};
    case LimiterKind::N2NMP:
      return scan(u, face_union_neighborhood(g, f));
    default:
      throw std::invalid_argument("face bounds are defined for the NK and N2N limiters only, not " +
                                  std::string(to_string(kind)));
  }
}

Bounds neighborhood_bounds(const CellField& u, CellIndex k, Neighborhood kind) {
  return scan(u, neighborhood(u.grid(), k, kind));
}

Bounds cell_bounds(LimiterKind kind, const CellField& u, CellIndex k, std::optional<Bounds> global_mm) {
  switch (kind) {
    case LimiterKind::BJ:
    case LimiterKind::NKMP:
      return neighborhood_bounds(u, k, Neighborhood::NKInclusive);
    case LimiterKind::N2NMP:
      return neighborhood_bounds(u, k, Neighborhood::N2UnionN);
    case LimiterKind::Global:
      return require_global(global_mm);
    default:
      throw std::invalid_argument("no cell bounds for limiter " + std::string(to_string(kind)));
  }
}

Bounds vertex_bounds(const CellField& u, VertexId v) { return scan(u, vertex_cells(u.grid(), v)); }

Bounds global_bounds(const CellField& u) { return {u.min(), u.max()}; }

NeighborhoodExtrema neighborhood_extrema(const CellField& u, Neighborhood kind) {
  const Grid& g = u.grid();
  const std::span<const double> values = u.values();
  NeighborhoodExtrema out{std::vector<double>(values.size()), std::vector<double>(values.size())};
  switch (kind) {
    case Neighborhood::NKInclusive:
      plus_extrema(g, values, values, out.lo, out.hi);
      break;
    case Neighborhood::N2UnionN: {
      // The radius-2 diamond is the union of the plus stencils of the plus stencil.
      NeighborhoodExtrema plus = neighborhood_extrema(u, Neighborhood::NKInclusive);
      plus_extrema(g, plus.lo, plus.hi, out.lo, out.hi);
      break;
    }
    case Neighborhood::VN: {
      // Row-wise 3-wide extrema, then 3-tall.
      const int nx = g.nx();
      std::vector<double> rlo(values.size());
      std::vector<double> rhi(values.size());
      for (int j = 0; j < g.ny(); ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * nx;
        for (int i = 0; i < nx; ++i) {
          const double c = values[row + i];
          const double e = values[row + detail::next_index(i, nx)];
          const double w = values[row + detail::prev_index(i, nx)];
          rlo[row + i] = lesser(lesser(c, e), w);
          rhi[row + i] = greater(greater(c, e), w);
        }
      }
      for (int j = 0; j < g.ny(); ++j) {
        const std::size_t row = static_cast<std::size_t>(j) * nx;
        const std::size_t rn = static_cast<std::size_t>(detail::next_index(j, g.ny())) * nx;
        const std::size_t rs = static_cast<std::size_t>(detail::prev_index(j, g.ny())) * nx;
        for (int i = 0; i < nx; ++i) {
          out.lo[row + i] = lesser(lesser(rlo[row + i], rlo[rn + i]), rlo[rs + i]);
          out.hi[row + i] = greater(greater(rhi[row + i], rhi[rn + i]), rhi[rs + i]);
        }
      }
      break;
    }
  }
  return out;
}

double limit_cell(LimiterKind kind, const LinearRecon& r, const CellField& u, CellIndex k,
                  std::optional<Bounds> global_mm) {
  if (kind == LimiterKind::Unlimited) return 1.0;
  const std::size_t idx = u.grid().index(k);
  const LinearPoints p = linear_points(r, idx);
  const bool faces = kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP;
  const FaceSet fs = faces ? face_set(kind, u, k) : FaceSet{};
  const auto corners = kind == LimiterKind::Kuzmin ? corner_bounds(u, k) : std::array<Bounds, 4>{};
  const Bounds cell = faces ? Bounds{} : constraint_cell_bounds(kind, u, k, global_mm);
  return limit_linear(kind, p, r.mean[idx], fs, cell, corners);
}

double limit_cell(LimiterKind kind, const CubicRecon& r, const CellField& u, CellIndex k,
                  std::optional<Bounds> global_mm) {
  if (kind == LimiterKind::Unlimited) return 1.0;
  if (kind == LimiterKind::Kuzmin) {
    throw std::invalid_argument("the Kuzmin limiter is defined for the linear reconstruction only");
  }
  const std::size_t idx = u.grid().index(k);
  const bool faces = kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP;
  const FaceSet fs = faces ? face_set(kind, u, k) : FaceSet{};
  // BJ and NKMP bound the centre by N(K) u {K}, N2NMP by N^2(K) u N(K).
  const Bounds cell = constraint_cell_bounds(kind, u, k, global_mm);
  return limit_cubic(kind, sample_points(r, idx), r.mean[idx], fs, cell);
}

namespace {

// Bounds tables shared by both reconstructions.
struct FieldBounds {
  LimiterKind kind;
  Grid grid;
  NeighborhoodExtrema plus;
  NeighborhoodExtrema diamond;
  std::span<const double> mean;
  std::optional<Bounds> global;

  FieldBounds(LimiterKind k, const Grid& g, std::span<const double> u, std::optional<Bounds> gm, bool need_diamond)
      : kind(k), grid(g), mean(u), global(gm) {
    if (kind == LimiterKind::Global) require_global(global);
    if (kind == LimiterKind::BJ || kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP) {
      plus = {std::vector<double>(u.size()), std::vector<double>(u.size())};
      plus_extrema(grid, u, u, plus.lo, plus.hi);
    }
    if (need_diamond) {
      diamond = {std::vector<double>(u.size()), std::vector<double>(u.size())};
      plus_extrema(grid, plus.lo, plus.hi, diamond.lo, diamond.hi);
    }
  }

  Bounds face(std::size_t k, std::size_t l) const {
    if (kind == LimiterKind::NKMP) return {lesser(mean[k], mean[l]), greater(mean[k], mean[l])};
    return {lesser(plus.lo[k], plus.lo[l]), greater(plus.hi[k], plus.hi[l])};
  }

  /// Faces of cell k = (i, j) in the order east, west, north, south.
  FaceSet faces(int i, int j) const {
    const int nx = grid.nx();
    const std::size_t row = static_cast<std::size_t>(j) * nx;
    const std::size_t k = row + i;
    const std::size_t e = row + detail::next_index(i, nx);
    const std::size_t w = row + detail::prev_index(i, nx);
    const std::size_t n = static_cast<std::size_t>(detail::next_index(j, grid.ny())) * nx + i;
    const std::size_t s = static_cast<std::size_t>(detail::prev_index(j, grid.ny())) * nx + i;
    return {face(k, e), face(w, k), face(k, n), face(s, k)};
  }

  Bounds cell(std::size_t k) const {
    switch (kind) {
      case LimiterKind::BJ:
      case LimiterKind::NKMP:
        return plus.at(k);
      case LimiterKind::N2NMP:
        return diamond.at(k);
      case LimiterKind::Global:
        return *global;
      default:
        return {};
    }
  }
};

}  // namespace

void limit_field(LimiterKind kind, LinearRecon& r, std::optional<Bounds> global_mm) {
  std::fill(r.alpha.begin(), r.alpha.end(), 1.0);
  if (kind == LimiterKind::Unlimited) return;
  const Grid& g = r.grid;
  const int nx = g.nx();
  const int ny = g.ny();
  const FieldBounds fb(kind, g, r.mean, global_mm, false);
  // Vertex extrema: vertex (i,j) touches (i,j), (i+1,j), (i,j+1), (i+1,j+1).
  std::vector<double> vlo;
  std::vector<double> vhi;
  if (kind == LimiterKind::Kuzmin) {
    vlo.resize(g.cell_count());
    vhi.resize(g.cell_count());
    for (int j = 0; j < ny; ++j) {
      const std::size_t row = static_cast<std::size_t>(j) * nx;
      const std::size_t rn = static_cast<std::size_t>(detail::next_index(j, ny)) * nx;
      for (int i = 0; i < nx; ++i) {
        const int ie = detail::next_index(i, nx);
        const double a = r.mean[row + i];
        const double b = r.mean[row + ie];
        const double c = r.mean[rn + i];
        const double d = r.mean[rn + ie];
        vlo[row + i] = lesser(lesser(lesser(a, b), c), d);
        vhi[row + i] = greater(greater(greater(a, b), c), d);
      }
    }
  }
  const bool faces = kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP;
  for (int j = 0; j < ny; ++j) {
    const std::size_t row = static_cast<std::size_t>(j) * nx;
    const std::size_t rs = static_cast<std::size_t>(detail::prev_index(j, ny)) * nx;
    for (int i = 0; i < nx; ++i) {
      const std::size_t k = row + i;
      std::array<Bounds, 4> corners{};
      if (kind == LimiterKind::Kuzmin) {
        const int iw = detail::prev_index(i, nx);
        const std::size_t vs[4] = {k, row + iw, rs + i, rs + iw};
        for (int c = 0; c < 4; ++c) corners[c] = {vlo[vs[c]], vhi[vs[c]]};
      }
      const Bounds cell = faces || kind == LimiterKind::Kuzmin ? Bounds{} : fb.cell(k);
      r.alpha[k] = limit_linear(kind, linear_points(r, k), r.mean[k], faces ? fb.faces(i, j) : FaceSet{}, cell,
                                corners);
    }
  }
}

void limit_field(LimiterKind kind, CubicRecon& r, std::optional<Bounds> global_mm) {
  std::fill(r.alpha.begin(), r.alpha.end(), 1.0);
  if (kind == LimiterKind::Unlimited) return;
  if (kind == LimiterKind::Kuzmin) {
    throw std::invalid_argument("the Kuzmin limiter is defined for the linear reconstruction only");
  }
  const Grid& g = r.grid;
  const FieldBounds fb(kind, g, r.mean, global_mm, kind == LimiterKind::N2NMP);
  const auto points = all_sample_points(r);
  const bool faces = kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = static_cast<std::size_t>(j) * g.nx() + i;
      r.alpha[k] = limit_cubic(kind, points[k], r.mean[k], faces ? fb.faces(i, j) : FaceSet{}, fb.cell(k));
    }
  }
}

}  // namespace mpfv
