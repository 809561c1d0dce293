#include "mpfv/fv4.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpfv/kernels.hpp"
#include "row_ops.hpp"

namespace mpfv {

namespace {

constexpr int kPad = 3;

// Wrapped column and row numbers for offsets -3..3, so stencils avoid per-access modulo.
struct Wrap {
  std::vector<int> col;
  std::vector<int> row;

  explicit Wrap(const Grid& g) : col(g.nx() + 2 * kPad), row(g.ny() + 2 * kPad) {
    for (int i = -kPad; i < g.nx() + kPad; ++i) col[i + kPad] = (i % g.nx() + g.nx()) % g.nx();
    for (int j = -kPad; j < g.ny() + kPad; ++j) row[j + kPad] = (j % g.ny() + g.ny()) % g.ny();
  }
  int c(int i, int off) const { return col[i + off + kPad]; }
  int r(int j, int off) const { return row[j + off + kPad]; }
};

// Stencil sums over a line of seven values v[-3..3].
struct Line {
  double m3, m2, m1, z, p1, p2, p3;
};

double d1(const Line& f, double h) { return (-f.p2 + 8.0 * f.p1 - 8.0 * f.m1 + f.m2) / (12.0 * h); }
double d2(const Line& f, double h) {
  return (-f.p2 + 16.0 * f.p1 - 30.0 * f.z + 16.0 * f.m1 - f.m2) / (12.0 * h * h);
}
double d3(const Line& f, double h) {
  return (-f.p3 + 8.0 * f.p2 - 13.0 * f.p1 + 13.0 * f.m1 - 8.0 * f.m2 + f.m3) / (8.0 * h * h * h);
}

template <class Get>
Line line_x(const Wrap& w, int i, int j, const Get& get) {
  return {get(w.c(i, -3), j), get(w.c(i, -2), j), get(w.c(i, -1), j), get(i, j),
          get(w.c(i, 1), j),  get(w.c(i, 2), j),  get(w.c(i, 3), j)};
}

template <class Get>
Line line_y(const Wrap& w, int i, int j, const Get& get) {
  return {get(i, w.r(j, -3)), get(i, w.r(j, -2)), get(i, w.r(j, -1)), get(i, j),
          get(i, w.r(j, 1)),  get(i, w.r(j, 2)),  get(i, w.r(j, 3))};
}

}  // namespace

double CubicRecon::unlimited_at(std::size_t k, double xi, double eta) const {
  const double dx2 = grid.dx() * grid.dx() / 12.0;
  const double dy2 = grid.dy() * grid.dy() / 12.0;
  const double second = (xi * xi - dx2) * uxx[k] + 2.0 * xi * eta * uxy[k] + (eta * eta - dy2) * uyy[k];
  const double third = xi * xi * xi * uxxx[k] + 3.0 * xi * xi * eta * uxxy[k] + 3.0 * xi * eta * eta * uxyy[k] +
                       eta * eta * eta * uyyy[k];
  return mean[k] + xi * ux[k] + eta * uy[k] + 0.5 * second + third / 6.0;
}

CellField project_p4(const CellField& means) {
  const Grid& g = means.grid();
  const Wrap w(g);
  CellField out(g);
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double c = means(CellIndex{i, j});
      const double sx = means(CellIndex{w.c(i, 1), j}) - 2.0 * c + means(CellIndex{w.c(i, -1), j});
      const double sy = means(CellIndex{i, w.r(j, 1)}) - 2.0 * c + means(CellIndex{i, w.r(j, -1)});
      out(CellIndex{i, j}) = c - sx / 24.0 - sy / 24.0;
    }
  }
  return out;
}

CubicRecon gradients_g3(const CellField& means, const CellField& points) {
  const Grid& g = means.grid();
  if (!(points.grid() == g)) throw std::invalid_argument("means and point values live on different grids");
  const std::size_t n = g.cell_count();
  const std::vector<double> zero(n);
  CubicRecon r{g,    std::vector<double>(means.values().begin(), means.values().end()),
               zero, zero, zero, zero, zero, zero, zero, zero, zero, std::vector<double>(n, 1.0)};
  const Wrap w(g);
  const double dx = g.dx();
  const double dy = g.dy();
  const auto pt = [&](int i, int j) { return points(CellIndex{i, j}); };
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(CellIndex{i, j});
      const Line lx = line_x(w, i, j, pt);
      const Line ly = line_y(w, i, j, pt);
      r.ux[k] = d1(lx, dx);
      r.uxx[k] = d2(lx, dx);
      r.uxxx[k] = d3(lx, dx);
      r.uy[k] = d1(ly, dy);
      r.uyy[k] = d2(ly, dy);
      r.uyyy[k] = d3(ly, dy);
    }
  }
  // Mixed derivatives differentiate the pure ones in the other direction.
  const auto of = [&](const std::vector<double>& a) {
    return [&a, &g](int i, int j) { return a[g.index(CellIndex{i, j})]; };
  };
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(CellIndex{i, j});
      r.uxy[k] = d1(line_x(w, i, j, of(r.uy)), dx);
      r.uxxy[k] = d1(line_y(w, i, j, of(r.uxx)), dy);
      r.uxyy[k] = d1(line_x(w, i, j, of(r.uyy)), dx);
    }
  }
  return r;
}

CubicRecon cubic_recon(const CellField& means) { return gradients_g3(means, project_p4(means)); }

std::array<double, 2> trace_offset(const Grid& g, int point) {
  const double hx = 0.5 * g.dx();
  const double hy = 0.5 * g.dy();
  const double gx = g.dx() * kGaussOffset;
  const double gy = g.dy() * kGaussOffset;
  switch (point) {
    case R0: return {hx, -gy};
    case R1: return {hx, gy};
    case L0: return {-hx, -gy};
    case L1: return {-hx, gy};
    case U0: return {-gx, hy};
    case U1: return {gx, hy};
    case D0: return {-gx, -hy};
    case D1: return {gx, -hy};
    default: return {0.0, 0.0};
  }
}

namespace {

constexpr int kCoefficients = 9;

// Weights of (u_x, u_y, u_xx, u_xy, u_yy, u_xxx, u_xxy, u_xyy, u_yyy) at each sample point.
using PointWeights = std::array<std::array<double, kCoefficients>, kTracePointCount>;

PointWeights point_weights(const Grid& g) {
  PointWeights w{};
  const double cx = g.dx() * g.dx() / 12.0;
  const double cy = g.dy() * g.dy() / 12.0;
  for (int p = 0; p < kTracePointCount; ++p) {
    const auto [xi, eta] = trace_offset(g, p);
    w[p] = {xi,
            eta,
            0.5 * (xi * xi - cx),
            xi * eta,
            0.5 * (eta * eta - cy),
            xi * xi * xi / 6.0,
            0.5 * xi * xi * eta,
            0.5 * xi * eta * eta,
            eta * eta * eta / 6.0};
  }
  return w;
}

std::array<double, kTracePointCount> evaluate(const CubicRecon& r, const PointWeights& w, std::size_t k) {
  const double c[kCoefficients] = {r.ux[k],   r.uy[k],   r.uxx[k],  r.uxy[k], r.uyy[k],
                                   r.uxxx[k], r.uxxy[k], r.uxyy[k], r.uyyy[k]};
  std::array<double, kTracePointCount> out{};
  for (int p = 0; p < kTracePointCount; ++p) {
    double dev = 0.0;
    for (int q = 0; q < kCoefficients; ++q) dev += w[p][q] * c[q];
    out[p] = r.mean[k] + dev;
  }
  return out;
}

}  // namespace

std::array<double, kTracePointCount> sample_points(const CubicRecon& r, std::size_t k) {
  return evaluate(r, point_weights(r.grid), k);
}

GaussTraces4 gauss_traces(const CubicRecon& r) {
  const std::size_t n = r.grid.cell_count();
  const PointWeights w = point_weights(r.grid);
  GaussTraces4 t{r.grid, {}};
  for (auto& v : t.values) v.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto p = evaluate(r, w, k);
    const double a = r.alpha[k];
    for (int q = 0; q < kTracePointCount; ++q) {
      t.values[q][k] = a == 1.0 ? p[q] : r.mean[k] + a * (p[q] - r.mean[k]);
    }
  }
  return t;
}

std::vector<std::array<double, kTracePointCount>> all_sample_points(const CubicRecon& r) {
  const PointWeights w = point_weights(r.grid);
  std::vector<std::array<double, kTracePointCount>> out(r.grid.cell_count());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = evaluate(r, w, k);
  return out;
}

double zhang_mean(const GaussTraces4& t, std::size_t k) {
  double faces = 0.0;
  for (int q = R0; q <= D1; ++q) faces += t.values[q][k];
  return 0.5 * t.values[Center][k] + faces / 16.0;
}

double theta_decomposition(const CubicRecon& r, std::size_t k, double theta) {
  const double hx = 0.5 * r.grid.dx();
  const double hy = 0.5 * r.grid.dy();
  const auto p = sample_points(r, k);
  double gauss = 0.0;
  for (int q = R0; q <= D1; ++q) gauss += p[q];
  const double mids =
      r.unlimited_at(k, hx, 0.0) + r.unlimited_at(k, -hx, 0.0) + r.unlimited_at(k, 0.0, hy) + r.unlimited_at(k, 0.0, -hy);
  return 0.5 * theta * p[Center] + (1.0 - theta) / 8.0 * mids + gauss / 16.0;
}

CellTendency fv4_tendency(const GaussTraces4& traces, const QuadVelocity& vel) {
  const Grid& g = traces.grid;
  if (!(vel.grid == g)) throw std::invalid_argument("velocity and traces live on different grids");
  const auto& kt = kernels::active();
  const std::size_t nx = static_cast<std::size_t>(g.nx());
  const std::size_t n = g.cell_count();
  const auto& v = traces.values;

  std::vector<double> fx(n);
  std::vector<double> fy(n);
  std::vector<double> east0(nx);
  std::vector<double> east1(nx);
  const auto row = [nx](const std::vector<double>& a, int j) {
    return std::span<const double>(a).subspan(static_cast<std::size_t>(j) * nx, nx);
  };
  const auto row_mut = [nx](std::vector<double>& a, int j) {
    return std::span<double>(a).subspan(static_cast<std::size_t>(j) * nx, nx);
  };
  for (int j = 0; j < g.ny(); ++j) {
    detail::shift_from_east(row(v[L0], j), east0);
    detail::shift_from_east(row(v[L1], j), east1);
    kt.gauss_pair_flux(row(v[R0], j), east0, row(vel.u[0], j), row(v[R1], j), east1, row(vel.u[1], j),
                       row_mut(fx, j));
    const int jn = (j + 1) % g.ny();
    kt.gauss_pair_flux(row(v[U0], j), row(v[D0], jn), row(vel.v[0], j), row(v[U1], j), row(v[D1], jn),
                       row(vel.v[1], j), row_mut(fy, j));
  }

  CellTendency out(g);
  for (int j = 0; j < g.ny(); ++j) {
    detail::shift_from_west(row(fx, j), east0);
    const int js = (j + g.ny() - 1) % g.ny();
    kt.flux_divergence(row(fx, j), east0, row(fy, j), row(fy, js), g.dx(), g.dy(), out.row(j));
  }
  return out;
}

double fv4_courant(const QuadVelocity& vel, double dt) {
  const Grid& g = vel.grid;
  double worst = 0.0;
  const auto out = [](double a, double b) { return std::max({a, b, 0.0}); };
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(i, j);
      const std::size_t kw = g.index(i - 1, j);
      const std::size_t ks = g.index(i, j - 1);
      const double east = out(vel.u[0][k], vel.u[1][k]);
      const double west = out(-vel.u[0][kw], -vel.u[1][kw]);
      const double north = out(vel.v[0][k], vel.v[1][k]);
      const double south = out(-vel.v[0][ks], -vel.v[1][ks]);
      worst = std::max(worst, dt * ((east + west) / g.dx() + (north + south) / g.dy()));
    }
  }
  return worst;
}

}  // namespace mpfv
