#include "mpfv/fv2.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpfv/kernels.hpp"
#include "row_ops.hpp"

namespace mpfv {

LinearRecon central_slopes(const CellField& u) {
  const Grid& g = u.grid();
  const std::size_t n = g.cell_count();
  LinearRecon r{g, std::vector<double>(u.values().begin(), u.values().end()), std::vector<double>(n),
                std::vector<double>(n), std::vector<double>(n, 1.0)};
  const double two_dx = 2.0 * g.dx();
  const double two_dy = 2.0 * g.dy();
  const int nx = g.nx();
  for (int j = 0; j < g.ny(); ++j) {
    const auto c = u.row(j);
    const auto up = u.row(detail::next_index(j, g.ny()));
    const auto down = u.row(detail::prev_index(j, g.ny()));
    double* sx = r.slope_x.data() + static_cast<std::size_t>(j) * nx;
    double* sy = r.slope_y.data() + static_cast<std::size_t>(j) * nx;
    for (int i = 0; i < nx; ++i) {
      sx[i] = (c[detail::next_index(i, nx)] - c[detail::prev_index(i, nx)]) / two_dx;
      sy[i] = (up[i] - down[i]) / two_dy;
    }
  }
  return r;
}

FaceTraces2 face_traces(const LinearRecon& r) {
  const std::size_t n = r.grid.cell_count();
  FaceTraces2 t{r.grid, std::vector<double>(n), std::vector<double>(n), std::vector<double>(n),
                std::vector<double>(n)};
  kernels::active().linear_traces({r.mean, r.slope_x, r.slope_y, r.alpha, t.right, t.left, t.up, t.down},
                                  0.5 * r.grid.dx(), 0.5 * r.grid.dy());
  return t;
}

CellTendency fv2_tendency(const FaceTraces2& traces, const FaceVelocity& vel) {
  const Grid& g = traces.grid;
  if (!(vel.grid == g)) throw std::invalid_argument("velocity and traces live on different grids");
  const auto& kt = kernels::active();
  const std::size_t nx = static_cast<std::size_t>(g.nx());
  const std::size_t n = g.cell_count();

  // fx[k]: flux through the +x face of k in the +x direction; fy[k] likewise in y.
  std::vector<double> fx(n);
  std::vector<double> fy(n);
  std::vector<double> scratch(nx);
  const auto row = [nx](const std::vector<double>& a, int j) {
    return std::span<const double>(a).subspan(static_cast<std::size_t>(j) * nx, nx);
  };
  const auto row_mut = [nx](std::vector<double>& a, int j) {
    return std::span<double>(a).subspan(static_cast<std::size_t>(j) * nx, nx);
  };
  for (int j = 0; j < g.ny(); ++j) {
    detail::shift_from_east(row(traces.left, j), scratch);
    kt.upwind_flux(row(traces.right, j), scratch, row(vel.u, j), row_mut(fx, j));
    const int jn = (j + 1) % g.ny();
    kt.upwind_flux(row(traces.up, j), row(traces.down, jn), row(vel.v, j), row_mut(fy, j));
  }

  CellTendency out(g);
  for (int j = 0; j < g.ny(); ++j) {
    detail::shift_from_west(row(fx, j), scratch);
    const int js = (j + g.ny() - 1) % g.ny();
    kt.flux_divergence(row(fx, j), scratch, row(fy, j), row(fy, js), g.dx(), g.dy(), out.row(j));
  }
  return out;
}

double fv2_courant(const FaceVelocity& vel, double dt) {
  const Grid& g = vel.grid;
  const int nx = g.nx();
  double worst = 0.0;
  for (int j = 0; j < g.ny(); ++j) {
    const double* u = vel.u.data() + static_cast<std::size_t>(j) * nx;
    const double* v = vel.v.data() + static_cast<std::size_t>(j) * nx;
    const double* vs = vel.v.data() + static_cast<std::size_t>(detail::prev_index(j, g.ny())) * nx;
    for (int i = 0; i < nx; ++i) {
      const double east = std::max(u[i], 0.0);
      const double west = std::max(-u[detail::prev_index(i, nx)], 0.0);
      const double north = std::max(v[i], 0.0);
      const double south = std::max(-vs[i], 0.0);
      worst = std::max(worst, dt * ((east + west) / g.dx() + (north + south) / g.dy()));
    }
  }
  return worst;
}

}  // namespace mpfv
