#include "mpfv/velocity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mpfv {

namespace {

constexpr double kPi = std::numbers::pi;

// Diag's stream function is not periodic; it is split into a zero periodic part plus this
// uniform transport so the C-grid construction only ever differences periodic vertex data.
Vec2 uniform_flow(const StreamCase& c) { return c.variant == Stream::Diag ? Vec2{1.0, 1.0} : Vec2{}; }

double periodic_stream(const StreamCase& c, double x, double y) {
  return c.variant == Stream::Diag ? 0.0 : c.base_stream(x, y);
}

}  // namespace

double StreamCase::time_factor(double t) const {
  if (!reversing()) return 1.0;
  // cos(pi s) written as sin(pi (1/2 - s)) so the reversal instant gives an exact zero.
  return std::sin(kPi * (0.5 - t / period));
}

double StreamCase::base_stream(double x, double y) const {
  switch (variant) {
    case Stream::Diag:
      return y - x;
    case Stream::Quad:
      return 8.0 * kPi * x * (x - 1.0) * y * (y - 1.0);
    case Stream::Sin:
      return 0.5 * std::sin(2.0 * kPi * x) * std::sin(2.0 * kPi * y);
    case Stream::Sbr: {
      const double rx = x - xc;
      const double ry = y - yc;
      return -kPi * (rx * rx + ry * ry);
    }
  }
  return 0.0;
}

FaceVelocity FaceVelocity::scaled(double factor) const {
  FaceVelocity out{grid, u, v, time_factor * factor};
  for (auto& s : out.u) s *= factor;
  for (auto& s : out.v) s *= factor;
  return out;
}

QuadVelocity QuadVelocity::scaled(double factor) const {
  QuadVelocity out{grid, u, v, time_factor * factor};
  for (int q = 0; q < 2; ++q) {
    for (auto& s : out.u[q]) s *= factor;
    for (auto& s : out.v[q]) s *= factor;
  }
  return out;
}

Vec2 analytic_velocity(const StreamCase& c, double x, double y, double t) {
  const double g = c.time_factor(t);
  switch (c.variant) {
    case Stream::Diag:
      return {1.0, 1.0};
    case Stream::Quad:
      return {8.0 * kPi * x * (x - 1.0) * (2.0 * y - 1.0) * g, -8.0 * kPi * (2.0 * x - 1.0) * y * (y - 1.0) * g};
    case Stream::Sin: {
      const double sx = std::sin(2.0 * kPi * x);
      const double cx = std::cos(2.0 * kPi * x);
      const double sy = std::sin(2.0 * kPi * y);
      const double cy = std::cos(2.0 * kPi * y);
      return {kPi * sx * cy * g, -kPi * cx * sy * g};
    }
    case Stream::Sbr:
      return {-2.0 * kPi * (y - c.yc), 2.0 * kPi * (x - c.xc)};
  }
  return {};
}

FaceVelocity cgrid_faces(const StreamCase& c, const Grid& g, double t) {
  const int nx = g.nx();
  const int ny = g.ny();
  // psi[index(i,j)] samples the vertex (x_{i+1/2}, y_{j+1/2}).
  std::vector<double> psi(g.cell_count());
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) psi[g.index(CellIndex{i, j})] = periodic_stream(c, g.x_edge(i), g.y_edge(j));
  }
  const Vec2 mean = uniform_flow(c);
  const double factor = c.time_factor(t);
  FaceVelocity vel{g, std::vector<double>(g.cell_count()), std::vector<double>(g.cell_count()), factor};
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const double top_right = psi[g.index(i, j)];
      const double bottom_right = psi[g.index(i, j - 1)];
      const double top_left = psi[g.index(i - 1, j)];
      const std::size_t k = g.index(CellIndex{i, j});
      vel.u[k] = ((top_right - bottom_right) / g.dy() + mean.u) * factor;
      vel.v[k] = (-(top_right - top_left) / g.dx() + mean.v) * factor;
    }
  }
  return vel;
}

QuadVelocity quad_velocity(const StreamCase& c, const Grid& g, double t) {
  const double factor = c.time_factor(t);
  // Evaluate at unit time factor and scale, matching cgrid_faces.
  const double t_unit = 0.0;
  QuadVelocity vel{g, {}, {}, factor};
  for (int q = 0; q < 2; ++q) {
    vel.u[q].resize(g.cell_count());
    vel.v[q].resize(g.cell_count());
  }
  const double oy = g.dy() * kGaussOffset;
  const double ox = g.dx() * kGaussOffset;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const std::size_t k = g.index(CellIndex{i, j});
      const double xe = g.x_edge(i);
      const double ye = g.y_edge(j);
      const double xm = g.x_center(i);
      const double ym = g.y_center(j);
      vel.u[0][k] = analytic_velocity(c, xe, ym - oy, t_unit).u * factor;
      vel.u[1][k] = analytic_velocity(c, xe, ym + oy, t_unit).u * factor;
      vel.v[0][k] = analytic_velocity(c, xm - ox, ye, t_unit).v * factor;
      vel.v[1][k] = analytic_velocity(c, xm + ox, ye, t_unit).v * factor;
    }
  }
  return vel;
}

double discrete_divergence(const FaceVelocity& vel, CellIndex k) {
  const Grid& g = vel.grid;
  const double du = vel.u[g.index(k.i, k.j)] - vel.u[g.index(k.i - 1, k.j)];
  const double dv = vel.v[g.index(k.i, k.j)] - vel.v[g.index(k.i, k.j - 1)];
  return du / g.dx() + dv / g.dy();
}

double max_transport_rate(const StreamCase& c, const Grid& g) {
  const double t_unit = 0.0;
  double rate = 0.0;
  const auto sample = [&](double x, double y) {
    const Vec2 w = analytic_velocity(c, x, y, t_unit);
    rate = std::max(rate, std::abs(w.u) / g.dx() + std::abs(w.v) / g.dy());
  };
  const double ox = g.dx() * kGaussOffset;
  const double oy = g.dy() * kGaussOffset;
  for (int j = -1; j < g.ny(); ++j) {
    for (int i = -1; i < g.nx(); ++i) {
      sample(g.x_edge(i), g.y_edge(j));
      if (i < 0 || j < 0) continue;
      const double xm = g.x_center(i);
      const double ym = g.y_center(j);
      sample(xm, ym);
      sample(g.x_edge(i), ym - oy);
      sample(g.x_edge(i), ym + oy);
      sample(xm - ox, g.y_edge(j));
      sample(xm + ox, g.y_edge(j));
    }
  }
  return rate;
}

std::string_view to_string(Stream s) {
  switch (s) {
    case Stream::Diag:
      return "diag";
    case Stream::Quad:
      return "quad";
    case Stream::Sin:
      return "sin";
    case Stream::Sbr:
      return "sbr";
  }
  return "?";
}

Stream parse_stream(std::string_view name) {
  for (const Stream s : {Stream::Diag, Stream::Quad, Stream::Sin, Stream::Sbr}) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown case '" + std::string(name) + "' (expected diag, quad, sin or sbr)");
}

}  // namespace mpfv
