#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "mpfv/grid.hpp"

namespace mpfv {

enum class Stream { Diag, Quad, Sin, Sbr };

/// Incompressible test flows given by a stream function Psi, with (u, v) = (dPsi/dy, -dPsi/dx).
///   Diag: Psi = y - x
///   Quad: Psi = 8 pi x (x-1) y (y-1) cos(pi t / T)
///   Sin:  Psi = 1/2 sin(2 pi x) sin(2 pi y) cos(pi t / T)
///   Sbr:  Psi = -pi ((x-xc)^2 + (y-yc)^2), counterclockwise rotation with period 1
struct StreamCase {
  Stream variant = Stream::Diag;
  double period = 1.0;
  double xc = 0.5;
  double yc = 0.5;

  /// cos(pi t / T) for the reversing flows, 1 otherwise. Exactly 0 at t = T/2 and -1 at t = T.
  double time_factor(double t) const;
  /// Psi without the time factor.
  double base_stream(double x, double y) const;
  double stream(double x, double y, double t) const { return base_stream(x, y) * time_factor(t); }
  bool reversing() const { return variant == Stream::Quad || variant == Stream::Sin; }
};

struct Vec2 {
  double u = 0.0;
  double v = 0.0;
};

/// C-grid face-normal speeds. u[index(i,j)] lives on the vertical face x_{i+1/2} of row j,
/// v[index(i,j)] on the horizontal face y_{j+1/2} of column i.
struct FaceVelocity {
  Grid grid;
  std::vector<double> u;
  std::vector<double> v;
  double time_factor = 1.0;

  FaceVelocity scaled(double factor) const;
};

/// Normal speeds at the two Gauss points of every face. For the vertical face owned by cell k,
/// u[q][index(k)] is sampled at (x_{i+1/2}, y_j -+ dy/(2 sqrt 3)) with q = 0 the lower point;
/// horizontal faces store v[q] at (x_i -+ dx/(2 sqrt 3), y_{j+1/2}) with q = 0 the left point.
struct QuadVelocity {
  Grid grid;
  std::array<std::vector<double>, 2> u;
  std::array<std::vector<double>, 2> v;
  double time_factor = 1.0;

  QuadVelocity scaled(double factor) const;
};

/// Transverse offset of the two face Gauss points from the face midpoint, in units of the cell width.
inline constexpr double kGaussOffset = 0.28867513459481288225;  // 1 / (2 sqrt 3)

Vec2 analytic_velocity(const StreamCase& c, double x, double y, double t);

/// Face speeds from vertex differences of Psi; discretely divergence free by telescoping.
FaceVelocity cgrid_faces(const StreamCase& c, const Grid& g, double t);

QuadVelocity quad_velocity(const StreamCase& c, const Grid& g, double t);

/// (u_{i+1/2} - u_{i-1/2}) / dx + (v_{j+1/2} - v_{j-1/2}) / dy
double discrete_divergence(const FaceVelocity& vel, CellIndex k);

/// Largest |u|/dx + |v|/dy of the analytic field at unit time factor, sampled at cell
/// vertices, centres and face Gauss points. Used to size the time step.
double max_transport_rate(const StreamCase& c, const Grid& g);

std::string_view to_string(Stream s);
Stream parse_stream(std::string_view name);

}  // namespace mpfv
