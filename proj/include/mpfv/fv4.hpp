#pragma once

#include <array>
#include <vector>

#include "mpfv/field.hpp"
#include "mpfv/velocity.hpp"

namespace mpfv {

/// Piecewise-cubic subcell polynomial
///   p = mean + alpha (q(xi, eta) - mean)
/// with q the cubic whose cell average is mean:
///   q = mean + xi u_x + eta u_y
///     + 1/2 [(xi^2 - dx^2/12) u_xx + 2 xi eta u_xy + (eta^2 - dy^2/12) u_yy]
///     + 1/6 [xi^3 u_xxx + 3 xi^2 eta u_xxy + 3 xi eta^2 u_xyy + eta^3 u_yyy]
/// and (xi, eta) the offset from the cell centre.
struct CubicRecon {
  Grid grid;
  std::vector<double> mean;
  std::vector<double> ux, uy, uxx, uxy, uyy, uxxx, uxxy, uxyy, uyyy;
  std::vector<double> alpha;

  double unlimited_at(std::size_t k, double xi, double eta) const;
  double at(std::size_t k, double xi, double eta) const {
    return mean[k] + alpha[k] * (unlimited_at(k, xi, eta) - mean[k]);
  }
};

/// Fourth-order point values at cell centres from cell means.
CellField project_p4(const CellField& means);

/// Derivatives from centre point values; alpha = 1.
CubicRecon gradients_g3(const CellField& means, const CellField& points);

/// project_p4 followed by gradients_g3.
CubicRecon cubic_recon(const CellField& means);

/// Sample points of the cell-mean decomposition: two Gauss points on each face plus the centre.
/// Face points sit at +-dy/(2 sqrt 3) (vertical faces) or +-dx/(2 sqrt 3) (horizontal faces) from
/// the face midpoint; index 0 is the lower / left one.
enum TracePoint { R0, R1, L0, L1, U0, U1, D0, D1, Center, kTracePointCount };

std::array<double, 2> trace_offset(const Grid& g, int point);

struct GaussTraces4 {
  Grid grid;
  std::array<std::vector<double>, kTracePointCount> values;
};

/// Unlimited subcell values at the nine sample points of cell k. Agrees with unlimited_at to
/// rounding; every limiter and trace computation goes through this one.
std::array<double, kTracePointCount> sample_points(const CubicRecon& r, std::size_t k);
std::vector<std::array<double, kTracePointCount>> all_sample_points(const CubicRecon& r);

/// Limited values at the sample points of every cell.
GaussTraces4 gauss_traces(const CubicRecon& r);

/// 1/2 p(centre) + 1/16 sum over the eight face points; equals the cell mean for any cubic.
double zhang_mean(const GaussTraces4& t, std::size_t k);

/// theta/2 p(centre) + (1 - theta)/8 sum over the four face midpoints + 1/16 sum over the eight
/// Gauss points. Exact only at theta = 1; for theta < 1 it is off by (1 - theta) dx^2/32 per
/// unit u_xx (likewise in y).
double theta_decomposition(const CubicRecon& r, std::size_t k, double theta);

CellTendency fv4_tendency(const GaussTraces4& traces, const QuadVelocity& vel);

/// max over cells of dt * sum over faces of the largest outward Gauss-point speed, divided by the
/// cell width in the face-normal direction.
double fv4_courant(const QuadVelocity& vel, double dt);

inline constexpr double kFv4StageBoundIncompressible = 0.25;
inline constexpr double kFv4StageBoundCompressible = 0.125;

}  // namespace mpfv
