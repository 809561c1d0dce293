#pragma once

#include <vector>

#include "mpfv/field.hpp"
#include "mpfv/velocity.hpp"

namespace mpfv {

/// Piecewise-linear subcell representation p = mean + alpha (u_x (x - x_i) + u_y (y - y_j)).
struct LinearRecon {
  Grid grid;
  std::vector<double> mean;
  std::vector<double> slope_x;
  std::vector<double> slope_y;
  std::vector<double> alpha;

  /// Unlimited value at an offset (dx_off, dy_off) from the centre of cell k.
  double unlimited_at(std::size_t k, double dx_off, double dy_off) const {
    return mean[k] + slope_x[k] * dx_off + slope_y[k] * dy_off;
  }
};

/// Reconstruction values at the four face midpoints of every cell.
/// (right + left + up + down) / 4 equals the cell mean: the cell-mean decomposition of FV2.
struct FaceTraces2 {
  Grid grid;
  std::vector<double> right;
  std::vector<double> left;
  std::vector<double> up;
  std::vector<double> down;
};

/// Centred-difference slopes with periodic wrap; alpha = 1.
LinearRecon central_slopes(const CellField& u);

FaceTraces2 face_traces(const LinearRecon& r);

/// Cell-mean tendency from upwind fluxes at face midpoints. Each face flux is computed once
/// and applied to both neighbours with opposite signs.
CellTendency fv2_tendency(const FaceTraces2& traces, const FaceVelocity& vel);

/// max over cells of dt * sum_faces |sigma| (v.n)+ / |K|. The monotone stage bound for this
/// scheme is 1/4 for compressible flow and 1/2 for incompressible flow.
double fv2_courant(const FaceVelocity& vel, double dt);

inline constexpr double kFv2StageBoundIncompressible = 0.5;
inline constexpr double kFv2StageBoundCompressible = 0.25;

}  // namespace mpfv
