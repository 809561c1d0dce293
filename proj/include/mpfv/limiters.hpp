#pragma once

#include <optional>
#include <vector>

#include "mpfv/field.hpp"
#include "mpfv/fv2.hpp"
#include "mpfv/fv4.hpp"
#include "mpfv/kinds.hpp"

namespace mpfv {

struct Bounds {
  double m = 0.0;
  double M = 0.0;

  bool contains(double x, double slack = 0.0) const { return x >= m - slack && x <= M + slack; }
  /// Distance outside [m, M], 0 inside.
  double excess(double x) const { return x < m ? m - x : (x > M ? x - M : 0.0); }
};

/// Largest a in [0,1] with mean + a (p - mean) inside b. The sign of p - mean is tested exactly.
double bj_factor(double p, double mean, Bounds b);

/// Bounds of a flux point on face f: the two adjacent means (NKMP) or N(K) u N(L) (N2NMP).
Bounds face_bounds(LimiterKind kind, const CellField& u, FaceId f);

/// Cell-level bounds: N(K) u {K} for BJ and NKMP, N^2(K) u N(K) for N2NMP, global_mm for Global.
Bounds cell_bounds(LimiterKind kind, const CellField& u, CellIndex k, std::optional<Bounds> global_mm = {});

/// Min/max over the four cells sharing vertex v.
Bounds vertex_bounds(const CellField& u, VertexId v);

/// Min/max of u over a neighbourhood of every cell, by direct scan.
Bounds neighborhood_bounds(const CellField& u, CellIndex k, Neighborhood kind);

/// Per-cell extrema over a neighbourhood for the whole field.
struct NeighborhoodExtrema {
  std::vector<double> lo;
  std::vector<double> hi;

  Bounds at(std::size_t k) const { return {lo[k], hi[k]}; }
};
NeighborhoodExtrema neighborhood_extrema(const CellField& u, Neighborhood kind);

/// Reference per-cell limiter: alpha for cell k of an unlimited reconstruction of u.
double limit_cell(LimiterKind kind, const LinearRecon& r, const CellField& u, CellIndex k,
                  std::optional<Bounds> global_mm = {});
double limit_cell(LimiterKind kind, const CubicRecon& r, const CellField& u, CellIndex k,
                  std::optional<Bounds> global_mm = {});

/// Sets r.alpha for every cell; same values as limit_cell. r must be unlimited and built from r.mean.
void limit_field(LimiterKind kind, LinearRecon& r, std::optional<Bounds> global_mm = {});
void limit_field(LimiterKind kind, CubicRecon& r, std::optional<Bounds> global_mm = {});

/// Field-wide extrema as Bounds.
Bounds global_bounds(const CellField& u);

}  // namespace mpfv
