#pragma once

#include <optional>

#include "mpfv/field.hpp"
#include "mpfv/kinds.hpp"
#include "mpfv/limiters.hpp"

namespace mpfv {

enum class Norm { L1, L2, Linf };

struct ErrorReport {
  double rel_l1 = 0.0;
  double rel_l2 = 0.0;
  double rel_linf = 0.0;
  double min_val = 0.0;
  double max_val = 0.0;
  /// Largest per-stage distance outside the limiter's principle; empty for Unlimited.
  std::optional<double> max_mp_violation;
  double max_courant = 0.0;
  /// Largest |mass change| / |mass| over one full step.
  double max_mass_drift = 0.0;
};

/// ||u - exact||_p / ||exact||_p with cell-weighted discrete norms.
double relative_error(const CellField& u, const CellField& exact, Norm p);

/// log2(coarse / fine) for a 2x refinement.
double observed_order(double e_coarse, double e_fine);

/// Neighbourhood whose extrema bound a forward-Euler stage under each limiter.
std::optional<Neighborhood> principle_neighborhood(LimiterKind kind);

/// Largest distance of stage_out outside the limiter's principle bounds computed on stage_in.
/// Empty for Unlimited, which promises nothing.
std::optional<double> mp_check(const CellField& stage_in, const CellField& stage_out, LimiterKind kind,
                               std::optional<Bounds> global_mm = {});

}  // namespace mpfv
