#pragma once

#include <functional>
#include <vector>

#include "mpfv/cases.hpp"
#include "mpfv/field.hpp"
#include "mpfv/kinds.hpp"

namespace mpfv {

struct StepPlan {
  double dt = 0.0;
  int n_steps = 0;
  /// Stage times as fractions of dt: {0}, {0, 1} or {0, 1, 1/2}.
  std::vector<double> stage_offsets;
  /// Largest transport rate used to size dt (1/time).
  double rate = 0.0;
};

/// Forward-Euler stage times for the scheme, as fractions of dt.
std::vector<double> stage_offsets(SspScheme s);

/// Largest discrete outflow rate dt^-1 C of the scheme's face velocities at unit time factor.
double discrete_rate(const ExperimentSpec& spec);

/// dt = courant_target / rate, rounded down so that a whole number of steps reaches end_time.
/// rate is the larger of the sampled analytic |u|/dx + |v|/dy and the discrete outflow rate,
/// both at unit time factor. spec.steps, when set, fixes the step count instead.
StepPlan plan_steps(const ExperimentSpec& spec);

/// L(u, t): limit-then-tendency at stage time t.
using StageOperator = std::function<CellTendency(const CellField& u, double t)>;
/// Called after each forward-Euler stage with its input and output (before any convex combination).
using StageObserver = std::function<void(int stage, double t, const CellField& in, const CellField& euler_out)>;

/// One SSP Runge-Kutta step in Shu-Osher form.
CellField ssp_step(SspScheme scheme, const CellField& u, double t, double dt, const StageOperator& op,
                   const StageObserver& observe = {});

}  // namespace mpfv
