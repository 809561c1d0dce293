#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpfv/cases.hpp"
#include "mpfv/diagnostics.hpp"
#include "mpfv/limiters.hpp"
#include "mpfv/timestepping.hpp"

namespace mpfv {

/// What one stage evaluation observed, filled by SpatialOperator.
struct StageProbe {
  double courant = 0.0;
  /// max |decomposition - mean| / max |mean| over cells.
  double identity_residual = 0.0;
  double min_alpha = 1.0;
};

/// Limit-then-tendency for one scheme and limiter, with velocities scaled by the flow's time factor.
class SpatialOperator {
 public:
  explicit SpatialOperator(const ExperimentSpec& spec);

  CellTendency operator()(const CellField& u, double t, std::optional<Bounds> global_mm, double dt,
                          StageProbe* probe = nullptr) const;

 private:
  ExperimentSpec spec_;
  FaceVelocity faces_;
  std::optional<QuadVelocity> gauss_;
};

struct StageRecord {
  int step = 0;
  int stage = 0;
  double t = 0.0;
  double courant = 0.0;
  std::optional<double> mp_violation;
  double identity_residual = 0.0;
  double min_alpha = 1.0;
  double min_val = 0.0;
  double max_val = 0.0;
};

struct StageContext {
  int step;
  int stage;
  double t;
  const CellField& in;
  const CellField& euler_out;
  std::optional<Bounds> global_mm;
};
using StageHook = std::function<void(const StageContext&)>;

struct RunResult {
  ExperimentSpec spec;
  StepPlan plan;
  CellField initial;
  CellField final_field;
  ErrorReport report;
  /// False when no exact solution is known at end_time; the error norms are then NaN.
  bool has_exact = true;
  std::vector<StageRecord> stages;
  std::vector<std::string> warnings;
};

/// Runs one experiment. Throws std::runtime_error if a stage exceeds the Courant target.
RunResult run_experiment(const ExperimentSpec& spec, const StageHook& hook = {});

/// Monotone forward-Euler stage bound of the scheme for divergence-free flow.
double stage_bound(Scheme s);

}  // namespace mpfv
