#include "mpfv/timestepping.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mpfv/fv2.hpp"
#include "mpfv/fv4.hpp"
#include "mpfv/kernels.hpp"

namespace mpfv {

namespace {

CellField euler(const CellField& u, double dt, const CellTendency& l) {
  CellField out(u.grid());
  kernels::active().axpy(u.values(), dt, l.values(), out.values());
  return out;
}

CellField mix(double a, const CellField& x, double b, const CellField& y) {
  CellField out(x.grid());
  kernels::active().combine(a, x.values(), b, y.values(), out.values());
  return out;
}

}  // namespace

std::vector<double> stage_offsets(SspScheme s) {
  switch (s) {
    case SspScheme::FE:
      return {0.0};
    case SspScheme::SSP22:
      return {0.0, 1.0};
    case SspScheme::SSP33:
      return {0.0, 1.0, 0.5};
  }
  return {};
}

double discrete_rate(const ExperimentSpec& spec) {
  const Grid g = spec.grid();
  // courant(dt = 1) is the outflow rate.
  if (spec.scheme == Scheme::FV2) return fv2_courant(cgrid_faces(spec.stream, g, 0.0), 1.0);
  return fv4_courant(quad_velocity(spec.stream, g, 0.0), 1.0);
}

StepPlan plan_steps(const ExperimentSpec& spec) {
  spec.validate();
  StepPlan plan;
  plan.stage_offsets = stage_offsets(spec.ssp);
  plan.rate = std::max(max_transport_rate(spec.stream, spec.grid()), discrete_rate(spec));
  if (spec.end_time == 0.0) return plan;
  if (spec.steps) {
    plan.n_steps = *spec.steps;
    plan.dt = spec.end_time / plan.n_steps;
    return plan;
  }
  if (!(plan.rate > 0.0)) throw std::invalid_argument("velocity field is zero; the time step is unbounded");
  const double dt_raw = spec.courant_target / plan.rate;
  plan.n_steps = static_cast<int>(std::ceil(spec.end_time / dt_raw));
  plan.dt = spec.end_time / plan.n_steps;
  return plan;
}

CellField ssp_step(SspScheme scheme, const CellField& u, double t, double dt, const StageOperator& op,
                   const StageObserver& observe) {
  const auto stage = [&](int s, const CellField& in, double ts) {
    CellField out = euler(in, dt, op(in, ts));
    if (observe) observe(s, ts, in, out);
    return out;
  };
  switch (scheme) {
    case SspScheme::FE:
      return stage(0, u, t);
    case SspScheme::SSP22: {
      const CellField u1 = stage(0, u, t);
      return mix(0.5, u, 0.5, stage(1, u1, t + dt));
    }
    case SspScheme::SSP33: {
      const CellField u1 = stage(0, u, t);
      const CellField u2 = mix(0.75, u, 0.25, stage(1, u1, t + dt));
      return mix(1.0 / 3.0, u, 2.0 / 3.0, stage(2, u2, t + 0.5 * dt));
    }
  }
  throw std::invalid_argument("unknown SSP scheme");
}

}  // namespace mpfv
