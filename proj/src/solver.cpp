#include "mpfv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "mpfv/fv2.hpp"
#include "mpfv/fv4.hpp"

namespace mpfv {

namespace {

double scale_of(const std::vector<double>& mean) {
  double s = 0.0;
  for (const double v : mean) s = std::max(s, std::abs(v));
  return s > 0.0 ? s : 1.0;
}

}  // namespace

double stage_bound(Scheme s) {
  return s == Scheme::FV2 ? kFv2StageBoundIncompressible : kFv4StageBoundIncompressible;
}

SpatialOperator::SpatialOperator(const ExperimentSpec& spec)
    : spec_(spec), faces_(cgrid_faces(spec.stream, spec.grid(), 0.0)) {
  // The time factor is exactly 1 at t = 0, so these are unit-amplitude fields scaled per stage.
  if (spec.scheme == Scheme::FV4) gauss_ = quad_velocity(spec.stream, spec.grid(), 0.0);
}

CellTendency SpatialOperator::operator()(const CellField& u, double t, std::optional<Bounds> global_mm, double dt,
                                         StageProbe* probe) const {
  const double factor = spec_.stream.time_factor(t);
  if (spec_.scheme == Scheme::FV2) {
    LinearRecon r = central_slopes(u);
    limit_field(spec_.limiter, r, global_mm);
    const FaceTraces2 tr = face_traces(r);
    const FaceVelocity vel = faces_.scaled(factor);
    if (probe) {
      probe->courant = fv2_courant(vel, dt);
      const double scale = scale_of(r.mean);
      double worst = 0.0;
      for (std::size_t k = 0; k < r.mean.size(); ++k) {
        const double m = (tr.right[k] + tr.left[k] + tr.up[k] + tr.down[k]) / 4.0;
        worst = std::max(worst, std::abs(m - r.mean[k]) / scale);
      }
      probe->identity_residual = worst;
      probe->min_alpha = *std::min_element(r.alpha.begin(), r.alpha.end());
    }
    return fv2_tendency(tr, vel);
  }
  CubicRecon r = cubic_recon(u);
  limit_field(spec_.limiter, r, global_mm);
  const GaussTraces4 tr = gauss_traces(r);
  const QuadVelocity vel = gauss_->scaled(factor);
  if (probe) {
    probe->courant = fv4_courant(vel, dt);
    const double scale = scale_of(r.mean);
    double worst = 0.0;
    for (std::size_t k = 0; k < r.mean.size(); ++k) {
      worst = std::max(worst, std::abs(zhang_mean(tr, k) - r.mean[k]) / scale);
    }
    probe->identity_residual = worst;
    probe->min_alpha = *std::min_element(r.alpha.begin(), r.alpha.end());
  }
  return fv4_tendency(tr, vel);
}

RunResult run_experiment(const ExperimentSpec& spec, const StageHook& hook) {
  spec.validate();
  const Grid g = spec.grid();
  RunResult res{spec, plan_steps(spec), init_cell_means(spec.ic, g, spec.init), CellField(g), {}, true, {}, {}};
  if (spec.courant_target > stage_bound(spec.scheme)) {
    std::ostringstream msg;
    msg << "courant target " << spec.courant_target << " exceeds the " << to_string(spec.scheme)
        << " stage bound " << stage_bound(spec.scheme) << " for divergence-free flow";
    res.warnings.push_back(msg.str());
  }

  const SpatialOperator op(spec);
  ErrorReport& rep = res.report;
  CellField u = res.initial;
  const double limit = spec.courant_target + 1e-12;

  for (int n = 0; n < res.plan.n_steps; ++n) {
    const double t = n * res.plan.dt;
    const std::optional<Bounds> global_mm =
        spec.limiter == LimiterKind::Global ? std::optional<Bounds>(global_bounds(u)) : std::nullopt;
    StageProbe probe;
    const StageOperator stage_op = [&](const CellField& in, double ts) {
      return op(in, ts, global_mm, res.plan.dt, &probe);
    };
    const StageObserver observe = [&](int s, double ts, const CellField& in, const CellField& out) {
      if (probe.courant > limit) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "stage Courant number " << probe.courant << " exceeds target " << spec.courant_target << " at t = " << ts;
        throw std::runtime_error(msg.str());
      }
      StageRecord rec{n, s, ts, probe.courant, mp_check(in, out, spec.limiter, global_mm),
                      probe.identity_residual, probe.min_alpha, out.min(), out.max()};
      rep.max_courant = std::max(rep.max_courant, rec.courant);
      if (rec.mp_violation) rep.max_mp_violation = std::max(rep.max_mp_violation.value_or(0.0), *rec.mp_violation);
      res.stages.push_back(rec);
      if (hook) hook(StageContext{n, s, ts, in, out, global_mm});
    };
    const double mass_before = u.mass();
    u = ssp_step(spec.ssp, u, t, res.plan.dt, stage_op, observe);
    const double mass_after = u.mass();
    const double denom = std::abs(mass_before) > 0.0 ? std::abs(mass_before) : 1.0;
    rep.max_mass_drift = std::max(rep.max_mass_drift, std::abs(mass_after - mass_before) / denom);
  }
  if (spec.limiter != LimiterKind::Unlimited && !rep.max_mp_violation) rep.max_mp_violation = 0.0;

  res.final_field = u;
  rep.min_val = u.min();
  rep.max_val = u.max();
  try {
    const CellField exact = exact_solution(spec, spec.end_time);
    rep.rel_l1 = relative_error(u, exact, Norm::L1);
    rep.rel_l2 = relative_error(u, exact, Norm::L2);
    rep.rel_linf = relative_error(u, exact, Norm::Linf);
  } catch (const std::invalid_argument& e) {
    res.has_exact = false;
    rep.rel_l1 = rep.rel_l2 = rep.rel_linf = std::numeric_limits<double>::quiet_NaN();
    res.warnings.push_back(std::string("no error norms: ") + e.what());
  }
  return res;
}

}  // namespace mpfv
