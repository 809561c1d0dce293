#include "mpfv/suite.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mpfv/fv2.hpp"
#include "mpfv/fv4.hpp"
#include "mpfv/io.hpp"

namespace mpfv::suite {

namespace {

constexpr std::array<Stream, 4> kStreams = {Stream::Diag, Stream::Quad, Stream::Sin, Stream::Sbr};
constexpr double kMpTolerance = 1e-12;

std::string fmt(double x, int digits = 6) {
  std::ostringstream o;
  o << std::setprecision(digits) << x;
  return o.str();
}

std::string verdict(bool ok) { return ok ? "ok" : "FAIL"; }

// alpha_BJ <= alpha_N2N over every cell of u, for the scheme's reconstruction.
DominanceCount dominance_on(Scheme scheme, const CellField& u) {
  DominanceCount c;
  std::vector<double> bj;
  std::vector<double> n2n;
  if (scheme == Scheme::FV2) {
    LinearRecon a = central_slopes(u);
    LinearRecon b = a;
    limit_field(LimiterKind::BJ, a);
    limit_field(LimiterKind::N2NMP, b);
    bj = std::move(a.alpha);
    n2n = std::move(b.alpha);
  } else {
    CubicRecon a = cubic_recon(u);
    CubicRecon b = a;
    limit_field(LimiterKind::BJ, a);
    limit_field(LimiterKind::N2NMP, b);
    bj = std::move(a.alpha);
    n2n = std::move(b.alpha);
  }
  for (std::size_t k = 0; k < bj.size(); ++k) {
    ++c.cells;
    if (bj[k] > n2n[k]) ++c.violations;
  }
  return c;
}

bool tracks_dominance(const ExperimentSpec& s) {
  return s.stream.variant == Stream::Sbr && s.ic == InitialShape::LeVeque && s.limiter == LimiterKind::N2NMP;
}

struct OrderRow {
  LimiterKind limiter;
  std::array<double, 4> published;
};

// Observed order table over the four cases for one scheme and limiter.
struct Orders {
  std::array<double, 4> l1{}, l2{}, linf{};
};

Orders orders_for(Context& ctx, Scheme scheme, LimiterKind limiter, int coarse) {
  Orders o;
  for (std::size_t c = 0; c < kStreams.size(); ++c) {
    const RunResult& a = ctx.run(convergence_spec(scheme, limiter, kStreams[c], coarse));
    const RunResult& b = ctx.run(convergence_spec(scheme, limiter, kStreams[c], 2 * coarse));
    o.l1[c] = observed_order(a.report.rel_l1, b.report.rel_l1);
    o.l2[c] = observed_order(a.report.rel_l2, b.report.rel_l2);
    o.linf[c] = observed_order(a.report.rel_linf, b.report.rel_linf);
  }
  return o;
}

Result fv2_orders(Context& ctx, const std::string& id, const std::string& title, const std::vector<OrderRow>& rows,
                  bool below_one) {
  Result r{id, title, true, {}, "limiter,case,order_l2,published,tolerance,pass\n"};
  for (const OrderRow& row : rows) {
    const Orders o = orders_for(ctx, Scheme::FV2, row.limiter, 128);
    for (std::size_t c = 0; c < kStreams.size(); ++c) {
      bool ok = std::abs(o.l2[c] - row.published[c]) <= 0.2;
      if (below_one) ok = ok && o.l2[c] < 1.0;
      r.passed = r.passed && ok;
      r.details.push_back(std::string(to_string(row.limiter)) + " " + std::string(to_string(kStreams[c])) +
                          ": L2 order " + fmt(o.l2[c], 4) + " (published " + fmt(row.published[c], 4) + ") " +
                          verdict(ok));
      r.table += std::string(to_string(row.limiter)) + "," + std::string(to_string(kStreams[c])) + "," +
                 io::format_double(o.l2[c]) + "," + io::format_double(row.published[c]) + ",0.2," + (ok ? "1" : "0") +
                 "\n";
    }
  }
  return r;
}

Result criterion_fv2_convergence(Context& ctx) {
  return fv2_orders(ctx, "fv2-convergence", "FV2 limited L2 orders at 128->256",
                    {{LimiterKind::BJ, {1.677, 2.082, 2.071, 1.672}},
                     {LimiterKind::N2NMP, {1.676, 2.087, 2.077, 1.669}},
                     {LimiterKind::Kuzmin, {1.685, 2.087, 2.063, 1.676}}},
                    false);
}

Result criterion_nk_collapse(Context& ctx) {
  return fv2_orders(ctx, "nk-collapse", "NK_MP order collapse below 1",
                    {{LimiterKind::NKMP, {0.653, 0.813, 0.659, 0.799}}}, true);
}

Result criterion_fv4_convergence(Context& ctx) {
  Result r{"fv4-convergence", "FV4 unlimited orders in L1, L2, Linf at 128->256", true, {},
           "norm,case,order,published,tolerance,pass\n"};
  const std::array<std::array<double, 4>, 3> published = {{{3.806, 4.153, 3.870, 4.070},
                                                       {3.735, 4.050, 3.716, 4.033},
                                                       {3.836, 3.552, 3.371, 4.215}}};
  const Orders o = orders_for(ctx, Scheme::FV4, LimiterKind::Unlimited, 128);
  const std::array<const std::array<double, 4>*, 3> got = {&o.l1, &o.l2, &o.linf};
  const char* names[3] = {"L1", "L2", "Linf"};
  for (int n = 0; n < 3; ++n) {
    for (std::size_t c = 0; c < kStreams.size(); ++c) {
      const double v = (*got[n])[c];
      bool ok = std::abs(v - published[n][c]) <= 0.4;
      if (n == 1) ok = ok && v >= 3.3;
      r.passed = r.passed && ok;
      r.details.push_back(std::string(names[n]) + " " + std::string(to_string(kStreams[c])) + ": order " +
                          fmt(v, 4) + " (published " + fmt(published[n][c], 4) + ") " + verdict(ok));
      r.table += std::string(names[n]) + "," + std::string(to_string(kStreams[c])) + "," + io::format_double(v) +
                 "," + io::format_double(published[n][c]) + ",0.4," + (ok ? "1" : "0") + "\n";
    }
  }
  return r;
}

Result criterion_fv2_sbr(Context& ctx) {
  Result r{"fv2-sbr", "FV2 solid-body LeVeque error norms and extrema at 100^2, 1256 steps", true, {},
           "limiter,rel_l1,rel_l2,rel_linf,published_l1,published_l2,published_linf,min,max,published_max\n"};
  struct Row {
    LimiterKind limiter;
    std::array<double, 3> published;
    double published_max;
  };
  const Row rows[3] = {{LimiterKind::N2NMP, {0.321384, 0.368622, 0.849103}, 0.987959},
                       {LimiterKind::BJ, {0.323794, 0.369762, 0.847545}, 0.985203},
                       {LimiterKind::Kuzmin, {0.334256, 0.372376, 0.813771}, 0.956218}};
  double maxima[3] = {};
  for (int k = 0; k < 3; ++k) {
    const RunResult& res = ctx.run(sbr_spec(Scheme::FV2, rows[k].limiter, 100, 0.5));
    const ErrorReport& e = res.report;
    const double got[3] = {e.rel_l1, e.rel_l2, e.rel_linf};
    const char* names[3] = {"L1", "L2", "Linf"};
    for (int n = 0; n < 3; ++n) {
      const double rel = std::abs(got[n] - rows[k].published[n]) / rows[k].published[n];
      const bool ok = rel <= 0.05;
      r.passed = r.passed && ok;
      r.details.push_back(std::string(to_string(rows[k].limiter)) + " " + names[n] + ": " + fmt(got[n]) +
                          " (published " + fmt(rows[k].published[n]) + ", off " + fmt(100.0 * rel, 3) + "%) " + verdict(ok));
    }
    const bool min_ok = std::abs(e.min_val) <= 1e-12;
    const bool max_ok = e.max_val <= 1.0 + 1e-12;
    r.passed = r.passed && min_ok && max_ok;
    r.details.push_back(std::string(to_string(rows[k].limiter)) + " min " + fmt(e.min_val, 17) + " " +
                        verdict(min_ok) + ", max " + fmt(e.max_val, 8) + " (published " + fmt(rows[k].published_max) + ") " +
                        verdict(max_ok) + ", steps " + std::to_string(res.plan.n_steps) + ", max Courant " +
                        fmt(e.max_courant, 5));
    maxima[k] = e.max_val;
    r.table += std::string(to_string(rows[k].limiter)) + "," + io::format_double(e.rel_l1) + "," +
               io::format_double(e.rel_l2) + "," + io::format_double(e.rel_linf) + "," +
               io::format_double(rows[k].published[0]) + "," + io::format_double(rows[k].published[1]) + "," +
               io::format_double(rows[k].published[2]) + "," + io::format_double(e.min_val) + "," +
               io::format_double(e.max_val) + "," + io::format_double(rows[k].published_max) + "\n";
  }
  const bool order_ok = maxima[0] >= maxima[1] && maxima[1] >= maxima[2];
  r.passed = r.passed && order_ok;
  r.details.push_back("max ordering N2N >= BJ >= KUZ: " + verdict(order_ok));
  return r;
}

std::vector<ExperimentSpec> mp_runs() {
  std::vector<ExperimentSpec> out;
  for (const LimiterKind l : {LimiterKind::BJ, LimiterKind::N2NMP, LimiterKind::Kuzmin, LimiterKind::NKMP}) {
    for (const Stream s : kStreams) {
      for (const int n : {128, 256}) out.push_back(convergence_spec(Scheme::FV2, l, s, n));
    }
  }
  for (const LimiterKind l : {LimiterKind::N2NMP, LimiterKind::BJ, LimiterKind::Kuzmin}) {
    out.push_back(sbr_spec(Scheme::FV2, l, 100, 0.5));
  }
  for (const LimiterKind l : {LimiterKind::BJ, LimiterKind::NKMP, LimiterKind::N2NMP, LimiterKind::Global}) {
    out.push_back(sbr_spec(Scheme::FV4, l, 100, 0.5));
    out.push_back(sbr_spec(Scheme::FV4, l, 200, 0.3));
  }
  return out;
}

Result criterion_mp(Context& ctx) {
  Result r{"mp", "Per-stage maximum principles to 1e-12", true, {},
           "scheme,limiter,case,n,courant_target,stages,max_violation,pass\n"};
  for (const ExperimentSpec& s : mp_runs()) {
    const RunResult& res = ctx.run(s);
    const double v = res.report.max_mp_violation.value_or(0.0);
    const bool ok = v <= kMpTolerance;
    r.passed = r.passed && ok;
    const std::string name = std::string(to_string(s.scheme)) + " " + std::string(to_string(s.limiter)) + " " +
                             std::string(to_string(s.stream.variant)) + " " + std::to_string(s.nx) + "^2 CN " +
                             fmt(s.courant_target, 3);
    if (!ok) {
      long long bad = 0;
      for (const StageRecord& st : res.stages) bad += st.mp_violation.value_or(0.0) > kMpTolerance;
      r.details.push_back(name + ": max violation " + fmt(v, 4) + " in " + std::to_string(bad) + " of " +
                          std::to_string(res.stages.size()) + " stages FAIL");
    } else {
      r.details.push_back(name + ": max violation " + fmt(v, 4) + " ok");
    }
    r.table += std::string(to_string(s.scheme)) + "," + std::string(to_string(s.limiter)) + "," +
               std::string(to_string(s.stream.variant)) + "," + std::to_string(s.nx) + "," +
               io::format_double(s.courant_target) + "," + std::to_string(res.stages.size()) + "," +
               io::format_double(v) + "," + (ok ? "1" : "0") + "\n";
  }
  return r;
}

CellField random_field(const Grid& g, std::mt19937_64& rng, int kind) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  CellField u(g);
  const double a = uni(rng) * 6.0 + 1.0;
  const double b = uni(rng) * 6.0 + 1.0;
  for (std::size_t k = 0; k < g.cell_count(); ++k) {
    const CellIndex c = g.cell(k);
    switch (kind % 3) {
      case 0:  // white noise
        u[k] = uni(rng);
        break;
      case 1:  // smooth with noise
        u[k] = std::sin(a * g.x_center(c.i) * 6.283185307179586) * std::cos(b * g.y_center(c.j) * 6.283185307179586) +
               0.05 * uni(rng);
        break;
      default:  // sparse spikes
        u[k] = uni(rng) < 0.1 ? uni(rng) * 10.0 - 5.0 : 0.0;
        break;
    }
  }
  return u;
}

Result criterion_dominance(Context& ctx) {
  Result r{"dominance", "alpha_BJ <= alpha_N2N per cell", true, {}, "source,scheme,cells,violations\n"};
  std::mt19937_64 rng(20240607);
  for (const Scheme scheme : {Scheme::FV2, Scheme::FV4}) {
    DominanceCount total;
    for (int f = 0; f < 50; ++f) {
      const DominanceCount c = dominance_on(scheme, random_field(Grid(24, 24), rng, f));
      total.cells += c.cells;
      total.violations += c.violations;
    }
    const bool ok = total.violations == 0;
    r.passed = r.passed && ok;
    r.details.push_back("50 random fields, " + std::string(to_string(scheme)) + ": " +
                        std::to_string(total.violations) + " counterexamples in " + std::to_string(total.cells) +
                        " cells " + verdict(ok));
    r.table += "random," + std::string(to_string(scheme)) + "," + std::to_string(total.cells) + "," +
               std::to_string(total.violations) + "\n";
  }
  for (const Scheme scheme : {Scheme::FV2, Scheme::FV4}) {
    const ExperimentSpec s = sbr_spec(scheme, LimiterKind::N2NMP, 100, 0.5);
    ctx.run(s);
    const DominanceCount* c = ctx.dominance(s);
    const bool ok = c && c->violations == 0;
    r.passed = r.passed && ok;
    r.details.push_back("every stage of the " + std::string(to_string(scheme)) + " solid-body run: " +
                        (c ? std::to_string(c->violations) + " counterexamples in " + std::to_string(c->cells) +
                                 " cell-stages "
                           : std::string("no data ")) +
                        verdict(ok));
    if (c) {
      r.table += "sbr," + std::string(to_string(scheme)) + "," + std::to_string(c->cells) + "," +
                 std::to_string(c->violations) + "\n";
    }
  }
  return r;
}

// --- structural identities -------------------------------------------------------------

struct Check {
  Result& r;
  void operator()(bool ok, const std::string& what) {
    r.passed = r.passed && ok;
    r.details.push_back(what + " " + verdict(ok));
  }
};

double cgrid_divergence(Stream s, int n) {
  StreamCase c;
  c.variant = s;
  const Grid g(n, n);
  const FaceVelocity vel = cgrid_faces(c, g, 0.0);
  const double rate = max_transport_rate(c, g);
  double worst = 0.0;
  for (std::size_t k = 0; k < g.cell_count(); ++k) {
    worst = std::max(worst, std::abs(discrete_divergence(vel, g.cell(k))) / rate);
  }
  return worst;
}

// Largest |Q4 sample - f| over interior cells for a random cubic, relative to max |f|.
double cubic_exactness(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double c[4][4] = {};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; a + b < 4; ++b) c[a][b] = uni(rng);
  }
  const auto f = [&](double x, double y) {
    const double X = x - 0.5;
    const double Y = y - 0.5;
    double s = 0.0;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; a + b < 4; ++b) s += c[a][b] * std::pow(X, a) * std::pow(Y, b);
    }
    return s;
  };
  const Grid g(32, 32);
  const CellField means = cell_means_of(g, InitMode::Gauss3x3, f);
  const CellField points = project_p4(means);
  const CubicRecon rec = gradients_g3(means, points);
  double worst = 0.0;
  double scale = 0.0;
  for (int j = 8; j < 24; ++j) {
    for (int i = 8; i < 24; ++i) {
      const std::size_t k = g.index(CellIndex{i, j});
      const double xc = g.x_center(i);
      const double yc = g.y_center(j);
      worst = std::max(worst, std::abs(points[k] - f(xc, yc)));
      const auto p = sample_points(rec, k);
      for (int q = 0; q < kTracePointCount; ++q) {
        const auto [xi, eta] = trace_offset(g, q);
        worst = std::max(worst, std::abs(p[q] - f(xc + xi, yc + eta)));
        scale = std::max(scale, std::abs(f(xc + xi, yc + eta)));
      }
    }
  }
  return worst / std::max(scale, 1.0);
}

// Largest |u - c| after 20 SSP steps from the constant c.
double constancy_drift(Scheme scheme, LimiterKind limiter, Stream stream) {
  ExperimentSpec s = make_spec(scheme, limiter, stream, InitialShape::CosBump, 32, 0.4, 1.0);
  const StepPlan plan = plan_steps(s);
  const SpatialOperator op(s);
  const double c = 0.7;
  CellField u(s.grid(), c);
  for (int n = 0; n < 20; ++n) {
    const double t = n * plan.dt;
    const std::optional<Bounds> gm =
        limiter == LimiterKind::Global ? std::optional<Bounds>(global_bounds(u)) : std::nullopt;
    u = ssp_step(s.ssp, u, t, plan.dt, [&](const CellField& in, double ts) { return op(in, ts, gm, plan.dt); });
  }
  double worst = 0.0;
  for (const double v : u.values()) worst = std::max(worst, std::abs(v - c));
  return worst;
}

// Independent donor-cell update: per cell, fluxes through its own four faces.
CellField first_order_oracle(const CellField& u, const FaceVelocity& vel, double dt) {
  const Grid& g = u.grid();
  CellField out(g);
  const auto flux = [](double inner, double outer, double vn) {
    return (vn > 0.0 ? vn : 0.0) * inner + (vn < 0.0 ? vn : 0.0) * outer;
  };
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double c = u.wrapped(i, j);
      const double east = flux(c, u.wrapped(i + 1, j), vel.u[g.index(i, j)]);
      const double west = flux(u.wrapped(i - 1, j), c, vel.u[g.index(i - 1, j)]);
      const double north = flux(c, u.wrapped(i, j + 1), vel.v[g.index(i, j)]);
      const double south = flux(u.wrapped(i, j - 1), c, vel.v[g.index(i, j - 1)]);
      const double tx = (east - west) / g.dx();
      const double ty = (north - south) / g.dy();
      const double tendency = -tx - ty;
      out(CellIndex{i, j}) = c + dt * tendency;
    }
  }
  return out;
}

int first_order_mismatches(Stream stream) {
  ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::Unlimited, stream, InitialShape::LeVeque, 40, 0.5, 1.0);
  const StepPlan plan = plan_steps(s);
  const FaceVelocity base = cgrid_faces(s.stream, s.grid(), 0.0);
  CellField lib = init_cell_means(s.ic, s.grid(), s.init);
  CellField ref = lib;
  int mismatches = 0;
  for (int n = 0; n < 50; ++n) {
    const double t = n * plan.dt;
    const FaceVelocity vel = base.scaled(s.stream.time_factor(t));
    lib = ssp_step(SspScheme::FE, lib, t, plan.dt, [&](const CellField& in, double) {
      LinearRecon r = central_slopes(in);
      std::fill(r.alpha.begin(), r.alpha.end(), 0.0);
      return fv2_tendency(face_traces(r), vel);
    });
    ref = first_order_oracle(ref, vel, plan.dt);
    if (!(lib == ref)) ++mismatches;
  }
  return mismatches;
}

Result criterion_structural(Context& ctx) {
  Result r{"structural", "Structural identities", true, {}, ""};
  Check check{r};

  double div = 0.0;
  for (const Stream s : kStreams) {
    for (const int n : {16, 32, 64, 100, 128, 200, 256}) div = std::max(div, cgrid_divergence(s, n));
  }
  check(div <= 1e-13, "C-grid divergence / transport rate, all cases at 16..256: " + fmt(div, 3));

  std::mt19937_64 rng(7);
  double poly = 0.0;
  for (int trial = 0; trial < 20; ++trial) poly = std::max(poly, cubic_exactness(rng));
  check(poly <= 1e-11, "P4/G3/Q4 reproduce random cubics at centres and sample points: " + fmt(poly, 3));

  // Small complete runs for every scheme, limiter and case, then everything already in the memo.
  for (const Scheme scheme : {Scheme::FV2, Scheme::FV4}) {
    for (const LimiterKind l : {LimiterKind::Unlimited, LimiterKind::BJ, LimiterKind::Kuzmin, LimiterKind::NKMP,
                                LimiterKind::N2NMP, LimiterKind::Global}) {
      if (scheme == Scheme::FV4 && l == LimiterKind::Kuzmin) continue;
      for (const Stream s : kStreams) {
        ExperimentSpec spec = make_spec(scheme, l, s, InitialShape::CosBump, 24, 0.25, 1.0);
        ctx.run(spec);
      }
    }
  }
  double fv2_id = 0.0;
  double fv4_id = 0.0;
  double mass = 0.0;
  std::size_t stages = 0;
  for (const RunResult* run : ctx.runs()) {
    for (const StageRecord& st : run->stages) {
      (run->spec.scheme == Scheme::FV2 ? fv2_id : fv4_id) =
          std::max(run->spec.scheme == Scheme::FV2 ? fv2_id : fv4_id, st.identity_residual);
    }
    stages += run->stages.size();
    mass = std::max(mass, run->report.max_mass_drift);
  }
  check(fv2_id <= 1e-13, "FV2 trace-mean identity, max relative residual over all stages: " + fmt(fv2_id, 3));
  check(fv4_id <= 1e-13, "FV4 decomposition identity, max relative residual over all stages: " + fmt(fv4_id, 3));
  check(mass <= 1e-12, "mass change per step over " + std::to_string(ctx.runs().size()) + " runs (" +
                           std::to_string(stages) + " stages): " + fmt(mass, 3));

  double drift = 0.0;
  for (const LimiterKind l : {LimiterKind::Unlimited, LimiterKind::BJ, LimiterKind::Kuzmin, LimiterKind::NKMP,
                              LimiterKind::N2NMP, LimiterKind::Global}) {
    for (const Stream s : kStreams) drift = std::max(drift, constancy_drift(Scheme::FV2, l, s));
    if (l == LimiterKind::Kuzmin) continue;
    // Gauss-point speeds of the reversing flows are divergence free only up to quadrature error.
    for (const Stream s : {Stream::Diag, Stream::Sbr}) drift = std::max(drift, constancy_drift(Scheme::FV4, l, s));
  }
  check(drift <= 1e-13, "constant 0.7 after 20 steps, every scheme/limiter pair: max drift " + fmt(drift, 3));

  int mism = 0;
  for (const Stream s : kStreams) mism += first_order_mismatches(s);
  check(mism == 0, "alpha = 0 FV2 vs donor-cell oracle, 4 cases x 50 steps: " + std::to_string(mism) +
                       " steps differ bitwise");
  return r;
}

// --- sign preservation ------------------------------------------------------------------

Result criterion_sign(Context&) {
  Result r{"sign", "Sign preservation under compressible face speeds", true, {},
           "scheme,limiter,field,min_over_run,pass\n"};
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> speed(-1.0, 1.0);
  const Grid g(32, 32);
  for (const Scheme scheme : {Scheme::FV2, Scheme::FV4}) {
    FaceVelocity fv{g, std::vector<double>(g.cell_count()), std::vector<double>(g.cell_count()), 1.0};
    QuadVelocity qv{g, {}, {}, 1.0};
    for (std::size_t k = 0; k < g.cell_count(); ++k) {
      fv.u[k] = speed(rng);
      fv.v[k] = speed(rng);
    }
    for (int q = 0; q < 2; ++q) {
      qv.u[q].resize(g.cell_count());
      qv.v[q].resize(g.cell_count());
      for (std::size_t k = 0; k < g.cell_count(); ++k) {
        qv.u[q][k] = speed(rng);
        qv.v[q][k] = speed(rng);
      }
    }
    const double bound = scheme == Scheme::FV2 ? kFv2StageBoundCompressible : kFv4StageBoundCompressible;
    const double dt = scheme == Scheme::FV2 ? bound / fv2_courant(fv, 1.0) : bound / fv4_courant(qv, 1.0);
    const SspScheme ssp = scheme == Scheme::FV2 ? SspScheme::SSP22 : SspScheme::SSP33;
    for (const LimiterKind l :
         {LimiterKind::BJ, LimiterKind::Kuzmin, LimiterKind::NKMP, LimiterKind::N2NMP, LimiterKind::Global}) {
      if (scheme == Scheme::FV4 && l == LimiterKind::Kuzmin) continue;
      for (int field = 0; field < 2; ++field) {
        CellField u = field == 0 ? init_cell_means(InitialShape::LeVeque, g, InitMode::PointSample) : CellField(g);
        if (field == 1) {
          std::uniform_real_distribution<double> uni(0.0, 1.0);
          for (auto& v : u.values()) v = uni(rng) < 0.3 ? 0.0 : uni(rng);
        }
        double lowest = u.min();
        for (int n = 0; n < 100; ++n) {
          const std::optional<Bounds> gm = l == LimiterKind::Global ? std::optional<Bounds>(global_bounds(u)) : std::nullopt;
          const StageOperator op = [&](const CellField& in, double) -> CellTendency {
            if (scheme == Scheme::FV2) {
              LinearRecon rec = central_slopes(in);
              limit_field(l, rec, gm);
              return fv2_tendency(face_traces(rec), fv);
            }
            CubicRecon rec = cubic_recon(in);
            limit_field(l, rec, gm);
            return fv4_tendency(gauss_traces(rec), qv);
          };
          u = ssp_step(ssp, u, n * dt, dt, op, [&](int, double, const CellField&, const CellField& out) {
            lowest = std::min(lowest, out.min());
          });
          lowest = std::min(lowest, u.min());
        }
        const bool ok = lowest >= -1e-12;
        r.passed = r.passed && ok;
        const char* fname = field == 0 ? "leveque" : "random";
        r.details.push_back(std::string(to_string(scheme)) + " " + std::string(to_string(l)) + " " + fname +
                            ": min over 100 steps " + fmt(lowest, 4) + " " + verdict(ok));
        r.table += std::string(to_string(scheme)) + "," + std::string(to_string(l)) + "," + fname + "," +
                   io::format_double(lowest) + "," + (ok ? "1" : "0") + "\n";
      }
    }
  }
  return r;
}

}  // namespace

ExperimentSpec convergence_spec(Scheme scheme, LimiterKind limiter, Stream stream, int n) {
  const InitialShape ic = scheme == Scheme::FV2 ? InitialShape::CosBump : InitialShape::CosSqBump;
  return make_spec(scheme, limiter, stream, ic, n, 0.5, 1.0);
}

ExperimentSpec sbr_spec(Scheme scheme, LimiterKind limiter, int n, double cn) {
  ExperimentSpec s = make_spec(scheme, limiter, Stream::Sbr, InitialShape::LeVeque, n, cn, 1.0);
  // The published 100^2 runs use exactly 1256 steps per rotation.
  if (n == 100 && cn == 0.5) s.steps = 1256;
  return s;
}

const RunResult& Context::run(const ExperimentSpec& spec) {
  const std::string key = io::spec_text(spec);
  if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  note("running " + std::string(to_string(spec.scheme)) + " " + std::string(to_string(spec.limiter)) + " " +
       std::string(to_string(spec.stream.variant)) + " " + std::string(to_string(spec.ic)) + " " +
       std::to_string(spec.nx) + "^2 CN " + fmt(spec.courant_target, 3));
  StageHook hook;
  DominanceCount count;
  if (tracks_dominance(spec)) {
    hook = [&](const StageContext& c) {
      const DominanceCount d = dominance_on(spec.scheme, c.in);
      count.cells += d.cells;
      count.violations += d.violations;
    };
  }
  RunResult res = run_experiment(spec, hook);
  if (tracks_dominance(spec)) dominance_[key] = count;
  const auto [it, inserted] = memo_.emplace(key, std::move(res));
  order_.push_back(&it->second);
  return it->second;
}

const DominanceCount* Context::dominance(const ExperimentSpec& spec) const {
  const auto it = dominance_.find(io::spec_text(spec));
  return it == dominance_.end() ? nullptr : &it->second;
}

void Context::note(const std::string& line) const {
  if (log_) *log_ << line << std::endl;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"fv2-convergence", "1. FV2 limited convergence (BJ, N2N, KUZ)", criterion_fv2_convergence},
      {"nk-collapse", "2. NK_MP order collapse", criterion_nk_collapse},
      {"fv4-convergence", "3. FV4 unlimited orders", criterion_fv4_convergence},
      {"fv2-sbr", "4. FV2 solid-body LeVeque metadata", criterion_fv2_sbr},
      {"mp", "5. Maximum principles to machine precision", criterion_mp},
      {"dominance", "6. Dominance alpha_BJ <= alpha_N2N", criterion_dominance},
      {"structural", "7. Structural identities", criterion_structural},
      {"sign", "8. Sign preservation under compressible speeds", criterion_sign},
  };
  return all;
}

std::vector<Result> run(Context& ctx, const std::vector<std::string>& only) {
  for (const std::string& id : only) {
    const bool known = std::any_of(criteria().begin(), criteria().end(), [&](const Criterion& c) { return c.id == id; });
    if (!known) throw std::invalid_argument("unknown criterion '" + id + "'");
  }
  std::vector<Result> out;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ctx.note("== " + c.title);
    try {
      Result r = c.run(ctx);
      r.title = c.title;
      out.push_back(std::move(r));
    } catch (const std::exception& e) {
      out.push_back(Result{c.id, c.title, false, {std::string("error: ") + e.what()}, ""});
    }
  }
  return out;
}

std::string summary_csv(const std::vector<Result>& results) {
  std::string out = "id,title,passed,details\n";
  for (const Result& r : results) {
    std::string details;
    for (const std::string& d : r.details) details += (details.empty() ? "" : "; ") + d;
    std::replace(details.begin(), details.end(), '"', '\'');
    out += r.id + ",\"" + r.title + "\"," + (r.passed ? "1" : "0") + ",\"" + details + "\"\n";
  }
  return out;
}

}  // namespace mpfv::suite
