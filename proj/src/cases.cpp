#include "mpfv/cases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mpfv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRadius = 0.15;

double cos_bump(double x, double y) {
  const double r = std::hypot(x - 0.5, y - 0.75);
  return 0.5 * (1.0 + std::cos(kPi * std::min(r / kRadius, 1.0)));
}

double leveque(double x, double y) {
  const double r_cyl = std::sqrt((x - 0.5) * (x - 0.5) + (y - 0.75) * (y - 0.75));
  if (r_cyl <= kRadius && x <= 0.475) return 1.0;
  if (r_cyl <= kRadius && x > 0.525) return 1.0;
  if (r_cyl <= kRadius && y >= 0.85 && x > 0.475 && x <= 0.525) return 1.0;
  const double r_cone = std::sqrt((x - 0.5) * (x - 0.5) + (y - 0.25) * (y - 0.25));
  if (r_cone <= kRadius) return 1.0 - r_cone / kRadius;
  const double r_cos = std::sqrt((x - 0.25) * (x - 0.25) + (y - 0.5) * (y - 0.5));
  if (r_cos <= kRadius) return 0.5 * (1.0 + std::cos(kPi * r_cos / kRadius));
  return 0.0;
}

double unit_wrap(double z) { return z - std::floor(z); }

bool is_whole(double value) { return value == std::floor(value); }

}  // namespace

double eval_ic(InitialShape ic, double x, double y) {
  switch (ic) {
    case InitialShape::CosBump:
      return cos_bump(x, y);
    case InitialShape::CosSqBump: {
      const double b = cos_bump(x, y);
      return b * b;
    }
    case InitialShape::LeVeque:
      return leveque(x, y);
  }
  return 0.0;
}

CellField init_cell_means(InitialShape ic, const Grid& g, InitMode mode) {
  return cell_means_of(g, mode, [ic](double x, double y) { return eval_ic(ic, x, y); });
}

void ExperimentSpec::validate() const {
  (void)grid();
  if (!(courant_target > 0.0 && courant_target <= 1.0)) {
    throw std::invalid_argument("courant target must lie in (0, 1]");
  }
  if (!(end_time >= 0.0) || !std::isfinite(end_time)) throw std::invalid_argument("end time must be >= 0");
  if (steps && *steps < 0) throw std::invalid_argument("step count must be >= 0");
  if (steps && *steps == 0 && end_time > 0.0) throw std::invalid_argument("zero steps requires end time 0");
  if (scheme == Scheme::FV4 && limiter == LimiterKind::Kuzmin) {
    throw std::invalid_argument("the vertex (Kuzmin) limiter is defined for linear reconstructions only");
  }
  if (!(stream.period > 0.0)) throw std::invalid_argument("reversal period must be positive");
}

ExperimentSpec make_spec(Scheme scheme, LimiterKind limiter, Stream stream, InitialShape ic, int n,
                         double courant_target, double end_time) {
  ExperimentSpec spec;
  spec.scheme = scheme;
  spec.limiter = limiter;
  spec.stream.variant = stream;
  spec.ic = ic;
  spec.nx = n;
  spec.ny = n;
  spec.courant_target = courant_target;
  spec.end_time = end_time;
  spec.ssp = scheme == Scheme::FV2 ? SspScheme::SSP22 : SspScheme::SSP33;
  spec.init = ic == InitialShape::LeVeque ? InitMode::PointSample : InitMode::Gauss3x3;
  return spec;
}

CellField exact_solution(const ExperimentSpec& spec, double t) {
  const Grid g = spec.grid();
  const InitialShape ic = spec.ic;
  const auto u0 = [ic](double x, double y) { return eval_ic(ic, x, y); };
  if (t == 0.0) return cell_means_of(g, spec.init, u0);

  const StreamCase& flow = spec.stream;
  switch (flow.variant) {
    case Stream::Diag: {
      // Unit speed in both directions on the unit torus: period 1.
      const double shift = t - std::floor(t);
      if (shift == 0.0) return cell_means_of(g, spec.init, u0);
      return cell_means_of(g, spec.init, [&](double x, double y) {
        return u0(unit_wrap(x - shift), unit_wrap(y - shift));
      });
    }
    case Stream::Sbr: {
      const double turns = t - std::floor(t);
      if (turns == 0.0) return cell_means_of(g, spec.init, u0);
      // Counterclockwise rotation by 2 pi t; trace each point back by the inverse rotation.
      const double c = std::cos(2.0 * kPi * turns);
      const double s = std::sin(2.0 * kPi * turns);
      return cell_means_of(g, spec.init, [&](double x, double y) {
        const double rx = x - flow.xc;
        const double ry = y - flow.yc;
        return u0(flow.xc + c * rx + s * ry, flow.yc - s * rx + c * ry);
      });
    }
    case Stream::Quad:
    case Stream::Sin:
      if (t > 0.0 && is_whole(t / flow.period)) return cell_means_of(g, spec.init, u0);
      throw std::invalid_argument("no closed-form solution for a deforming flow at t=" + std::to_string(t) +
                                  " (only whole reversal periods)");
  }
  throw std::invalid_argument("unknown stream case");
}

std::string_view to_string(InitialShape s) {
  switch (s) {
    case InitialShape::CosBump:
      return "cosbump";
    case InitialShape::CosSqBump:
      return "cossqbump";
    case InitialShape::LeVeque:
      return "leveque";
  }
  return "?";
}

std::string_view to_string(InitMode m) { return m == InitMode::PointSample ? "point" : "gauss3"; }

InitialShape parse_initial_shape(std::string_view name) {
  for (const auto s : {InitialShape::CosBump, InitialShape::CosSqBump, InitialShape::LeVeque}) {
    if (name == to_string(s)) return s;
  }
  throw std::invalid_argument("unknown initial condition '" + std::string(name) +
                              "' (expected cosbump, cossqbump or leveque)");
}

InitMode parse_init_mode(std::string_view name) {
  if (name == "point") return InitMode::PointSample;
  if (name == "gauss3") return InitMode::Gauss3x3;
  throw std::invalid_argument("unknown init mode '" + std::string(name) + "' (expected point or gauss3)");
}

}  // namespace mpfv
