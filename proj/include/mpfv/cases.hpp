#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "mpfv/field.hpp"
#include "mpfv/kinds.hpp"
#include "mpfv/velocity.hpp"

namespace mpfv {

enum class InitialShape {
  CosBump,    // C1 cosine bump of radius 0.15 about (0.5, 0.75)
  CosSqBump,  // its square, C4
  LeVeque,    // slotted cylinder, cone and cosine hill
};

enum class InitMode { PointSample, Gauss3x3 };

double eval_ic(InitialShape ic, double x, double y);

CellField init_cell_means(InitialShape ic, const Grid& g, InitMode mode);

/// Cell means of an arbitrary function with the given initialisation rule.
template <class F>
CellField cell_means_of(const Grid& g, InitMode mode, F&& f);

struct ExperimentSpec {
  Scheme scheme = Scheme::FV2;
  LimiterKind limiter = LimiterKind::Unlimited;
  StreamCase stream;
  InitialShape ic = InitialShape::CosBump;
  int nx = 64;
  int ny = 64;
  double courant_target = 0.5;
  double end_time = 1.0;
  SspScheme ssp = SspScheme::SSP22;
  InitMode init = InitMode::Gauss3x3;
  /// Fixes the step count instead of deriving it from the Courant target.
  std::optional<int> steps;

  Grid grid() const { return Grid(nx, ny); }
  /// Throws std::invalid_argument when inconsistent.
  void validate() const;
};

/// Spec with the defaults used throughout: SSP22 for FV2, SSP33 for FV4, point sampling for
/// the LeVeque shape and 3x3 Gauss means for the smooth bumps.
ExperimentSpec make_spec(Scheme scheme, LimiterKind limiter, Stream stream, InitialShape ic, int n,
                         double courant_target, double end_time = 1.0);

/// Analytic solution discretised like the initial data. Reversing flows are only known at
/// whole periods; other times are rejected.
CellField exact_solution(const ExperimentSpec& spec, double t);

std::string_view to_string(InitialShape s);
std::string_view to_string(InitMode m);
InitialShape parse_initial_shape(std::string_view name);
InitMode parse_init_mode(std::string_view name);

// ---------------------------------------------------------------------------

namespace detail {
inline constexpr double kGauss3Node = 0.38729833462074168852;  // sqrt(3/5) / 2
inline constexpr double kGauss3Weights[3] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
}  // namespace detail

template <class F>
CellField cell_means_of(const Grid& g, InitMode mode, F&& f) {
  CellField out(g);
  const double nodes[3] = {-detail::kGauss3Node, 0.0, detail::kGauss3Node};
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double xc = g.x_center(i);
      const double yc = g.y_center(j);
      double value = 0.0;
      if (mode == InitMode::PointSample) {
        value = f(xc, yc);
      } else {
        for (int b = 0; b < 3; ++b) {
          double row = 0.0;
          for (int a = 0; a < 3; ++a) row += detail::kGauss3Weights[a] * f(xc + nodes[a] * g.dx(), yc + nodes[b] * g.dy());
          value += detail::kGauss3Weights[b] * row;
        }
      }
      out(CellIndex{i, j}) = value;
    }
  }
  return out;
}

}  // namespace mpfv
