#include "mpfv/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mpfv {

double relative_error(const CellField& u, const CellField& exact, Norm p) {
  if (!(u.grid() == exact.grid())) throw std::invalid_argument("fields live on different grids");
  double num = 0.0;
  double den = 0.0;
  const auto a = u.values();
  const auto e = exact.values();
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = std::abs(a[k] - e[k]);
    const double x = std::abs(e[k]);
    switch (p) {
      case Norm::L1:
        num += d;
        den += x;
        break;
      case Norm::L2:
        num += d * d;
        den += x * x;
        break;
      case Norm::Linf:
        num = std::max(num, d);
        den = std::max(den, x);
        break;
    }
  }
  if (!(den > 0.0)) throw std::invalid_argument("exact solution has zero norm");
  // The cell area cancels in the ratio.
  return p == Norm::L2 ? std::sqrt(num / den) : num / den;
}

double observed_order(double e_coarse, double e_fine) {
  if (!(e_coarse > 0.0) || !(e_fine > 0.0)) throw std::invalid_argument("errors must be positive");
  return std::log(e_coarse / e_fine) / std::log(2.0);
}

std::optional<Neighborhood> principle_neighborhood(LimiterKind kind) {
  switch (kind) {
    case LimiterKind::NKMP:
      return Neighborhood::NKInclusive;
    case LimiterKind::N2NMP:
    case LimiterKind::BJ:
      return Neighborhood::N2UnionN;
    case LimiterKind::Kuzmin:
      return Neighborhood::VN;
    default:
      return std::nullopt;
  }
}

std::optional<double> mp_check(const CellField& stage_in, const CellField& stage_out, LimiterKind kind,
                               std::optional<Bounds> global_mm) {
  if (!(stage_in.grid() == stage_out.grid())) throw std::invalid_argument("fields live on different grids");
  if (kind == LimiterKind::Unlimited) return std::nullopt;
  const auto out = stage_out.values();
  double worst = 0.0;
  if (kind == LimiterKind::Global) {
    if (!global_mm) throw std::invalid_argument("Global limiter needs the step's global bounds");
    for (const double v : out) worst = std::max(worst, global_mm->excess(v));
    return worst;
  }
  const NeighborhoodExtrema ext = neighborhood_extrema(stage_in, *principle_neighborhood(kind));
  for (std::size_t k = 0; k < out.size(); ++k) worst = std::max(worst, ext.at(k).excess(out[k]));
  return worst;
}

}  // namespace mpfv
