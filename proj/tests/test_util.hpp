#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "mpfv/field.hpp"
#include "mpfv/grid.hpp"

namespace mpfv::test {

inline constexpr double kPi = 3.14159265358979323846;

inline CellField random_field(const Grid& g, std::mt19937_64& rng, double lo = 0.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  CellField u(g);
  for (double& v : u.values()) v = d(rng);
  return u;
}

/// Random field with a mix of smooth parts, plateaus and jumps, so limiters hit every branch.
inline CellField rough_field(const Grid& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.0, 1.0);
  CellField u(g);
  const double a = d(rng) * 6.0;
  const double b = d(rng) * 6.0;
  for (int j = 0; j < g.ny(); ++j) {
    for (int i = 0; i < g.nx(); ++i) {
      const double r = d(rng);
      double v = 0.5 + 0.4 * std::sin(a * g.x_center(i) + b * g.y_center(j));
      if (r < 0.15) v = 0.0;
      if (r > 0.85) v = 1.0;
      if (r > 0.4 && r < 0.5) v = d(rng);
      u(CellIndex{i, j}) = v;
    }
  }
  return u;
}

/// Min and max of u over an explicit cell list.
inline std::pair<double, double> scan(const CellField& u, const std::vector<CellIndex>& cells) {
  double lo = u(cells.front());
  double hi = lo;
  for (const CellIndex& c : cells) {
    lo = std::min(lo, u(c));
    hi = std::max(hi, u(c));
  }
  return {lo, hi};
}

/// All cells with periodic Manhattan distance <= r from k, by enumeration.
inline std::vector<CellIndex> diamond(const Grid& g, CellIndex k, int r) {
  std::vector<CellIndex> out;
  for (int dj = -r; dj <= r; ++dj) {
    for (int di = -r; di <= r; ++di) {
      if (std::abs(di) + std::abs(dj) <= r) out.push_back(g.wrap(k.i + di, k.j + dj));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Gauss-Legendre nodes and weights on [-1/2, 1/2] (weights sum to 1).
template <int N>
struct GaussRule {
  std::array<double, N> x;
  std::array<double, N> w;
};

inline GaussRule<5> gauss5() {
  const double a = std::sqrt(5.0 - 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
  const double b = std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0;
  const double wa = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
  const double wb = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
  return {{-b / 2, -a / 2, 0.0, a / 2, b / 2}, {wb / 2, wa / 2, 128.0 / 450.0, wa / 2, wb / 2}};
}

inline GaussRule<6> gauss6() {
  const double x[3] = {0.2386191860831969086, 0.6612093864662645136, 0.9324695142031520278};
  const double w[3] = {0.4679139345726910473, 0.3607615730481386076, 0.1713244923791703450};
  return {{-x[2] / 2, -x[1] / 2, -x[0] / 2, x[0] / 2, x[1] / 2, x[2] / 2},
          {w[2] / 2, w[1] / 2, w[0] / 2, w[0] / 2, w[1] / 2, w[2] / 2}};
}

/// Tensor Gauss average of f over the cell of size (dx, dy) centred at (xc, yc).
template <int N, class F>
double cell_average(const GaussRule<N>& rule, double xc, double yc, double dx, double dy, F&& f) {
  double s = 0.0;
  for (int b = 0; b < N; ++b) {
    for (int a = 0; a < N; ++a) s += rule.w[a] * rule.w[b] * f(xc + rule.x[a] * dx, yc + rule.x[b] * dy);
  }
  return s;
}

}  // namespace mpfv::test
