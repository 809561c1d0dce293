#pragma once

namespace mpfv {

/// Riemann data at one flux quadrature point of face sigma_KL.
struct RiemannInput {
  double inner = 0.0;  // trace of the cell K the normal points out of
  double outer = 0.0;  // trace of the neighbour L
  double vn = 0.0;     // v . n_KL
};

/// Donor-cell flux vn+ * inner + vn- * outer. Consistent, conservative and monotone:
/// nondecreasing in inner, nonincreasing in outer. A stagnant face carries nothing.
constexpr double upwind_flux(double inner, double outer, double vn) {
  const double vp = vn > 0.0 ? vn : 0.0;
  const double vm = vn < 0.0 ? vn : 0.0;
  return vp * inner + vm * outer;
}

constexpr double upwind_flux(const RiemannInput& r) { return upwind_flux(r.inner, r.outer, r.vn); }

}  // namespace mpfv
