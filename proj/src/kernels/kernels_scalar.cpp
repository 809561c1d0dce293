#include "mpfv/kernels.hpp"

namespace mpfv::kernels::detail {

namespace {

// Written as ternaries so they round and tie-break exactly like _mm256_max_pd/_mm256_min_pd.
inline double pos(double v) { return v > 0.0 ? v : 0.0; }
inline double neg(double v) { return v < 0.0 ? v : 0.0; }
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

void upwind_flux(std::span<const double> inner, std::span<const double> outer, std::span<const double> vn,
                 std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = pos(vn[i]) * inner[i] + neg(vn[i]) * outer[i];
}

void gauss_pair_flux(std::span<const double> inner0, std::span<const double> outer0, std::span<const double> vn0,
                     std::span<const double> inner1, std::span<const double> outer1, std::span<const double> vn1,
                     std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double f0 = pos(vn0[i]) * inner0[i] + neg(vn0[i]) * outer0[i];
    const double f1 = pos(vn1[i]) * inner1[i] + neg(vn1[i]) * outer1[i];
    out[i] = 0.5 * f0 + 0.5 * f1;
  }
}

void flux_divergence(std::span<const double> east, std::span<const double> west, std::span<const double> north,
                     std::span<const double> south, double dx, double dy, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double tx = (east[i] - west[i]) / dx;
    const double ty = (north[i] - south[i]) / dy;
    out[i] = -tx - ty;
  }
}

void axpy(std::span<const double> x, double a, std::span<const double> y, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + a * y[i];
}

void combine(double a, std::span<const double> x, double b, std::span<const double> y, std::span<double> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a * x[i] + b * y[i];
}

void linear_traces(const LinearTraceRows& r, double half_dx, double half_dy) {
  for (std::size_t i = 0; i < r.mean.size(); ++i) {
    const double ex = (r.alpha[i] * r.slope_x[i]) * half_dx;
    const double ey = (r.alpha[i] * r.slope_y[i]) * half_dy;
    r.right[i] = r.mean[i] + ex;
    r.left[i] = r.mean[i] - ex;
    r.up[i] = r.mean[i] + ey;
    r.down[i] = r.mean[i] - ey;
  }
}

void min_max5(std::span<const double> a, std::span<const double> b, std::span<const double> c,
              std::span<const double> d, std::span<const double> e, std::span<double> lo, std::span<double> hi) {
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = vmin(vmin(vmin(vmin(a[i], b[i]), c[i]), d[i]), e[i]);
    hi[i] = vmax(vmax(vmax(vmax(a[i], b[i]), c[i]), d[i]), e[i]);
  }
}

constexpr KernelTable kScalar{upwind_flux, gauss_pair_flux, flux_divergence, axpy,
                              combine,     linear_traces,   min_max5};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace mpfv::kernels::detail
