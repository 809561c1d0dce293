#pragma once

// Data-parallel inner loops of the finite-volume update. Every kernel has a scalar
// reference and, on x86-64, an AVX2 variant chosen at runtime. Both variants perform
// the same IEEE operations in the same order, so their outputs compare equal.

#include <cstddef>
#include <span>
#include <string_view>

namespace mpfv::kernels {

enum class Backend { Scalar, Avx2 };

struct LinearTraceRows {
  std::span<const double> mean;
  std::span<const double> slope_x;
  std::span<const double> slope_y;
  std::span<const double> alpha;
  std::span<double> right;
  std::span<double> left;
  std::span<double> up;
  std::span<double> down;
};

struct KernelTable {
  // out = max(vn,0) * inner + min(vn,0) * outer
  void (*upwind_flux)(std::span<const double> inner, std::span<const double> outer, std::span<const double> vn,
                      std::span<double> out);
  // out = 0.5 * F(inner0, outer0, vn0) + 0.5 * F(inner1, outer1, vn1)
  void (*gauss_pair_flux)(std::span<const double> inner0, std::span<const double> outer0,
                          std::span<const double> vn0, std::span<const double> inner1,
                          std::span<const double> outer1, std::span<const double> vn1, std::span<double> out);
  // out = -(east - west) / dx - (north - south) / dy
  void (*flux_divergence)(std::span<const double> east, std::span<const double> west,
                          std::span<const double> north, std::span<const double> south, double dx, double dy,
                          std::span<double> out);
  // out = x + a * y
  void (*axpy)(std::span<const double> x, double a, std::span<const double> y, std::span<double> out);
  // out = a * x + b * y
  void (*combine)(double a, std::span<const double> x, double b, std::span<const double> y,
                  std::span<double> out);
  // right/left = mean +- (alpha * slope_x) * half_dx, up/down likewise in y
  void (*linear_traces)(const LinearTraceRows& rows, double half_dx, double half_dy);
  // elementwise min and max over five rows
  void (*min_max5)(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                   std::span<const double> d, std::span<const double> e, std::span<double> lo,
                   std::span<double> hi);
};

bool available(Backend b);
/// Table for a specific backend; throws if the CPU lacks it.
const KernelTable& table(Backend b);
/// Currently selected table (AVX2 when supported, unless overridden by select()).
const KernelTable& active();
Backend active_backend();
void select(Backend b);
std::string_view name(Backend b);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
}  // namespace detail

}  // namespace mpfv::kernels
