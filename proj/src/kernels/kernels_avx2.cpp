#include "mpfv/kernels.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define MPFV_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace mpfv::kernels::detail {

#ifdef MPFV_HAVE_AVX2_KERNELS

namespace {

#define MPFV_AVX2 __attribute__((target("avx2")))

// Tails are finished with the same expressions as the scalar reference.
inline double pos(double v) { return v > 0.0 ? v : 0.0; }
inline double neg(double v) { return v < 0.0 ? v : 0.0; }
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

MPFV_AVX2 inline __m256d flux4(__m256d inner, __m256d outer, __m256d vn) {
  const __m256d zero = _mm256_setzero_pd();
  return _mm256_add_pd(_mm256_mul_pd(_mm256_max_pd(vn, zero), inner),
                       _mm256_mul_pd(_mm256_min_pd(vn, zero), outer));
}

MPFV_AVX2 void upwind_flux(std::span<const double> inner, std::span<const double> outer,
                           std::span<const double> vn, std::span<double> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i, flux4(_mm256_loadu_pd(inner.data() + i), _mm256_loadu_pd(outer.data() + i),
                                           _mm256_loadu_pd(vn.data() + i)));
  }
  for (; i < n; ++i) out[i] = pos(vn[i]) * inner[i] + neg(vn[i]) * outer[i];
}

MPFV_AVX2 void gauss_pair_flux(std::span<const double> inner0, std::span<const double> outer0,
                               std::span<const double> vn0, std::span<const double> inner1,
                               std::span<const double> outer1, std::span<const double> vn1, std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d f0 = flux4(_mm256_loadu_pd(inner0.data() + i), _mm256_loadu_pd(outer0.data() + i),
                             _mm256_loadu_pd(vn0.data() + i));
    const __m256d f1 = flux4(_mm256_loadu_pd(inner1.data() + i), _mm256_loadu_pd(outer1.data() + i),
                             _mm256_loadu_pd(vn1.data() + i));
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_mul_pd(half, f0), _mm256_mul_pd(half, f1)));
  }
  for (; i < n; ++i) {
    const double f0 = pos(vn0[i]) * inner0[i] + neg(vn0[i]) * outer0[i];
    const double f1 = pos(vn1[i]) * inner1[i] + neg(vn1[i]) * outer1[i];
    out[i] = 0.5 * f0 + 0.5 * f1;
  }
}

MPFV_AVX2 void flux_divergence(std::span<const double> east, std::span<const double> west,
                               std::span<const double> north, std::span<const double> south, double dx, double dy,
                               std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d vdx = _mm256_set1_pd(dx);
  const __m256d vdy = _mm256_set1_pd(dy);
  const __m256d sign = _mm256_set1_pd(-0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tx = _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(east.data() + i), _mm256_loadu_pd(west.data() + i)), vdx);
    const __m256d ty =
        _mm256_div_pd(_mm256_sub_pd(_mm256_loadu_pd(north.data() + i), _mm256_loadu_pd(south.data() + i)), vdy);
    _mm256_storeu_pd(out.data() + i, _mm256_sub_pd(_mm256_xor_pd(tx, sign), ty));
  }
  for (; i < n; ++i) {
    const double tx = (east[i] - west[i]) / dx;
    const double ty = (north[i] - south[i]) / dy;
    out[i] = -tx - ty;
  }
}

MPFV_AVX2 void axpy(std::span<const double> x, double a, std::span<const double> y, std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i,
                     _mm256_add_pd(_mm256_loadu_pd(x.data() + i), _mm256_mul_pd(va, _mm256_loadu_pd(y.data() + i))));
  }
  for (; i < n; ++i) out[i] = x[i] + a * y[i];
}

MPFV_AVX2 void combine(double a, std::span<const double> x, double b, std::span<const double> y,
                       std::span<double> out) {
  const std::size_t n = out.size();
  const __m256d va = _mm256_set1_pd(a);
  const __m256d vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out.data() + i, _mm256_add_pd(_mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i)),
                                                   _mm256_mul_pd(vb, _mm256_loadu_pd(y.data() + i))));
  }
  for (; i < n; ++i) out[i] = a * x[i] + b * y[i];
}

MPFV_AVX2 void linear_traces(const LinearTraceRows& r, double half_dx, double half_dy) {
  const std::size_t n = r.mean.size();
  const __m256d hx = _mm256_set1_pd(half_dx);
  const __m256d hy = _mm256_set1_pd(half_dy);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_loadu_pd(r.mean.data() + i);
    const __m256d a = _mm256_loadu_pd(r.alpha.data() + i);
    const __m256d ex = _mm256_mul_pd(_mm256_mul_pd(a, _mm256_loadu_pd(r.slope_x.data() + i)), hx);
    const __m256d ey = _mm256_mul_pd(_mm256_mul_pd(a, _mm256_loadu_pd(r.slope_y.data() + i)), hy);
    _mm256_storeu_pd(r.right.data() + i, _mm256_add_pd(m, ex));
    _mm256_storeu_pd(r.left.data() + i, _mm256_sub_pd(m, ex));
    _mm256_storeu_pd(r.up.data() + i, _mm256_add_pd(m, ey));
    _mm256_storeu_pd(r.down.data() + i, _mm256_sub_pd(m, ey));
  }
  for (; i < n; ++i) {
    const double ex = (r.alpha[i] * r.slope_x[i]) * half_dx;
    const double ey = (r.alpha[i] * r.slope_y[i]) * half_dy;
    r.right[i] = r.mean[i] + ex;
    r.left[i] = r.mean[i] - ex;
    r.up[i] = r.mean[i] + ey;
    r.down[i] = r.mean[i] - ey;
  }
}

MPFV_AVX2 void min_max5(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                        std::span<const double> d, std::span<const double> e, std::span<double> lo,
                        std::span<double> hi) {
  const std::size_t n = lo.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d va = _mm256_loadu_pd(a.data() + i);
    const __m256d vb = _mm256_loadu_pd(b.data() + i);
    const __m256d vc = _mm256_loadu_pd(c.data() + i);
    const __m256d vd = _mm256_loadu_pd(d.data() + i);
    const __m256d ve = _mm256_loadu_pd(e.data() + i);
    _mm256_storeu_pd(lo.data() + i,
                     _mm256_min_pd(_mm256_min_pd(_mm256_min_pd(_mm256_min_pd(va, vb), vc), vd), ve));
    _mm256_storeu_pd(hi.data() + i,
                     _mm256_max_pd(_mm256_max_pd(_mm256_max_pd(_mm256_max_pd(va, vb), vc), vd), ve));
  }
  for (; i < n; ++i) {
    lo[i] = vmin(vmin(vmin(vmin(a[i], b[i]), c[i]), d[i]), e[i]);
    hi[i] = vmax(vmax(vmax(vmax(a[i], b[i]), c[i]), d[i]), e[i]);
  }
}

#undef MPFV_AVX2

constexpr KernelTable kAvx2{upwind_flux, gauss_pair_flux, flux_divergence, axpy,
                            combine,     linear_traces,   min_max5};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2; }

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace mpfv::kernels::detail
