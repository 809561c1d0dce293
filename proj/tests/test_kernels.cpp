#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>
#include <vector>

#include "mpfv/flux.hpp"
#include "mpfv/kernels.hpp"

using namespace mpfv;

namespace {

struct Buffers {
  std::vector<std::vector<double>> in;
  std::vector<double> out_a, out_b, out_c, out_d;
};

std::vector<double> random_row(std::mt19937_64& rng, std::size_t n, bool with_zeros) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (double& x : v) {
    x = d(rng);
    if (with_zeros && d(rng) > 1.2) x = 0.0;
    if (with_zeros && d(rng) < -1.7) x = -0.0;
  }
  return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("upwind flux examples") {
  CHECK(upwind_flux(1.0, 0.0, 2.0) == 2.0);
  CHECK(upwind_flux(1.0, 0.0, -2.0) == 0.0);
  CHECK(upwind_flux(3.0, 3.0, -1.5) == -4.5);
  CHECK(upwind_flux(5.0, -7.0, 0.0) == 0.0);
}

TEST_CASE("upwind flux is consistent, conservative and monotone") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-3.0, 3.0);
  for (int n = 0; n < 10000; ++n) {
    const double a = d(rng);
    const double b = d(rng);
    const double vn = d(rng);
    CHECK(upwind_flux(a, a, vn) == a * vn);
    CHECK(upwind_flux(a, b, vn) == -upwind_flux(b, a, -vn));
    const double h = std::abs(d(rng)) + 1e-3;
    CHECK(upwind_flux(a + h, b, vn) >= upwind_flux(a, b, vn));
    CHECK(upwind_flux(a, b + h, vn) <= upwind_flux(a, b, vn));
  }
}

TEST_CASE("scalar kernels agree with the flux definition") {
  const auto& kt = kernels::table(kernels::Backend::Scalar);
  std::mt19937_64 rng(3);
  const std::size_t n = 29;
  const auto a = random_row(rng, n, false);
  const auto b = random_row(rng, n, false);
  const auto vn = random_row(rng, n, true);
  std::vector<double> out(n);
  kt.upwind_flux(a, b, vn, out);
  for (std::size_t k = 0; k < n; ++k) CHECK(out[k] == upwind_flux(a[k], b[k], vn[k]));
  std::vector<double> lo(n);
  std::vector<double> hi(n);
  const auto c = random_row(rng, n, false);
  const auto d = random_row(rng, n, false);
  const auto e = random_row(rng, n, false);
  kt.min_max5(a, b, c, d, e, lo, hi);
  for (std::size_t k = 0; k < n; ++k) {
    CHECK(lo[k] == std::min({a[k], b[k], c[k], d[k], e[k]}));
    CHECK(hi[k] == std::max({a[k], b[k], c[k], d[k], e[k]}));
  }
}

TEST_CASE("AVX2 kernels match the scalar reference bit for bit") {
  if (!kernels::available(kernels::Backend::Avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
    return;
  }
  const auto& s = kernels::table(kernels::Backend::Scalar);
  const auto& v = kernels::table(kernels::Backend::Avx2);
  std::mt19937_64 rng(20240607);
  for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 13u, 64u, 101u, 256u}) {
    CAPTURE(n);
    std::vector<std::vector<double>> in;
    for (int r = 0; r < 8; ++r) in.push_back(random_row(rng, n, true));
    const auto run2 = [&](auto&& call) {
      std::vector<double> a(n, 9.0), b(n, 9.0), c(n, 9.0), d(n, 9.0);
      call(s, a, b, c, d);
      std::vector<double> a2(n, 9.0), b2(n, 9.0), c2(n, 9.0), d2(n, 9.0);
      call(v, a2, b2, c2, d2);
      CHECK(same_bits(a, a2));
      CHECK(same_bits(b, b2));
      CHECK(same_bits(c, c2));
      CHECK(same_bits(d, d2));
    };
    using KT = kernels::KernelTable;
    using V = std::vector<double>;
    run2([&](const KT& t, V& o, V&, V&, V&) { t.upwind_flux(in[0], in[1], in[2], o); });
    run2([&](const KT& t, V& o, V&, V&, V&) { t.gauss_pair_flux(in[0], in[1], in[2], in[3], in[4], in[5], o); });
    run2([&](const KT& t, V& o, V&, V&, V&) { t.flux_divergence(in[0], in[1], in[2], in[3], 0.01, 0.02, o); });
    run2([&](const KT& t, V& o, V&, V&, V&) { t.axpy(in[0], 0.37, in[1], o); });
    run2([&](const KT& t, V& o, V&, V&, V&) { t.combine(0.75, in[0], 0.25, in[1], o); });
    run2([&](const KT& t, V& lo, V& hi, V&, V&) { t.min_max5(in[0], in[1], in[2], in[3], in[4], lo, hi); });
    run2([&](const KT& t, V& r, V& l, V& u, V& d) {
      t.linear_traces({in[0], in[1], in[2], in[3], r, l, u, d}, 0.005, 0.0075);
    });
  }
}

TEST_CASE("backend selection") {
  const auto before = kernels::active_backend();
  kernels::select(kernels::Backend::Scalar);
  CHECK(kernels::active_backend() == kernels::Backend::Scalar);
  CHECK(&kernels::active() == &kernels::table(kernels::Backend::Scalar));
  kernels::select(before);
  CHECK(kernels::name(kernels::Backend::Scalar) == "scalar");
}
