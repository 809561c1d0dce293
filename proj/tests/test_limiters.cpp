#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "mpfv/fv2.hpp"
#include "mpfv/fv4.hpp"
#include "mpfv/limiters.hpp"
#include "test_util.hpp"

using namespace mpfv;

namespace {

const LimiterKind kLinearKinds[] = {LimiterKind::Unlimited, LimiterKind::BJ,    LimiterKind::Kuzmin,
                                    LimiterKind::NKMP,      LimiterKind::N2NMP, LimiterKind::Global};
const LimiterKind kCubicKinds[] = {LimiterKind::Unlimited, LimiterKind::BJ, LimiterKind::NKMP, LimiterKind::N2NMP,
                                   LimiterKind::Global};

// Oracle: the correction factor exactly as defined, min over the constrained points.
double oracle_factor(double p, double mean, double m, double M) {
  double a = 1.0;
  if (p - mean > 0) a = std::min(1.0, (M - mean) / (p - mean));
  if (p - mean < 0) a = std::min(1.0, (m - mean) / (p - mean));
  return std::clamp(a, 0.0, 1.0);
}

struct Constraint {
  double p;
  std::pair<double, double> b;
};

std::pair<double, double> face_oracle(LimiterKind kind, const CellField& u, CellIndex k, CellIndex l) {
  const Grid& g = u.grid();
  if (kind == LimiterKind::NKMP) return {std::min(u(k), u(l)), std::max(u(k), u(l))};
  std::vector<CellIndex> cells = test::diamond(g, k, 1);
  const auto nl = test::diamond(g, l, 1);
  cells.insert(cells.end(), nl.begin(), nl.end());
  return test::scan(u, cells);
}

double alpha_oracle(const std::vector<Constraint>& cs, double mean) {
  double a = 1.0;
  for (const auto& c : cs) a = std::min(a, oracle_factor(c.p, mean, c.b.first, c.b.second));
  return a;
}

/// Brute-force alpha of a linear reconstruction at cell k, from point evaluations and cell scans.
double linear_oracle(LimiterKind kind, const LinearRecon& r, const CellField& u, CellIndex k) {
  const Grid& g = u.grid();
  const std::size_t idx = g.index(k);
  const auto at = [&](double sx, double sy) { return r.unlimited_at(idx, sx * g.dx() / 2, sy * g.dy() / 2); };
  const auto nk = test::scan(u, test::diamond(g, k, 1));
  const std::pair<double, double> glob{u.min(), u.max()};
  std::vector<Constraint> cs;
  switch (kind) {
    case LimiterKind::Unlimited:
      return 1.0;
    case LimiterKind::BJ:
    case LimiterKind::Global: {
      const auto b = kind == LimiterKind::BJ ? nk : glob;
      cs = {{at(1, 0), b}, {at(-1, 0), b}, {at(0, 1), b}, {at(0, -1), b}};
      break;
    }
    case LimiterKind::NKMP:
    case LimiterKind::N2NMP:
      cs = {{at(1, 0), face_oracle(kind, u, k, g.wrap(k.i + 1, k.j))},
            {at(-1, 0), face_oracle(kind, u, g.wrap(k.i - 1, k.j), k)},
            {at(0, 1), face_oracle(kind, u, k, g.wrap(k.i, k.j + 1))},
            {at(0, -1), face_oracle(kind, u, g.wrap(k.i, k.j - 1), k)}};
      break;
    case LimiterKind::Kuzmin: {
      const auto vertex = [&](int di, int dj) {
        std::vector<CellIndex> c;
        for (int b = 0; b <= 1; ++b)
          for (int a = 0; a <= 1; ++a) c.push_back(g.wrap(k.i + di + a, k.j + dj + b));
        return test::scan(u, c);
      };
      cs = {{at(1, 1), vertex(0, 0)}, {at(-1, 1), vertex(-1, 0)}, {at(1, -1), vertex(0, -1)},
            {at(-1, -1), vertex(-1, -1)}};
      break;
    }
  }
  return alpha_oracle(cs, u(k));
}

double cubic_oracle(LimiterKind kind, const CubicRecon& r, const CellField& u, CellIndex k) {
  const Grid& g = u.grid();
  const std::size_t idx = g.index(k);
  const double gx = g.dx() * kGaussOffset;
  const double gy = g.dy() * kGaussOffset;
  const double hx = g.dx() / 2;
  const double hy = g.dy() / 2;
  const auto at = [&](double xi, double eta) { return r.unlimited_at(idx, xi, eta); };
  const auto nk = test::scan(u, test::diamond(g, k, 1));
  const auto n2 = test::scan(u, test::diamond(g, k, 2));
  const std::pair<double, double> glob{u.min(), u.max()};
  std::vector<Constraint> cs;
  if (kind == LimiterKind::Unlimited) return 1.0;
  if (kind == LimiterKind::BJ || kind == LimiterKind::Global) {
    const auto b = kind == LimiterKind::BJ ? nk : glob;
    for (const auto& [xi, eta] : std::vector<std::pair<double, double>>{
             {hx, -gy}, {hx, gy}, {-hx, -gy}, {-hx, gy}, {-gx, hy}, {gx, hy}, {-gx, -hy}, {gx, -hy}, {0, 0}})
      cs.push_back({at(xi, eta), b});
  } else {
    const auto e = face_oracle(kind, u, k, g.wrap(k.i + 1, k.j));
    const auto w = face_oracle(kind, u, g.wrap(k.i - 1, k.j), k);
    const auto n = face_oracle(kind, u, k, g.wrap(k.i, k.j + 1));
    const auto s = face_oracle(kind, u, g.wrap(k.i, k.j - 1), k);
    cs = {{at(hx, -gy), e},  {at(hx, gy), e},  {at(-hx, -gy), w}, {at(-hx, gy), w},
          {at(-gx, hy), n},  {at(gx, hy), n},  {at(-gx, -hy), s}, {at(gx, -hy), s},
          {at(0, 0), kind == LimiterKind::NKMP ? nk : n2}};
  }
  return alpha_oracle(cs, u(k));
}

LinearRecon limited_linear(LimiterKind kind, const CellField& u) {
  LinearRecon r = central_slopes(u);
  limit_field(kind, r, global_bounds(u));
  return r;
}

CubicRecon limited_cubic(LimiterKind kind, const CellField& u) {
  CubicRecon r = cubic_recon(u);
  limit_field(kind, r, global_bounds(u));
  return r;
}

}  // namespace

TEST_CASE("correction factor examples") {
  CHECK(bj_factor(2.0, 0.0, {-1.0, 1.0}) == 0.5);
  CHECK(bj_factor(0.3, 0.3, {0.0, 0.1}) == 1.0);
  CHECK(bj_factor(0.7, 0.5, {0.0, 1.0}) == 1.0);
  CHECK(bj_factor(-1.0, 0.0, {-0.25, 1.0}) == 0.25);
  // A mean outside its own bounds clamps to 0 rather than going negative.
  CHECK(bj_factor(2.0, 1.5, {0.0, 1.0}) == 0.0);
}

TEST_CASE("face bounds") {
  const Grid g(7, 7);
  CellField u(g);
  u(CellIndex{2, 2}) = 0.2;
  u(CellIndex{3, 2}) = 0.7;
  const Bounds nk = face_bounds(LimiterKind::NKMP, u, {Orientation::Vertical, {2, 2}});
  CHECK((nk.m == 0.2 && nk.M == 0.7));

  CellField ramp(g);
  for (std::size_t k = 0; k < g.cell_count(); ++k) ramp[k] = static_cast<double>(k);
  const FaceId f{Orientation::Vertical, {2, 2}};
  const auto oracle = test::scan(ramp, {{2, 2}, {3, 2}, {1, 2}, {4, 2}, {2, 1}, {2, 3}, {3, 1}, {3, 3}});
  const Bounds n2 = face_bounds(LimiterKind::N2NMP, ramp, f);
  CHECK((n2.m == oracle.first && n2.M == oracle.second));

  const CellField c(g, 0.4);
  for (const LimiterKind k : {LimiterKind::NKMP, LimiterKind::N2NMP}) {
    const Bounds b = face_bounds(k, c, f);
    CHECK((b.m == 0.4 && b.M == 0.4));
  }
  CHECK_THROWS_AS(face_bounds(LimiterKind::BJ, c, f), std::invalid_argument);
}

TEST_CASE("cell and vertex bounds") {
  const Grid g(5, 5);
  CellField spike(g);
  spike(CellIndex{2, 2}) = 1.0;
  const Bounds bj = cell_bounds(LimiterKind::BJ, spike, {2, 1});
  CHECK((bj.m == 0.0 && bj.M == 1.0));
  const Bounds n2 = cell_bounds(LimiterKind::N2NMP, spike, {0, 0});
  CHECK((n2.m == 0.0 && n2.M == 0.0));
  const Bounds gl = cell_bounds(LimiterKind::Global, spike, {0, 0}, Bounds{0.0, 1.0});
  CHECK((gl.m == 0.0 && gl.M == 1.0));
  CHECK_THROWS_AS(cell_bounds(LimiterKind::Global, spike, {0, 0}), std::invalid_argument);

  const Bounds vc = vertex_bounds(CellField(g, 0.3), {1, 1});
  CHECK((vc.m == 0.3 && vc.M == 0.3));
  const Bounds vs = vertex_bounds(spike, {1, 1});
  CHECK((vs.m == 0.0 && vs.M == 1.0));
  CellField ramp(g);
  for (std::size_t k = 0; k < g.cell_count(); ++k) ramp[k] = static_cast<double>((k * 7) % 11);
  for (int j = 0; j < 5; ++j) {
    for (int i = 0; i < 5; ++i) {
      const auto c = vertex_cells(g, {i, j});
      const auto o = test::scan(ramp, {c.begin(), c.end()});
      const Bounds b = vertex_bounds(ramp, {i, j});
      CHECK((b.m == o.first && b.M == o.second));
    }
  }
}

TEST_CASE("fast neighbourhood extrema match a direct scan") {
  std::mt19937_64 rng(21);
  for (const auto& g : {Grid(5, 5), Grid(7, 11), Grid(16, 9)}) {
    const CellField u = test::random_field(g, rng, -1.0, 1.0);
    for (const Neighborhood n : {Neighborhood::NKInclusive, Neighborhood::N2UnionN, Neighborhood::VN}) {
      const NeighborhoodExtrema e = neighborhood_extrema(u, n);
      for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
          const auto o = test::scan(u, neighborhood(g, {i, j}, n));
          const std::size_t k = g.index(CellIndex{i, j});
          CHECK((e.lo[k] == o.first && e.hi[k] == o.second));
        }
      }
    }
  }
}

TEST_CASE("whole-field limiting equals the per-cell reference and the brute-force oracle") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 6; ++trial) {
    const Grid g(9 + trial, 8 + 2 * trial);
    const CellField u = trial % 2 ? test::random_field(g, rng) : test::rough_field(g, rng);
    const Bounds gm = global_bounds(u);
    for (const LimiterKind kind : kLinearKinds) {
      CAPTURE(to_string(kind));
      const LinearRecon r = limited_linear(kind, u);
      const LinearRecon un = central_slopes(u);
      for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
          const std::size_t k = g.index(CellIndex{i, j});
          CHECK(r.alpha[k] == limit_cell(kind, un, u, {i, j}, gm));
          CHECK(std::abs(r.alpha[k] - linear_oracle(kind, un, u, {i, j})) <= 1e-12);
        }
      }
    }
    for (const LimiterKind kind : kCubicKinds) {
      CAPTURE(to_string(kind));
      const CubicRecon r = limited_cubic(kind, u);
      const CubicRecon un = cubic_recon(u);
      for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
          const std::size_t k = g.index(CellIndex{i, j});
          CHECK(r.alpha[k] == limit_cell(kind, un, u, {i, j}, gm));
          CHECK(std::abs(r.alpha[k] - cubic_oracle(kind, un, u, {i, j})) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("spike example") {
  const Grid g(5, 5);
  CellField spike(g);
  spike(CellIndex{2, 2}) = 1.0;
  for (const LimiterKind kind : kLinearKinds) {
    const LinearRecon r = limited_linear(kind, spike);
    CHECK(r.alpha[g.index(CellIndex{2, 2})] == 1.0);
  }
  // At (3, 2) the left trace 0.25 lies inside its face bounds [0, 1] but the right trace -0.25
  // falls below the [0, 0] bounds of the face shared with (4, 2).
  const LinearRecon nk = limited_linear(LimiterKind::NKMP, spike);
  CHECK(nk.alpha[g.index(CellIndex{3, 2})] == 0.0);
}

TEST_CASE("alpha range and constant fields") {
  std::mt19937_64 rng(23);
  const Grid g(12, 12);
  const CellField c(g, 0.6);
  for (const LimiterKind kind : kLinearKinds) {
    for (const double a : limited_linear(kind, c).alpha) CHECK(a == 1.0);
    for (const double a : limited_linear(kind, test::rough_field(g, rng)).alpha) CHECK((a >= 0.0 && a <= 1.0));
  }
  for (const LimiterKind kind : kCubicKinds) {
    for (const double a : limited_cubic(kind, c).alpha) CHECK(a == 1.0);
    for (const double a : limited_cubic(kind, test::rough_field(g, rng)).alpha) CHECK((a >= 0.0 && a <= 1.0));
  }
}

TEST_CASE("alpha of Barth-Jespersen never exceeds alpha of N2N") {
  std::mt19937_64 rng(24);
  long long cells = 0;
  long long violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Grid g(16, 16);
    const CellField u = trial % 2 ? test::random_field(g, rng) : test::rough_field(g, rng);
    const auto bj2 = limited_linear(LimiterKind::BJ, u).alpha;
    const auto n22 = limited_linear(LimiterKind::N2NMP, u).alpha;
    const auto bj4 = limited_cubic(LimiterKind::BJ, u).alpha;
    const auto n24 = limited_cubic(LimiterKind::N2NMP, u).alpha;
    for (std::size_t k = 0; k < g.cell_count(); ++k) {
      cells += 2;
      violations += (bj2[k] > n22[k]) + (bj4[k] > n24[k]);
    }
  }
  CHECK(cells == 50 * 256 * 2);
  CHECK(violations == 0);
}

TEST_CASE("limited traces respect their bounds") {
  std::mt19937_64 rng(25);
  const Grid g(14, 10);
  for (int trial = 0; trial < 5; ++trial) {
    const CellField u = test::rough_field(g, rng);
    for (const LimiterKind kind : {LimiterKind::BJ, LimiterKind::NKMP, LimiterKind::N2NMP, LimiterKind::Global}) {
      const FaceTraces2 t = face_traces(limited_linear(kind, u));
      for (int j = 0; j < g.ny(); ++j) {
        for (int i = 0; i < g.nx(); ++i) {
          const std::size_t k = g.index(CellIndex{i, j});
          const auto check = [&](double p, std::pair<double, double> b) {
            CHECK(p >= b.first - 1e-14);
            CHECK(p <= b.second + 1e-14);
          };
          const CellIndex me{i, j};
          if (kind == LimiterKind::NKMP || kind == LimiterKind::N2NMP) {
            check(t.right[k], face_oracle(kind, u, me, g.wrap(i + 1, j)));
            check(t.left[k], face_oracle(kind, u, g.wrap(i - 1, j), me));
            check(t.up[k], face_oracle(kind, u, me, g.wrap(i, j + 1)));
            check(t.down[k], face_oracle(kind, u, g.wrap(i, j - 1), me));
          } else {
            const auto b = kind == LimiterKind::BJ ? test::scan(u, test::diamond(g, me, 1))
                                                   : std::pair<double, double>{u.min(), u.max()};
            for (const double p : {t.right[k], t.left[k], t.up[k], t.down[k]}) check(p, b);
          }
        }
      }
    }
  }
}

TEST_CASE("limiting commutes with positive affine maps") {
  std::mt19937_64 rng(26);
  const Grid g(12, 12);
  const CellField u = test::rough_field(g, rng);
  CellField v(g);
  for (std::size_t k = 0; k < g.cell_count(); ++k) v[k] = 3.0 * u[k] - 0.5;
  for (const LimiterKind kind : kLinearKinds) {
    const auto a = limited_linear(kind, u).alpha;
    const auto b = limited_linear(kind, v).alpha;
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12);
  }
  for (const LimiterKind kind : kCubicKinds) {
    const auto a = limited_cubic(kind, u).alpha;
    const auto b = limited_cubic(kind, v).alpha;
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-12);
  }
}
