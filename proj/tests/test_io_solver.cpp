#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mpfv/io.hpp"
#include "mpfv/solver.hpp"
#include "mpfv/suite.hpp"
#include "test_util.hpp"

using namespace mpfv;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("mpfv_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int n = 0; n < 10000; ++n) {
    const double x = d(rng) * std::pow(10.0, static_cast<int>(d(rng) * 3));
    CHECK(io::parse_double(io::format_double(x)) == x);
  }
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(io::format_double(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(std::isnan(io::parse_double(io::format_double(std::nan("")))));
  CHECK(io::parse_double("-inf") == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(io::parse_double("1.5x"), std::invalid_argument);
}

TEST_CASE("field CSV layout and round trip") {
  std::mt19937_64 rng(52);
  const Grid g(6, 5);
  const CellField u = test::random_field(g, rng, -1.0, 1.0);
  const std::string text = io::field_csv(u);
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "i,j,x_center,y_center,value");
  std::getline(lines, line);
  CHECK(line.rfind("0,0,0.083333333333333329,0.10000000000000001,", 0) == 0);
  CHECK(io::parse_field_csv(text) == u);
  CHECK_THROWS_AS(io::parse_field_csv("a,b\n"), std::invalid_argument);
  CHECK_THROWS_AS(io::parse_field_csv("i,j,x_center,y_center,value\n0,0,0.1,0.1,1\n"), std::invalid_argument);
}

TEST_CASE("files are written whole") {
  const auto dir = scratch_dir("write");
  io::write_file(dir / "a.txt", "hello\n");
  CHECK(slurp(dir / "a.txt") == "hello\n");
  CHECK_FALSE(std::filesystem::exists(dir / "a.txt.partial"));
  CHECK(io::split_csv("a,,b").size() == 3);
}

TEST_CASE("spec digest is stable and sensitive") {
  const ExperimentSpec a = make_spec(Scheme::FV2, LimiterKind::BJ, Stream::Diag, InitialShape::CosBump, 32, 0.5);
  ExperimentSpec b = a;
  CHECK(io::digest(io::spec_text(a)) == io::digest(io::spec_text(b)));
  b.stream.period = 2.0;
  CHECK(io::digest(io::spec_text(a)) != io::digest(io::spec_text(b)));
  CHECK(io::digest("") == "cbf29ce484222325");
}

TEST_CASE("zero steps leave the field unchanged") {
  ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::Unlimited, Stream::Diag, InitialShape::CosBump, 16, 0.5, 0.0);
  const RunResult r = run_experiment(s);
  CHECK(r.plan.n_steps == 0);
  CHECK(r.final_field == r.initial);
  CHECK(r.report.rel_l2 == 0.0);
}

TEST_CASE("runs are deterministic and reports reproduce from the written field") {
  ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::N2NMP, Stream::Sbr, InitialShape::LeVeque, 32, 0.5);
  const RunResult a = run_experiment(s);
  const RunResult b = run_experiment(s);
  CHECK(io::field_csv(a.final_field) == io::field_csv(b.final_field));
  CHECK(io::report_csv(a) == io::report_csv(b));
  CHECK(io::stage_log_csv(a.stages) == io::stage_log_csv(b.stages));

  const CellField back = io::parse_field_csv(io::field_csv(a.final_field));
  const CellField exact = exact_solution(s, s.end_time);
  CHECK(relative_error(back, exact, Norm::L1) == a.report.rel_l1);
  CHECK(relative_error(back, exact, Norm::L2) == a.report.rel_l2);
  CHECK(relative_error(back, exact, Norm::Linf) == a.report.rel_linf);
  CHECK(back.min() == a.report.min_val);
  CHECK(back.max() == a.report.max_val);
}

TEST_CASE("limited runs keep their maximum principle, mass and identities") {
  for (const Scheme sc : {Scheme::FV2, Scheme::FV4}) {
    for (const LimiterKind k : {LimiterKind::BJ, LimiterKind::NKMP, LimiterKind::N2NMP, LimiterKind::Global,
                                LimiterKind::Kuzmin}) {
      if (sc == Scheme::FV4 && k == LimiterKind::Kuzmin) continue;
      ExperimentSpec s = make_spec(sc, k, Stream::Sbr, InitialShape::LeVeque, 24, sc == Scheme::FV2 ? 0.5 : 0.25, 0.2);
      const RunResult r = run_experiment(s);
      CAPTURE(to_string(k));
      REQUIRE(r.report.max_mp_violation.has_value());
      CHECK(*r.report.max_mp_violation <= 1e-12);
      CHECK(r.report.max_mass_drift <= 1e-12);
      CHECK(r.report.min_val >= -1e-12);
      CHECK(r.report.max_courant <= s.courant_target + 1e-12);
      CHECK(r.stages.size() == static_cast<std::size_t>(r.plan.n_steps) * stage_offsets(s.ssp).size());
      for (const StageRecord& st : r.stages) CHECK(st.identity_residual <= 1e-13);
      CHECK(r.warnings.empty());
    }
  }
}

TEST_CASE("runs without a closed-form solution report NaN norms and a warning") {
  ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::BJ, Stream::Quad, InitialShape::CosBump, 16, 0.5, 0.25);
  const RunResult r = run_experiment(s);
  CHECK_FALSE(r.has_exact);
  CHECK(std::isnan(r.report.rel_l2));
  CHECK(r.warnings.size() == 1);
}

TEST_CASE("a Courant target above the stage bound is a warning") {
  ExperimentSpec s = make_spec(Scheme::FV4, LimiterKind::N2NMP, Stream::Diag, InitialShape::CosSqBump, 16, 0.5, 0.05);
  const RunResult r = run_experiment(s);
  REQUIRE_FALSE(r.warnings.empty());
  CHECK(r.warnings.front().find("stage bound") != std::string::npos);
}

TEST_CASE("the Courant guard stops oversized steps") {
  ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::BJ, Stream::Sbr, InitialShape::LeVeque, 32, 0.5);
  s.steps = 100;
  CHECK_THROWS_AS(run_experiment(s), std::runtime_error);
}

TEST_CASE("suite registry") {
  std::vector<std::string> ids;
  for (const auto& c : suite::criteria()) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"fv2-convergence", "nk-collapse", "fv4-convergence", "fv2-sbr", "mp",
                                        "dominance", "structural", "sign"});
  suite::Context ctx;
  CHECK_THROWS_AS(suite::run(ctx, {"nope"}), std::invalid_argument);
  const ExperimentSpec sbr = suite::sbr_spec(Scheme::FV2, LimiterKind::N2NMP, 100, 0.5);
  CHECK(sbr.steps == 1256);
  CHECK(sbr.init == InitMode::PointSample);
  const ExperimentSpec conv = suite::convergence_spec(Scheme::FV4, LimiterKind::Unlimited, Stream::Sin, 128);
  CHECK(conv.ic == InitialShape::CosSqBump);
  CHECK(conv.ssp == SspScheme::SSP33);
  CHECK(conv.init == InitMode::Gauss3x3);
}

TEST_CASE("memoised suite runs") {
  suite::Context ctx;
  const ExperimentSpec s = make_spec(Scheme::FV2, LimiterKind::N2NMP, Stream::Sbr, InitialShape::LeVeque, 16, 0.5, 0.1);
  const RunResult& a = ctx.run(s);
  const RunResult& b = ctx.run(s);
  CHECK(&a == &b);
  CHECK(ctx.runs().size() == 1);
  REQUIRE(ctx.dominance(s) != nullptr);
  CHECK(ctx.dominance(s)->violations == 0);
  CHECK(ctx.dominance(s)->cells > 0);
}
