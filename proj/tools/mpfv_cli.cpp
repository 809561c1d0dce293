// mpfv: run single experiments, convergence studies and the acceptance suite.
//
//   mpfv run --scheme fv2 --limiter n2n --case sbr --res 100 --cn 0.5 --out runs/sbr
//   mpfv convergence --scheme fv4 --limiters unlimited --res 64,128,256 --out conv
//   mpfv suite [--only fv2-sbr] [--list] [--out suite]
//
// Exit codes: 0 all passed, 1 a run or criterion failed, 2 usage error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mpfv/io.hpp"
#include "mpfv/kernels.hpp"
#include "mpfv/runtime.hpp"
#include "mpfv/solver.hpp"
#include "mpfv/suite.hpp"

namespace fs = std::filesystem;
using namespace mpfv;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string scheme = "fv2";
  std::string ic;
  std::string init;
  std::string ssp;
  double cn = 0.5;
  double end = 1.0;
  double period = 1.0;
};

void add_common(CLI::App* app, CommonOptions& o) {
  app->add_option("--scheme", o.scheme, "fv2 or fv4")->capture_default_str();
  app->add_option("--ic", o.ic, "cosbump, cossqbump or leveque (default: leveque for sbr, else the scheme's bump)");
  app->add_option("--init", o.init, "point or gauss3 (default: point for leveque, else gauss3)");
  app->add_option("--ssp", o.ssp, "fe, ssp22 or ssp33 (default: ssp22 for fv2, ssp33 for fv4)");
  app->add_option("--cn", o.cn, "Courant target")->capture_default_str();
  app->add_option("--end", o.end, "end time")->capture_default_str();
  app->add_option("--period", o.period, "reversal period of quad and sin")->capture_default_str();
}

ExperimentSpec build_spec(const CommonOptions& o, const std::string& limiter, const std::string& stream, int nx,
                          int ny) {
  try {
    const Scheme scheme = parse_scheme(o.scheme);
    const Stream s = parse_stream(stream);
    InitialShape ic = s == Stream::Sbr ? InitialShape::LeVeque
                                       : (scheme == Scheme::FV2 ? InitialShape::CosBump : InitialShape::CosSqBump);
    if (!o.ic.empty()) ic = parse_initial_shape(o.ic);
    ExperimentSpec spec = make_spec(scheme, parse_limiter(limiter), s, ic, nx, o.cn, o.end);
    spec.ny = ny;
    spec.stream.period = o.period;
    if (!o.init.empty()) spec.init = parse_init_mode(o.init);
    if (!o.ssp.empty()) spec.ssp = parse_ssp(o.ssp);
    spec.validate();
    return spec;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

// --- run ---------------------------------------------------------------------------------

struct RunOptions {
  CommonOptions common;
  std::string limiter = "unlimited";
  std::string stream = "diag";
  int res = 64;
  int nx = 0;
  int ny = 0;
  int steps = -1;
  std::string out = ".";
};

int do_run(const RunOptions& o) {
  ExperimentSpec spec = build_spec(o.common, o.limiter, o.stream, o.nx > 0 ? o.nx : o.res, o.ny > 0 ? o.ny : o.res);
  if (o.steps >= 0) spec.steps = o.steps;
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const RunResult res = run_experiment(spec);
  for (const std::string& w : res.warnings) std::cerr << "warning: " << w << "\n";

  const std::string text = io::spec_text(spec);
  std::string manifest = text;
  manifest += "digest=" + io::digest(text) + "\n";
  manifest += "dt=" + io::format_double(res.plan.dt) + "\n";
  manifest += "n_steps=" + std::to_string(res.plan.n_steps) + "\n";
  manifest += "kernels=" + std::string(kernels::name(kernels::active_backend())) + "\n";
  manifest += "deterministic=1\n";
  manifest += "outputs=field.csv,initial.csv,report.csv,stages.csv\n";
  for (const std::string& w : res.warnings) manifest += "warning=" + w + "\n";

  const fs::path dir(o.out);
  ensure_dir(dir);
  io::write_file(dir / "field.csv", io::field_csv(res.final_field));
  io::write_file(dir / "initial.csv", io::field_csv(res.initial));
  io::write_file(dir / "report.csv", io::report_csv(res));
  io::write_file(dir / "stages.csv", io::stage_log_csv(res.stages));
  io::write_file(dir / "manifest.txt", manifest);

  std::cout << io::report_header() << "\n" << io::report_row(res) << "\n";
  const double v = res.report.max_mp_violation.value_or(0.0);
  if (v > 1e-12) {
    std::cerr << "maximum principle violated by " << v << "\n";
    return 1;
  }
  return 0;
}

// --- convergence -------------------------------------------------------------------------

struct ConvergenceOptions {
  CommonOptions common;
  std::string limiters = "unlimited";
  std::string cases = "diag,quad,sin,sbr";
  std::string res = "128,256";
  std::string norms;
  std::string out = ".";
};

int do_convergence(const ConvergenceOptions& o) {
  std::vector<int> levels;
  for (const std::string& r : split_list(o.res)) {
    try {
      levels.push_back(std::stoi(r));
    } catch (const std::exception&) {
      throw UsageError("bad resolution '" + r + "'");
    }
  }
  if (levels.size() < 2) throw UsageError("convergence needs at least two resolutions");
  for (std::size_t k = 1; k < levels.size(); ++k) {
    if (levels[k] != 2 * levels[k - 1]) throw UsageError("each resolution must double the previous one");
  }
  const auto limiters = split_list(o.limiters);
  const auto cases = split_list(o.cases);
  if (limiters.empty() || cases.empty()) throw UsageError("empty limiter or case list");
  std::vector<std::string> norms = split_list(o.norms);
  if (norms.empty()) norms = o.common.scheme == "fv4" ? std::vector<std::string>{"l1", "l2", "linf"}
                                                      : std::vector<std::string>{"l2"};
  for (const std::string& n : norms) {
    if (n != "l1" && n != "l2" && n != "linf") throw UsageError("unknown norm '" + n + "'");
  }
  // Validate every configuration before running anything.
  for (const auto& l : limiters) {
    for (const auto& c : cases) build_spec(o.common, l, c, levels[0], levels[0]);
  }

  std::string errors = "scheme,limiter,case,n,dt,n_steps,rel_l1,rel_l2,rel_linf,min,max,max_mp_violation\n";
  std::string orders = "scheme,limiter,case,n_coarse,n_fine,order_l1,order_l2,order_linf\n";
  std::string table = "scheme,limiter,norm,n_coarse,n_fine";
  for (const auto& c : cases) table += "," + c;
  table += "\n";
  int status = 0;
  for (const auto& l : limiters) {
    std::map<std::string, std::vector<ErrorReport>> by_case;
    for (const auto& c : cases) {
      for (const int n : levels) {
        const ExperimentSpec spec = build_spec(o.common, l, c, n, n);
        std::cerr << "running " << l << " " << c << " " << n << "^2\n";
        const RunResult res = run_experiment(spec);
        if (!res.has_exact) throw UsageError("no exact solution at end time " + io::format_double(o.common.end));
        by_case[c].push_back(res.report);
        const ErrorReport& e = res.report;
        if (e.max_mp_violation.value_or(0.0) > 1e-12) status = 1;
        errors += o.common.scheme + "," + l + "," + c + "," + std::to_string(n) + "," + io::format_double(res.plan.dt) +
                  "," + std::to_string(res.plan.n_steps) + "," + io::format_double(e.rel_l1) + "," +
                  io::format_double(e.rel_l2) + "," + io::format_double(e.rel_linf) + "," +
                  io::format_double(e.min_val) + "," + io::format_double(e.max_val) + "," +
                  (e.max_mp_violation ? io::format_double(*e.max_mp_violation) : std::string("NA")) + "\n";
      }
    }
    for (std::size_t k = 1; k < levels.size(); ++k) {
      std::map<std::string, std::vector<double>> row;
      for (const auto& c : cases) {
        const ErrorReport& a = by_case[c][k - 1];
        const ErrorReport& b = by_case[c][k];
        const double o1 = observed_order(a.rel_l1, b.rel_l1);
        const double o2 = observed_order(a.rel_l2, b.rel_l2);
        const double oi = observed_order(a.rel_linf, b.rel_linf);
        row["l1"].push_back(o1);
        row["l2"].push_back(o2);
        row["linf"].push_back(oi);
        orders += o.common.scheme + "," + l + "," + c + "," + std::to_string(levels[k - 1]) + "," +
                  std::to_string(levels[k]) + "," + io::format_double(o1) + "," + io::format_double(o2) + "," +
                  io::format_double(oi) + "\n";
      }
      for (const auto& n : norms) {
        table += o.common.scheme + "," + l + "," + n + "," + std::to_string(levels[k - 1]) + "," +
                 std::to_string(levels[k]);
        for (const double v : row[n]) table += "," + io::format_double(v);
        table += "\n";
      }
    }
  }
  const fs::path dir(o.out);
  ensure_dir(dir);
  io::write_file(dir / "errors.csv", errors);
  io::write_file(dir / "orders.csv", orders);
  io::write_file(dir / "table.csv", table);
  std::cout << table;
  return status;
}

// --- suite -------------------------------------------------------------------------------

struct SuiteOptions {
  std::vector<std::string> only;
  bool list = false;
  std::string out;
};

int do_suite(const SuiteOptions& o) {
  if (o.list) {
    for (const auto& c : suite::criteria()) std::cout << c.id << "\t" << c.title << "\n";
    return 0;
  }
  std::vector<std::string> only;
  for (const auto& s : o.only) {
    for (const auto& id : split_list(s)) only.push_back(id);
  }
  suite::Context ctx(&std::cerr);
  std::vector<suite::Result> results;
  try {
    results = suite::run(ctx, only);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.title << "\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    all = all && r.passed;
  }
  if (!o.out.empty()) {
    const fs::path dir(o.out);
    ensure_dir(dir);
    for (const auto& r : results) {
      if (!r.table.empty()) io::write_file(dir / (r.id + ".csv"), r.table);
    }
    io::write_file(dir / "summary.csv", suite::summary_csv(results));
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  mpfv::retain_freed_memory();
  CLI::App app{"Maximum-principle-preserving finite-volume advection"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with option defaults");
  app.allow_config_extras(CLI::config_extras_mode::error);
  std::string kernel;
  app.add_option("--kernels", kernel, "scalar or avx2 (default: best available)");

  RunOptions ro;
  CLI::App* run = app.add_subcommand("run", "run one experiment");
  add_common(run, ro.common);
  run->add_option("--limiter", ro.limiter, "unlimited, bj, kuz, nk, n2n or global")->capture_default_str();
  run->add_option("--case", ro.stream, "diag, quad, sin or sbr")->capture_default_str();
  run->add_option("--res", ro.res, "cells per direction")->capture_default_str();
  run->add_option("--nx", ro.nx, "cells in x (overrides --res)");
  run->add_option("--ny", ro.ny, "cells in y (overrides --res)");
  run->add_option("--steps", ro.steps, "fixed step count instead of the Courant-derived one");
  run->add_option("--out", ro.out, "output directory")->capture_default_str();

  ConvergenceOptions co;
  CLI::App* conv = app.add_subcommand("convergence", "error norms and observed orders over doubling resolutions");
  add_common(conv, co.common);
  conv->add_option("--limiters", co.limiters, "comma-separated limiters")->capture_default_str();
  conv->add_option("--cases", co.cases, "comma-separated cases")->capture_default_str();
  conv->add_option("--res", co.res, "comma-separated resolutions, each double the previous")->capture_default_str();
  conv->add_option("--norms", co.norms, "rows of table.csv: l1,l2,linf (default: l2 for fv2, all for fv4)");
  conv->add_option("--out", co.out, "output directory")->capture_default_str();

  SuiteOptions so;
  CLI::App* st = app.add_subcommand("suite", "run the acceptance criteria");
  st->add_option("--only", so.only, "criterion ids (repeatable or comma-separated)");
  st->add_flag("--list", so.list, "list criteria without running");
  st->add_option("--out", so.out, "directory for summary.csv and per-criterion tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (!kernel.empty()) {
      if (kernel == "scalar") {
        kernels::select(kernels::Backend::Scalar);
      } else if (kernel == "avx2") {
        kernels::select(kernels::Backend::Avx2);
      } else {
        throw UsageError("unknown kernel backend '" + kernel + "'");
      }
    }
    if (*run) return do_run(ro);
    if (*conv) return do_convergence(co);
    return do_suite(so);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
