#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "mpfv/solver.hpp"

namespace mpfv::suite {

/// Per-run counts from the dominance hook (alpha_BJ <= alpha_N2N on each stage input).
struct DominanceCount {
  long long cells = 0;
  long long violations = 0;
};

/// Memoised experiment runs shared by the criteria of one suite invocation.
class Context {
 public:
  explicit Context(std::ostream* log = nullptr) : log_(log) {}

  /// Runs spec once; repeated calls return the stored result. LeVeque solid-body runs with the
  /// N2N limiter also record dominance counts.
  const RunResult& run(const ExperimentSpec& spec);
  const DominanceCount* dominance(const ExperimentSpec& spec) const;
  /// All runs so far, in completion order.
  const std::vector<const RunResult*>& runs() const { return order_; }
  void note(const std::string& line) const;

 private:
  std::ostream* log_;
  std::map<std::string, RunResult> memo_;
  std::map<std::string, DominanceCount> dominance_;
  std::vector<const RunResult*> order_;
};

struct Result {
  std::string id;
  std::string title;
  bool passed = false;
  std::vector<std::string> details;
  /// Optional CSV table of measured vs target values.
  std::string table;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Result(Context&)> run;
};

const std::vector<Criterion>& criteria();

/// Runs the criteria whose ids are in only (all when empty). Unknown ids throw std::invalid_argument.
/// A criterion that throws is reported as failed with the message.
std::vector<Result> run(Context& ctx, const std::vector<std::string>& only = {});

std::string summary_csv(const std::vector<Result>& results);

// Experiment definitions shared with the command line and tests.
ExperimentSpec convergence_spec(Scheme scheme, LimiterKind limiter, Stream stream, int n);
ExperimentSpec sbr_spec(Scheme scheme, LimiterKind limiter, int n, double cn);

}  // namespace mpfv::suite
