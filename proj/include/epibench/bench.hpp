#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "epibench/grid.hpp"
#include "epibench/models.hpp"
#include "epibench/types.hpp"

namespace epibench {

/// One benchmark cell: which solver to time and how many repetitions.
struct BenchConfig {
  int warmup_runs = 3;
  int measured_runs = 11;
  Model model = Model::si;
  Method method = Method::euler;
  double h = 0.25;

  void validate() const {
    if (warmup_runs < 1) throw std::invalid_argument("BenchConfig: warmup_runs must be >= 1");
    if (measured_runs < 3) throw std::invalid_argument("BenchConfig: measured_runs must be >= 3");
  }
};

/// Timing result for one cell. Times are monotonic-clock seconds; the
/// bracket covers only the stepping loop, with state storage pre-allocated
/// and the initial condition written outside it.
struct BenchRecord {
  BenchConfig config;
  std::vector<double> run_seconds;
  double median_s = 0.0;
  double min_s = 0.0;
  double mean_s = 0.0;
  double stddev_s = 0.0;
  double checksum = 0.0;           // sum of final-state components, from the timed path
  Eigen::VectorXd final_state;     // final node of the last timed run
  std::string host;
  std::string timestamp;           // ISO 8601 UTC
};

/// Short descriptor of the machine the benchmark ran on.
std::string host_descriptor();

/// Times one (model, method, h) cell per the pure-compute protocol: the
/// bracket contains exactly the stepping loop. Throws SolveError if a timed
/// run produces a non-finite state.
BenchRecord time_solver(const BenchConfig& config, const ModelSpec& spec,
                        const Eigen::VectorXd& y0, const Grid& grid);

struct BenchFailure {
  BenchConfig config;
  std::string message;
};

struct BenchSuiteResult {
  std::vector<BenchRecord> records;
  std::vector<BenchFailure> failures;
};

/// Shared setup for a benchmark sweep: rates, initial counts, interval.
struct SweepProblem {
  double alpha = influenza1978::alpha;
  double beta = influenza1978::beta;
  double s0 = influenza1978::s0;
  double i0 = influenza1978::i0;
  double r0 = influenza1978::r0;
  double t0 = influenza1978::t0;
  double tend = influenza1978::tend;

  ModelSpec spec(Model m) const { return ModelSpec(m, alpha, m == Model::sir ? beta : 0.0); }
  Eigen::VectorXd initial_state(Model m) const;
};

/// Times every (model, method, h) combination, model-major then method then
/// step size. Per-cell failures are collected; the sweep continues.
BenchSuiteResult run_benchmark_suite(std::span<const Model> models,
                                     std::span<const Method> methods,
                                     std::span<const double> step_sizes,
                                     const BenchConfig& base,
                                     const SweepProblem& problem = {});

}  // namespace epibench
