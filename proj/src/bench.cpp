#include "epibench/bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <numeric>

#include "epibench/integrators.hpp"
#include "epibench/trajectory.hpp"

namespace epibench {

namespace {

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  const std::size_t mid = n / 2;
  return (n % 2 == 1) ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Runs the cell for one compartment count. Storage is allocated and the
/// initial row written before the clock starts; each measured run re-writes
/// row 0 (the stepping loop never reads anything above the current row, so
/// stale rows from the previous run are harmless).
template <int Dim, class Rhs>
BenchRecord time_cell(const BenchConfig& config, Rhs&& rhs,
                      const Vec<double, Dim>& y0, const Grid& grid) {
  using clock = std::chrono::steady_clock;

  BenchRecord rec;
  rec.config = config;
  rec.run_seconds.reserve(static_cast<std::size_t>(config.measured_runs));

  StateMatrix<double, Dim> states(grid.num_nodes(), Dim);
  states.row(0) = y0.transpose();

  for (int i = 0; i < config.warmup_runs; ++i) {
    states.row(0) = y0.transpose();
    const Index bad = run_fixed_steps<Dim>(config.method, rhs, grid, states);
    if (bad >= 0)
      throw SolveError("benchmark warmup produced a non-finite state", bad,
                       states.topRows(bad + 1));
  }

  for (int i = 0; i < config.measured_runs; ++i) {
    states.row(0) = y0.transpose();
    const auto start = clock::now();
    const Index bad = run_fixed_steps<Dim>(config.method, rhs, grid, states);
    const auto stop = clock::now();
    if (bad >= 0)
      throw SolveError("benchmark run produced a non-finite state", bad,
                       states.topRows(bad + 1));
    rec.run_seconds.push_back(std::chrono::duration<double>(stop - start).count());
  }

  rec.final_state = states.row(states.rows() - 1).transpose();
  rec.checksum = rec.final_state.sum();  // data dependence on the timed work

  rec.median_s = median_of(rec.run_seconds);
  rec.min_s = *std::min_element(rec.run_seconds.begin(), rec.run_seconds.end());
  rec.mean_s = std::accumulate(rec.run_seconds.begin(), rec.run_seconds.end(), 0.0) /
               static_cast<double>(rec.run_seconds.size());
  double ss = 0.0;
  for (double s : rec.run_seconds) ss += (s - rec.mean_s) * (s - rec.mean_s);
  rec.stddev_s = std::sqrt(ss / static_cast<double>(rec.run_seconds.size()));

  rec.host = host_descriptor();
  rec.timestamp = utc_timestamp();
  return rec;
}

}  // namespace

std::string host_descriptor() {
  utsname u{};
  if (uname(&u) != 0) return "unknown";
  // Comma-free so the descriptor drops into a CSV field unquoted.
  std::string s = u.nodename;
  s += " (";
  s += u.sysname;
  s += " ";
  s += u.release;
  s += " ";
  s += u.machine;
  s += ")";
  return s;
}

Eigen::VectorXd SweepProblem::initial_state(Model m) const {
  if (m == Model::si) {
    Eigen::VectorXd y(2);
    y << s0, i0;
    return y;
  }
  Eigen::VectorXd y(3);
  y << s0, i0, r0;
  return y;
}

BenchRecord time_solver(const BenchConfig& config, const ModelSpec& spec,
                        const Eigen::VectorXd& y0, const Grid& grid) {
  config.validate();
  if (config.model != spec.model)
    throw std::invalid_argument("time_solver: config.model does not match spec.model");
  if (config.method == Method::reference)
    throw std::invalid_argument("time_solver: only fixed-step methods are benchmarked");
  if (y0.size() != spec.dim())
    throw std::invalid_argument("time_solver: initial state has wrong dimension");

  if (spec.model == Model::si) {
    SiParams<double> p(spec.alpha);
    return time_cell<2>(config, SiSystem<double>(p), Vec2<double>(y0), grid);
  }
  SirParams<double> p(spec.alpha, spec.beta);
  return time_cell<3>(config, SirSystem<double>(p), Vec3<double>(y0), grid);
}

BenchSuiteResult run_benchmark_suite(std::span<const Model> models,
                                     std::span<const Method> methods,
                                     std::span<const double> step_sizes,
                                     const BenchConfig& base,
                                     const SweepProblem& problem) {
  base.validate();
  if (models.empty()) throw std::invalid_argument("run_benchmark_suite: no models");
  if (methods.empty()) throw std::invalid_argument("run_benchmark_suite: no methods");
  if (step_sizes.empty()) throw std::invalid_argument("run_benchmark_suite: no step sizes");

  BenchSuiteResult result;
  for (Model m : models) {
    const ModelSpec spec = problem.spec(m);
    const Eigen::VectorXd y0 = problem.initial_state(m);
    for (Method method : methods) {
      for (double h : step_sizes) {
        BenchConfig cfg = base;
        cfg.model = m;
        cfg.method = method;
        cfg.h = h;
        try {
          const Grid grid = make_grid(problem.t0, problem.tend, h);
          result.records.push_back(time_solver(cfg, spec, y0, grid));
        } catch (const std::exception& e) {
          result.failures.push_back({cfg, e.what()});
        }
      }
    }
  }
  return result;
}

}  // namespace epibench
