// epibench: solve SI/SIR compartmental models, score accuracy against a
// reference solution, and benchmark the fixed-step solvers.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "epibench/bench.hpp"
#include "epibench/golden.hpp"
#include "epibench/integrators.hpp"
#include "epibench/metrics.hpp"
#include "epibench/models.hpp"
#include "epibench/plot.hpp"
#include "epibench/refsolver.hpp"
#include "epibench/report.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace epibench;

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path.string());
  f << content;
  f.flush();
  if (!f) throw IoError("write failed: " + path.string());
}

fs::path ensure_out_dir(const std::string& out) {
  fs::path dir(out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw IoError("cannot create output directory: " + out);
  return dir;
}

/// Options shared by all subcommands. Defaults are the 1978 boarding-school
/// influenza parameters.
struct CommonOpts {
  std::string model = "si";
  double alpha = influenza1978::alpha;
  double beta = influenza1978::beta;
  double s0 = influenza1978::s0;
  double i0 = influenza1978::i0;
  double r0 = influenza1978::r0;
  double t0 = influenza1978::t0;
  double tend = influenza1978::tend;
  std::string out = ".";
  std::string format = "table";

  CLI::Option* model_opt = nullptr;
  CLI::Option* beta_opt = nullptr;
  CLI::Option* r0_opt = nullptr;
};

void add_common(CLI::App* sub, CommonOpts& o, bool model_choice = true) {
  // Long-only help so the single-letter step-size flag --h stays available.
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->option_defaults()->always_capture_default();
  if (model_choice)
    o.model_opt = sub->add_option("--model", o.model, "Model to solve")
                      ->check(CLI::IsMember({"si", "sir"}));
  sub->add_option("--alpha", o.alpha, "Transmission rate (1/(individual*day))");
  o.beta_opt = sub->add_option("--beta", o.beta, "Recovery rate (1/day), SIR only");
  sub->add_option("--s0", o.s0, "Initial susceptible count");
  sub->add_option("--i0", o.i0, "Initial infected count");
  o.r0_opt = sub->add_option("--r0", o.r0, "Initial recovered count, SIR only");
  sub->add_option("--t0", o.t0, "Interval start (days)");
  sub->add_option("--tend", o.tend, "Interval end (days)");
  sub->add_option("--out", o.out, "Output directory");
  sub->add_option("--format", o.format, "Stdout rendering")
      ->check(CLI::IsMember({"csv", "json", "table"}));
}

Model validated_model(const CommonOpts& o) {
  const Model m = parse_model(o.model);
  if (m == Model::si && o.beta_opt->count() > 0)
    throw std::invalid_argument("--beta applies only to --model sir");
  if (m == Model::si && o.r0_opt->count() > 0)
    throw std::invalid_argument("--r0 applies only to --model sir");
  return m;
}

std::vector<double> clean_steps(std::vector<double> hs) {
  if (hs.empty()) throw std::invalid_argument("step size list is empty");
  for (double h : hs)
    if (!(h > 0)) throw std::invalid_argument("step sizes must be > 0");
  std::sort(hs.begin(), hs.end(), std::greater<>());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<Method> parse_methods(const std::vector<std::string>& names) {
  if (names.empty()) throw std::invalid_argument("method list is empty");
  std::vector<Method> out;
  for (const std::string& n : names) {
    const Method m = parse_method(n);
    if (m == Method::reference)
      throw std::invalid_argument("'reference' is the baseline, not a candidate method");
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

std::string h_tag(double h) { return "h" + format_full(h); }

// ---------------------------------------------------------------------------
// solve

struct SolveOpts {
  CommonOpts common;
  std::string method = "rk4";
  double h = 0.25;
  bool plot = false;
};

template <int Dim>
std::string trajectory_csv(const Trajectory<Dim>& traj, Model model) {
  std::string csv = "t";
  for (int c = 0; c < Dim; ++c) csv += std::string(",") + compartment_name(model, c);
  csv += "\n";
  for (Index i = 0; i < traj.num_nodes(); ++i) {
    csv += format_full(traj.grid.node(i));
    for (int c = 0; c < Dim; ++c) csv += "," + format_full(traj.states(i, c));
    csv += "\n";
  }
  return csv;
}

template <int Dim>
json trajectory_json(const Trajectory<Dim>& traj, Model model) {
  json rows = json::array();
  for (Index i = 0; i < traj.num_nodes(); ++i) {
    json row;
    row["t"] = traj.grid.node(i);
    for (int c = 0; c < Dim; ++c) row[compartment_name(model, c)] = traj.states(i, c);
    rows.push_back(row);
  }
  return rows;
}

template <int Dim>
std::string solve_summary(const Trajectory<Dim>& traj, Model model, Method method) {
  const Index last = traj.num_nodes() - 1;
  std::string text = "solve summary\n";
  text += "  model:  " + std::string(to_string(model)) + "\n";
  text += "  method: " + std::string(to_string(method)) + "\n";
  text += "  grid:   h=" + format_full(traj.grid.h()) + ", " +
          std::to_string(traj.num_nodes()) + " nodes on [" + format_full(traj.grid.t0()) +
          ", " + format_full(traj.grid.b()) + "]\n";
  text += "  final:  ";
  for (int c = 0; c < Dim; ++c) {
    if (c) text += "  ";
    text += std::string(compartment_name(model, c)) + "=" +
            format_fixed(traj.states(last, c), 6);
  }
  text += "\n  total:  " + format_fixed(traj.states.row(last).sum(), 6) + "\n";
  return text;
}

/// Exact-solution overlay for SI plots. Returns false (with a warning) when
/// the closed form is singular, e.g. i0 = 0.
bool append_si_exact_overlay(std::vector<Series>& series, const SiParams<double>& p,
                             double s0, double i0, const Grid& grid) {
  std::vector<double> t(grid.num_nodes()), se(grid.num_nodes()), ie(grid.num_nodes());
  try {
    for (Index k = 0; k < grid.num_nodes(); ++k) {
      const Vec2<double> e = si_exact(p, s0, i0, grid.node(k));
      t[k] = grid.node(k);
      se[k] = e[0];
      ie[k] = e[1];
    }
  } catch (const std::domain_error& e) {
    std::cerr << "warning: exact-solution overlay suppressed: " << e.what() << "\n";
    return false;
  }
  series.push_back({"S (exact)", t, se, true});
  series.push_back({"I (exact)", std::move(t), std::move(ie), true});
  return true;
}

template <int Dim>
int emit_solve_outputs(const Trajectory<Dim>& traj, const SolveOpts& o, Model model,
                       Method method) {
  const fs::path dir = ensure_out_dir(o.common.out);
  const std::string stem = "trajectory_" + std::string(to_string(model)) + "_" +
                           std::string(to_string(method)) + "_" + h_tag(o.h);
  const std::string csv = trajectory_csv(traj, model);
  write_file(dir / (stem + ".csv"), csv);

  if (o.common.format == "json")
    write_file(dir / (stem + ".json"), trajectory_json(traj, model).dump(2) + "\n");

  if (o.plot) {
    std::vector<Series> series;
    for (int c = 0; c < Dim; ++c) {
      std::vector<double> t(traj.num_nodes()), y(traj.num_nodes());
      for (Index i = 0; i < traj.num_nodes(); ++i) {
        t[i] = traj.grid.node(i);
        y[i] = traj.states(i, c);
      }
      series.push_back({compartment_name(model, c), std::move(t), std::move(y), false});
    }
    if (model == Model::si)
      append_si_exact_overlay(series, SiParams<double>(o.common.alpha), o.common.s0,
                              o.common.i0, traj.grid);
    const std::string title = std::string(to_string(model)) + " model, " +
                              std::string(to_string(method)) + ", h=" + format_full(o.h);
    write_file(dir / (stem + ".svg"),
               render_line_chart(title, "t (days)", "population", series));
  }

  if (o.common.format == "csv")
    std::cout << csv;
  else if (o.common.format == "json")
    std::cout << trajectory_json(traj, model).dump(2) << "\n";
  else
    std::cout << solve_summary(traj, model, method);
  return 0;
}

int cmd_solve(const SolveOpts& o) {
  const Model model = validated_model(o.common);
  const Method method = parse_method(o.method);
  const Grid grid = make_grid(o.common.t0, o.common.tend, o.h);

  if (model == Model::si) {
    const SiParams<double> p(o.common.alpha);
    const SiSystem<double> sys{p};
    const Vec2<double> y0 = SiState<double>(o.common.s0, o.common.i0).vec();
    Trajectory<2> traj =
        method == Method::reference
            ? sample(reference_solve(sys, y0, o.common.t0, o.common.tend), grid)
            : solve<2>(method, sys, y0, grid);
    return emit_solve_outputs(traj, o, model, method);
  }
  const SirParams<double> p(o.common.alpha, o.common.beta);
  const SirSystem<double> sys{p};
  const Vec3<double> y0 = SirState<double>(o.common.s0, o.common.i0, o.common.r0).vec();
  Trajectory<3> traj =
      method == Method::reference
          ? sample(reference_solve(sys, y0, o.common.t0, o.common.tend), grid)
          : solve<3>(method, sys, y0, grid);
  return emit_solve_outputs(traj, o, model, method);
}

// ---------------------------------------------------------------------------
// accuracy

struct AccuracyOpts {
  CommonOpts common;
  std::vector<std::string> methods = {"euler", "rk4", "pc"};
  std::vector<double> hs = {0.25, 0.10, 0.01};
  bool check = false;
};

std::vector<R2Report> accuracy_reports(const AccuracyOpts& o, Model model,
                                       const std::vector<Method>& methods,
                                       const std::vector<double>& hs) {
  std::vector<R2Report> reports;
  if (model == Model::si) {
    const SiParams<double> p(o.common.alpha);
    const SiSystem<double> sys{p};
    const Vec2<double> y0 = SiState<double>(o.common.s0, o.common.i0).vec();
    for (double h : hs) {
      const Grid grid = make_grid(o.common.t0, o.common.tend, h);
      Trajectory<2> ref{grid, StateMatrix<double, 2>(grid.num_nodes(), 2),
                        Method::reference};
      for (Index i = 0; i < grid.num_nodes(); ++i)
        ref.states.row(i) =
            si_exact(p, o.common.s0, o.common.i0, grid.node(i)).transpose();
      for (Method m : methods)
        reports.push_back(compare_trajectories<2>(solve<2>(m, sys, y0, grid), ref, model));
    }
    return reports;
  }
  const SirParams<double> p(o.common.alpha, o.common.beta);
  const SirSystem<double> sys{p};
  const Vec3<double> y0 = SirState<double>(o.common.s0, o.common.i0, o.common.r0).vec();
  const DenseSolution<3> dense = reference_solve(sys, y0, o.common.t0, o.common.tend);
  for (double h : hs) {
    const Grid grid = make_grid(o.common.t0, o.common.tend, h);
    const Trajectory<3> ref = sample(dense, grid);
    for (Method m : methods)
      reports.push_back(compare_trajectories<3>(solve<3>(m, sys, y0, grid), ref, model));
  }
  return reports;
}

json accuracy_json(const std::vector<R2Report>& reports, Model model) {
  json rows = json::array();
  // Mirror the CSV: parse nothing, emit the same cells in the same order.
  for (Method m : {Method::euler, Method::rk4, Method::pc}) {
    for (int c = 0; c < compartment_count(model); ++c) {
      for (const R2Report& r : reports) {
        if (r.method != m) continue;
        rows.push_back({{"model", to_string(model)},
                        {"method", to_string(m)},
                        {"compartment", r.per_compartment[c].first},
                        {"h", r.h},
                        {"r2_full", r.per_compartment[c].second},
                        {"r2_rounded7", round7(r.per_compartment[c].second)}});
      }
    }
  }
  return rows;
}

const R2Report* find_report(const std::vector<R2Report>& reports, Method m, double h) {
  for (const R2Report& r : reports)
    if (r.method == m && r.h == h) return &r;
  return nullptr;
}

void require_check_defaults(const CommonOpts& o, Model model) {
  const bool rates_ok = o.alpha == influenza1978::alpha &&
                        (model == Model::si || o.beta == influenza1978::beta);
  const bool init_ok = o.s0 == influenza1978::s0 && o.i0 == influenza1978::i0 &&
                       (model == Model::si || o.r0 == influenza1978::r0);
  const bool span_ok = o.t0 == influenza1978::t0 && o.tend == influenza1978::tend;
  if (!(rates_ok && init_ok && span_ok))
    throw std::invalid_argument(
        "--check compares against golden values recorded for the default "
        "parameters; rerun without overriding rates, initial counts, or the interval");
}

/// Golden-value validation. Returns the machine-readable summary; pass/fail
/// per cell plus an overall verdict.
json run_golden_checks(const std::vector<R2Report>& reports, Model model,
                       const std::vector<Method>& methods, const std::vector<double>& hs) {
  const auto has_h = [&](double h) {
    return std::find(hs.begin(), hs.end(), h) != hs.end();
  };
  const auto has_m = [&](Method m) {
    return std::find(methods.begin(), methods.end(), m) != methods.end();
  };
  for (double h : golden::step_sizes)
    if (!has_h(h))
      throw std::invalid_argument("--check needs step sizes 0.25, 0.1, 0.01 in the sweep");
  if (model == Model::si) {
    if (!(has_m(Method::euler) && has_m(Method::rk4) && has_m(Method::pc)))
      throw std::invalid_argument("--check for si needs methods euler, rk4, pc");
  } else if (!has_m(Method::rk4)) {
    throw std::invalid_argument("--check for sir needs method rk4");
  }

  json checks = json::array();
  bool all_pass = true;
  const auto add = [&](std::string name, Method m, double h, const std::string& comp,
                       double value, double target, double bound, bool pass) {
    checks.push_back({{"name", std::move(name)},
                      {"method", to_string(m)},
                      {"h", h},
                      {"compartment", comp},
                      {"value", value},
                      {"target", target},
                      {"bound", bound},
                      {"pass", pass}});
    all_pass = all_pass && pass;
  };

  if (model == Model::si) {
    for (const golden::SiR2Target& g : golden::si_r2_targets) {
      const R2Report* r = find_report(reports, g.method, g.h);
      for (const auto& [comp, r2] : r->per_compartment) {
        const bool pass = std::abs(round7(r2) - g.r2_rounded7) < golden::rounded7_tol;
        add("rounded7_matches", g.method, g.h, comp, r2, g.r2_rounded7,
            golden::rounded7_tol, pass);
      }
    }
    for (double h : golden::step_sizes) {
      const R2Report* r = find_report(reports, Method::rk4, h);
      for (const auto& [comp, r2] : r->per_compartment) {
        const bool pass = std::abs(r2 - 1.0) < golden::rk4_r2_one_tol;
        add("unity_within_tol", Method::rk4, h, comp, r2, 1.0, golden::rk4_r2_one_tol,
            pass);
      }
    }
    const R2Report* pc_fine = find_report(reports, Method::pc, 0.01);
    for (const auto& [comp, r2] : pc_fine->per_compartment) {
      const bool pass = r2 >= golden::pc_fine_r2_min;
      add("at_least_floor", Method::pc, 0.01, comp, r2, golden::pc_fine_r2_min, 0.0,
          pass);
    }
  } else {
    for (double h : golden::step_sizes) {
      const R2Report* r = find_report(reports, Method::rk4, h);
      for (const auto& [comp, r2] : r->per_compartment) {
        const bool pass = r2 >= golden::sir_r2_min;
        add("at_least_band", Method::rk4, h, comp, r2, golden::sir_r2_min, 0.0, pass);
      }
    }
  }

  return {{"model", to_string(model)}, {"all_pass", all_pass}, {"checks", checks}};
}

int cmd_accuracy(const AccuracyOpts& o) {
  const Model model = validated_model(o.common);
  const std::vector<Method> methods = parse_methods(o.methods);
  const std::vector<double> hs = clean_steps(o.hs);

  const std::vector<R2Report> reports = accuracy_reports(o, model, methods, hs);
  const RenderedTable table = render_accuracy_table(reports);

  const fs::path dir = ensure_out_dir(o.common.out);
  const std::string stem = "accuracy_" + std::string(to_string(model));
  write_file(dir / (stem + ".csv"), table.csv);
  if (o.common.format == "json")
    write_file(dir / (stem + ".json"), accuracy_json(reports, model).dump(2) + "\n");

  if (o.check) {
    require_check_defaults(o.common, model);
    const json summary = run_golden_checks(reports, model, methods, hs);
    std::cout << summary.dump(2) << "\n";
    return summary["all_pass"].get<bool>() ? 0 : 3;
  }

  if (o.common.format == "csv")
    std::cout << table.csv;
  else if (o.common.format == "json")
    std::cout << accuracy_json(reports, model).dump(2) << "\n";
  else
    std::cout << table.text;
  return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOpts {
  CommonOpts common;
  std::vector<std::string> methods = {"euler", "rk4", "pc"};
  std::vector<double> hs = {0.25, 0.10, 0.01};
  int warmup_runs = 3;
  int measured_runs = 11;
};

json summary_json(const std::vector<BenchRecord>& records) {
  json rows = json::array();
  for (const BenchRecord& r : records) {
    rows.push_back({{"model", to_string(r.config.model)},
                    {"method", to_string(r.config.method)},
                    {"h", r.config.h},
                    {"median_s", r.median_s},
                    {"min_s", r.min_s},
                    {"mean_s", r.mean_s},
                    {"stddev_s", r.stddev_s},
                    {"host", r.host},
                    {"timestamp", r.timestamp}});
  }
  return rows;
}

json runs_json(const std::vector<BenchRecord>& records) {
  json rows = json::array();
  for (const BenchRecord& r : records)
    for (std::size_t i = 0; i < r.run_seconds.size(); ++i)
      rows.push_back({{"model", to_string(r.config.model)},
                      {"method", to_string(r.config.method)},
                      {"h", r.config.h},
                      {"run_index", i},
                      {"seconds", r.run_seconds[i]}});
  return rows;
}

/// Drops the header line; used when concatenating per-model CSV bodies.
std::string csv_body(const std::string& csv) {
  const std::size_t nl = csv.find('\n');
  return nl == std::string::npos ? std::string() : csv.substr(nl + 1);
}

int cmd_bench(const BenchOpts& o) {
  const std::vector<Method> methods = parse_methods(o.methods);
  const std::vector<double> hs = clean_steps(o.hs);

  std::vector<Model> models;
  if (o.common.model_opt->count() > 0)
    models.push_back(validated_model(o.common));
  else
    models = {Model::si, Model::sir};

  SweepProblem problem;
  problem.alpha = o.common.alpha;
  problem.beta = o.common.beta;
  problem.s0 = o.common.s0;
  problem.i0 = o.common.i0;
  problem.r0 = o.common.r0;
  problem.t0 = o.common.t0;
  problem.tend = o.common.tend;

  BenchConfig base;
  base.warmup_runs = o.warmup_runs;
  base.measured_runs = o.measured_runs;

  const BenchSuiteResult result = run_benchmark_suite(models, methods, hs, base, problem);
  for (const BenchFailure& f : result.failures)
    std::cerr << "bench cell failed: model=" << to_string(f.config.model)
              << " method=" << to_string(f.config.method) << " h=" << f.config.h << ": "
              << f.message << "\n";

  bool loaded = false;
  for (const BenchRecord& r : result.records)
    if (r.min_s > 0 && r.median_s / r.min_s > 3.0) loaded = true;
  if (loaded)
    std::cerr << "warning: median/min run-time ratio exceeds 3; the host looks loaded, "
                 "treat these timings with suspicion\n";

  std::string combined_text;
  std::string combined_summary_csv;
  for (Model m : models) {
    std::vector<BenchRecord> group;
    for (const BenchRecord& r : result.records)
      if (r.config.model == m) group.push_back(r);
    if (group.empty()) continue;
    const RenderedTable t = render_runtime_table(group);
    if (!combined_text.empty()) combined_text += "\n";
    combined_text += t.text;
    if (combined_summary_csv.empty())
      combined_summary_csv = t.csv;
    else
      combined_summary_csv += csv_body(t.csv);
  }

  if (result.records.empty()) {
    std::cerr << "error: every benchmark cell failed\n";
    return 2;
  }

  const fs::path dir = ensure_out_dir(o.common.out);
  write_file(dir / "bench_runs.csv", runtime_long_csv(result.records));
  write_file(dir / "bench_summary.csv", combined_summary_csv);
  if (o.common.format == "json") {
    write_file(dir / "bench_runs.json", runs_json(result.records).dump(2) + "\n");
    write_file(dir / "bench_summary.json", summary_json(result.records).dump(2) + "\n");
  }

  if (o.common.format == "csv")
    std::cout << combined_summary_csv;
  else if (o.common.format == "json")
    std::cout << summary_json(result.records).dump(2) << "\n";
  else
    std::cout << combined_text;

  return result.failures.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "epibench: SI/SIR epidemic models solved with fixed-step methods "
      "(euler, rk4, pc), scored against reference solutions, and timed.\n"
      "Precedence: command-line flags override --config file values, which "
      "override built-in defaults (the 1978 boarding-school influenza case)."};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style config file");

  SolveOpts so;
  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Integrate the model once and emit the trajectory (CSV, optional SVG)");
  add_common(solve_cmd, so.common);
  solve_cmd->option_defaults()->always_capture_default();
  solve_cmd->add_option("--method", so.method, "Integration method")
      ->check(CLI::IsMember({"euler", "rk4", "pc", "reference"}));
  solve_cmd->add_option("--h", so.h, "Step size (must evenly divide the interval)");
  solve_cmd->add_flag("--plot", so.plot, "Also write an SVG line chart");

  AccuracyOpts ao;
  CLI::App* accuracy_cmd = app.add_subcommand(
      "accuracy", "Score methods against the reference solution (R^2 per compartment)");
  add_common(accuracy_cmd, ao.common);
  accuracy_cmd->option_defaults()->always_capture_default();
  accuracy_cmd->add_option("--method", ao.methods, "Methods to score (repeatable)");
  accuracy_cmd->add_option("--h", ao.hs, "Step sizes to score (repeatable)");
  accuracy_cmd->add_flag("--check", ao.check,
                         "Validate golden R^2 values; prints a JSON summary, exit 3 on "
                         "violation (requires default parameters)");

  BenchOpts bo;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Time the stepping loops (median over repeated runs)");
  add_common(bench_cmd, bo.common);
  bench_cmd->option_defaults()->always_capture_default();
  bench_cmd->add_option("--method", bo.methods, "Methods to time (repeatable)");
  bench_cmd->add_option("--h", bo.hs, "Step sizes to time (repeatable)");
  bench_cmd->add_option("--warmup-runs", bo.warmup_runs, "Untimed runs before measuring")
      ->check(CLI::Range(1, 1000));
  bench_cmd->add_option("--measured-runs", bo.measured_runs, "Timed runs per cell")
      ->check(CLI::Range(3, 100000));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version exit clean; anything else is usage
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(so);
    if (accuracy_cmd->parsed()) return cmd_accuracy(ao);
    if (bench_cmd->parsed()) return cmd_bench(bo);
    std::cerr << "error: no subcommand\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const SolveError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const ZeroVarianceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
