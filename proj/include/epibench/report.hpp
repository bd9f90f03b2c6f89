#pragma once

#include <string>
#include <vector>

#include "epibench/bench.hpp"
#include "epibench/metrics.hpp"

namespace epibench {

enum class TableKind { accuracy, runtime };

/// Layout contract for the two result tables: methods group the rows
/// (compartments within a group), step sizes span the columns, and cells
/// display with a fixed decimal count. Text output is lossy; the CSV mirror
/// carries full precision.
struct TableSpec {
  TableKind kind;
  int cell_decimals;

  static TableSpec accuracy() { return {TableKind::accuracy, 7}; }
  static TableSpec runtime() { return {TableKind::runtime, 6}; }
};

struct RenderedTable {
  std::string text;
  std::string csv;
};

/// Rounds to 7 decimal places, ties to even. This is the display rounding
/// applied to R^2 cells; golden comparisons use the rounded value.
double round7(double x);

/// Shortest decimal string that parses back to exactly x.
std::string format_full(double x);

/// Fixed-point rendering with the given decimal count.
std::string format_fixed(double x, int decimals);

/// Renders R^2 results for one model: rows method (euler, rk4, pc) then
/// compartment, columns step size descending. CSV schema:
/// model,method,compartment,h,r2_full,r2_rounded7 (r2_full round-trips).
/// Throws std::invalid_argument on empty input, mixed models, or duplicate
/// (method, h) cells.
RenderedTable render_accuracy_table(const std::vector<R2Report>& reports);

/// Renders median run-times for one model on one host: methods as rows, one
/// "h=...: seconds" line per step size, 6-decimal seconds. CSV is the summary
/// schema: model,method,h,median_s,min_s,mean_s,stddev_s,host,timestamp.
/// Throws std::invalid_argument on empty input, mixed models, mixed hosts, or
/// duplicate (method, h) cells.
RenderedTable render_runtime_table(const std::vector<BenchRecord>& records);

/// Long-form timing CSV: model,method,h,run_index,seconds (run_index 0-based,
/// one row per measured run). Throws std::invalid_argument on empty input.
std::string runtime_long_csv(const std::vector<BenchRecord>& records);

}  // namespace epibench
