#include "epibench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <stdexcept>
#include <system_error>

namespace epibench {

namespace {

constexpr Method kMethodOrder[] = {Method::euler, Method::rk4, Method::pc,
                                   Method::reference};

int method_rank(Method m) {
  for (int i = 0; i < 4; ++i)
    if (kMethodOrder[i] == m) return i;
  return 4;
}

/// Quotes a CSV field only when it contains a delimiter, quote, or newline.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

/// Distinct step sizes, largest first. Exact double comparison is intended:
/// cells of one table come from the same parsed inputs.
std::vector<double> descending_unique(std::vector<double> hs) {
  std::sort(hs.begin(), hs.end(), std::greater<>());
  hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
  return hs;
}

std::vector<Method> present_methods_in_order(const std::set<int>& ranks) {
  std::vector<Method> out;
  for (int r = 0; r < 4; ++r)
    if (ranks.count(r)) out.push_back(kMethodOrder[r]);
  return out;
}

}  // namespace

double round7(double x) { return std::nearbyint(x * 1e7) / 1e7; }

std::string format_full(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  if (res.ec != std::errc())
    throw std::runtime_error("format_full: to_chars failed");
  return std::string(buf, res.ptr);
}

std::string format_fixed(double x, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

RenderedTable render_accuracy_table(const std::vector<R2Report>& reports) {
  if (reports.empty())
    throw std::invalid_argument("render_accuracy_table: no reports");

  const Model model = reports.front().model;
  std::set<int> ranks;
  std::vector<double> hs;
  std::set<std::pair<int, double>> seen;
  for (const R2Report& r : reports) {
    if (r.model != model)
      throw std::invalid_argument("render_accuracy_table: mixed models");
    const int rank = method_rank(r.method);
    if (!seen.insert({rank, r.h}).second)
      throw std::invalid_argument("render_accuracy_table: duplicate (method, h) cell");
    ranks.insert(rank);
    hs.push_back(r.h);
  }
  hs = descending_unique(hs);
  const std::vector<Method> methods = present_methods_in_order(ranks);

  const auto find_report = [&](Method m, double h) -> const R2Report* {
    for (const R2Report& r : reports)
      if (r.method == m && r.h == h) return &r;
    return nullptr;
  };

  const TableSpec spec = TableSpec::accuracy();
  const int n_comp = compartment_count(model);

  // Text table: one row per (method, compartment), one column per h.
  std::size_t method_w = 6;
  for (Method m : methods) method_w = std::max(method_w, to_string(m).size());
  std::vector<std::string> headers;
  std::size_t col_w = 0;
  for (double h : hs) {
    headers.push_back("h=" + format_full(h));
    col_w = std::max({col_w, headers.back().size(),
                      static_cast<std::size_t>(spec.cell_decimals) + 2});
  }

  std::string text = "R^2 against the reference solution, model " +
                     std::string(to_string(model)) + "\n";
  std::string head = pad_right("method", method_w) + "  " + pad_right("comp", 4);
  for (const std::string& hcol : headers) head += "  " + pad_left(hcol, col_w);
  text += head + "\n";
  text += std::string(head.size(), '-') + "\n";
  for (Method m : methods) {
    for (int c = 0; c < n_comp; ++c) {
      std::string row = pad_right(std::string(to_string(m)), method_w) + "  " +
                        pad_right(compartment_name(model, c), 4);
      for (double h : hs) {
        const R2Report* r = find_report(m, h);
        std::string cell =
            r ? format_fixed(round7(r->per_compartment[c].second), spec.cell_decimals)
              : "-";
        row += "  " + pad_left(cell, col_w);
      }
      text += row + "\n";
    }
  }

  std::string csv = "model,method,compartment,h,r2_full,r2_rounded7\n";
  for (Method m : methods) {
    for (int c = 0; c < n_comp; ++c) {
      for (double h : hs) {
        const R2Report* r = find_report(m, h);
        if (!r) continue;
        const double r2 = r->per_compartment[c].second;
        csv += std::string(to_string(model)) + "," + std::string(to_string(m)) +
               "," + r->per_compartment[c].first + "," + format_full(h) + "," +
               format_full(r2) + "," + format_fixed(round7(r2), 7) + "\n";
      }
    }
  }

  return {text, csv};
}

RenderedTable render_runtime_table(const std::vector<BenchRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("render_runtime_table: no records");

  const Model model = records.front().config.model;
  const std::string& host = records.front().host;
  std::set<int> ranks;
  std::vector<double> hs;
  std::set<std::pair<int, double>> seen;
  for (const BenchRecord& r : records) {
    if (r.config.model != model)
      throw std::invalid_argument("render_runtime_table: mixed models");
    if (r.host != host)
      throw std::invalid_argument("render_runtime_table: mixed hosts");
    const int rank = method_rank(r.config.method);
    if (!seen.insert({rank, r.config.h}).second)
      throw std::invalid_argument("render_runtime_table: duplicate (method, h) cell");
    ranks.insert(rank);
    hs.push_back(r.config.h);
  }
  hs = descending_unique(hs);
  const std::vector<Method> methods = present_methods_in_order(ranks);

  const auto find_record = [&](Method m, double h) -> const BenchRecord* {
    for (const BenchRecord& r : records)
      if (r.config.method == m && r.config.h == h) return &r;
    return nullptr;
  };

  const TableSpec spec = TableSpec::runtime();

  std::size_t method_w = 6;
  for (Method m : methods) method_w = std::max(method_w, to_string(m).size());
  std::size_t label_w = 0;
  std::vector<std::string> hlabels;
  for (double h : hs) {
    hlabels.push_back("h=" + format_full(h) + ":");
    label_w = std::max(label_w, hlabels.back().size());
  }

  std::string text = "Run-time per solve, model " + std::string(to_string(model)) +
                     " (median seconds over measured runs)\n";
  text += "host: " + host + "\n";
  text += std::string(method_w + 2 + label_w + 1 + spec.cell_decimals + 2, '-') + "\n";
  for (Method m : methods) {
    bool first = true;
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const BenchRecord* r = find_record(m, hs[k]);
      if (!r) continue;
      std::string row = pad_right(first ? std::string(to_string(m)) : "", method_w);
      row += "  " + pad_right(hlabels[k], label_w) + " " +
             format_fixed(r->median_s, spec.cell_decimals);
      text += row + "\n";
      first = false;
    }
  }

  std::string csv = "model,method,h,median_s,min_s,mean_s,stddev_s,host,timestamp\n";
  for (Method m : methods) {
    for (double h : hs) {
      const BenchRecord* r = find_record(m, h);
      if (!r) continue;
      csv += std::string(to_string(model)) + "," + std::string(to_string(m)) + "," +
             format_full(h) + "," + format_full(r->median_s) + "," +
             format_full(r->min_s) + "," + format_full(r->mean_s) + "," +
             format_full(r->stddev_s) + "," + csv_escape(r->host) + "," +
             csv_escape(r->timestamp) + "\n";
    }
  }

  return {text, csv};
}

std::string runtime_long_csv(const std::vector<BenchRecord>& records) {
  if (records.empty())
    throw std::invalid_argument("runtime_long_csv: no records");
  std::string csv = "model,method,h,run_index,seconds\n";
  for (const BenchRecord& r : records) {
    for (std::size_t i = 0; i < r.run_seconds.size(); ++i) {
      csv += std::string(to_string(r.config.model)) + "," +
             std::string(to_string(r.config.method)) + "," +
             format_full(r.config.h) + "," + std::to_string(i) + "," +
             format_full(r.run_seconds[i]) + "\n";
    }
  }
  return csv;
}

}  // namespace epibench
