#pragma once

#include <cmath>
#include <stdexcept>

#include "epibench/types.hpp"

namespace epibench {

/// Uniform time discretisation of [t0, b] into n intervals (n+1 nodes,
/// right endpoint included). h = (b - t0)/n.
class Grid {
 public:
  Grid(double t0, double b, Index n) : t0_(t0), b_(b), n_(n) {
    if (!(b > t0)) throw std::invalid_argument("Grid: b must be > t0");
    if (n < 1) throw std::invalid_argument("Grid: n must be >= 1");
    h_ = (b - t0) / static_cast<double>(n);
  }

  double t0() const { return t0_; }
  double b() const { return b_; }
  Index n() const { return n_; }
  double h() const { return h_; }
  Index num_nodes() const { return n_ + 1; }

  /// Node i = t0 + i*h, except node n which is pinned to b so the right
  /// endpoint is hit exactly regardless of rounding in h.
  double node(Index i) const { return i == n_ ? b_ : t0_ + static_cast<double>(i) * h_; }

 private:
  double t0_;
  double b_;
  Index n_;
  double h_;
};

/// Builds the grid for a requested step size. The step must divide the
/// interval to within 1e-9 relative slack; h is then recomputed as
/// (b - t0)/n so the nodes land exactly on b.
inline Grid make_grid(double t0, double b, double h_requested) {
  if (!(b > t0)) throw std::invalid_argument("make_grid: b must be > t0");
  if (!(h_requested > 0)) throw std::invalid_argument("make_grid: step must be > 0");
  const double ratio = (b - t0) / h_requested;
  const auto n = static_cast<Index>(std::llround(ratio));
  if (n < 1 || std::abs(ratio - static_cast<double>(n)) > 1e-9 * std::max(1.0, ratio))
    throw std::invalid_argument("make_grid: step does not evenly divide the interval");
  return Grid(t0, b, n);
}

inline bool grids_equal(const Grid& a, const Grid& b, double rel_tol = 1e-12) {
  auto close = [rel_tol](double x, double y) {
    return std::abs(x - y) <= rel_tol * std::max({1.0, std::abs(x), std::abs(y)});
  };
  return a.n() == b.n() && close(a.t0(), b.t0()) && close(a.b(), b.b());
}

}  // namespace epibench
