#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "epibench/grid.hpp"
#include "epibench/trajectory.hpp"
#include "epibench/types.hpp"

namespace epibench {

/// Tolerances and step bounds for the adaptive reference solver. Fields set
/// to 0 are derived from the integration interval at solve time:
/// h_init = 1e-3*(b-t0), h_min = 1e-12*(b-t0), h_max = b-t0.
struct AdaptiveConfig {
  double rtol = 1e-8;
  double atol = 1e-10;
  double h_init = 0.0;
  double h_min = 0.0;
  double h_max = 0.0;
  long max_steps = 1'000'000;

  AdaptiveConfig resolved(double t0, double b) const {
    AdaptiveConfig c = *this;
    const double span = b - t0;
    if (c.h_init == 0.0) c.h_init = 1e-3 * span;
    if (c.h_min == 0.0) c.h_min = 1e-12 * span;
    if (c.h_max == 0.0) c.h_max = span;
    c.validate();
    return c;
  }

  void validate() const {
    if (!(rtol > 0.0 && rtol < 1.0)) throw std::invalid_argument("AdaptiveConfig: need 0 < rtol < 1");
    if (!(atol > 0.0)) throw std::invalid_argument("AdaptiveConfig: need atol > 0");
    if (!(h_min > 0.0 && h_min <= h_init && h_init <= h_max))
      throw std::invalid_argument("AdaptiveConfig: need 0 < h_min <= h_init <= h_max");
    if (max_steps < 1) throw std::invalid_argument("AdaptiveConfig: need max_steps >= 1");
  }
};

namespace dopri5 {
// Dormand-Prince 5(4) tableau. The 7th stage reuses the 5th-order weights
// (FSAL: its slope is next step's k1).
inline constexpr std::array<double, 7> c = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
inline constexpr std::array<std::array<double, 6>, 7> a = {{
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
}};
inline constexpr std::array<double, 7> b5 = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                                             -2187.0 / 6784, 11.0 / 84, 0.0};
inline constexpr std::array<double, 7> b4 = {5179.0 / 57600,     0.0,          7571.0 / 16695,
                                             393.0 / 640,        -92097.0 / 339200,
                                             187.0 / 2100,       1.0 / 40};
// Weights of the quartic dense-output interpolant (Hairer/Norsett/Wanner).
inline constexpr std::array<double, 7> d = {
    -12715105075.0 / 11282082432.0, 0.0, 87487479700.0 / 32700410799.0,
    -10690763975.0 / 1880347072.0,  701980252875.0 / 199316789632.0,
    -1453857185.0 / 822651844.0,    69997945.0 / 29380423.0};
}  // namespace dopri5

/// Piecewise-quartic interpolant over the accepted steps of an adaptive
/// solve. Evaluation at an accepted endpoint returns the stored state bit
/// for bit; in between it evaluates the per-step dense-output polynomial.
template <int Dim>
class DenseSolution {
 public:
  using State = Vec<double, Dim>;

  double t0() const { return times_.front(); }
  double b() const { return times_.back(); }
  Index num_steps() const { return static_cast<Index>(widths_.size()); }

  /// Accepted step endpoints (monotone, covering [t0, b] without gaps).
  const std::vector<double>& step_times() const { return times_; }
  const State& state(Index k) const { return states_[static_cast<size_t>(k)]; }

  State eval(double t) const {
    if (t < t0() || t > b()) throw std::out_of_range("DenseSolution::eval: t outside [t0, b]");
    auto it = std::upper_bound(times_.begin(), times_.end(), t);
    size_t k = static_cast<size_t>(std::distance(times_.begin(), it));
    k = (k == 0) ? 0 : k - 1;
    k = std::min(k, widths_.size() - 1);
    if (t == times_[k]) return states_[k];
    if (t == times_[k + 1]) return states_[k + 1];
    const double theta = (t - times_[k]) / widths_[k];
    const double theta1 = 1.0 - theta;
    const auto& r = rcont_[k];
    return r[0] + theta * (r[1] + theta1 * (r[2] + theta * (r[3] + theta1 * r[4])));
  }

 private:
  template <int D, class Rhs>
  friend DenseSolution<D> reference_solve(Rhs&& rhs, const Vec<double, D>& y0, double t0,
                                          double b, const AdaptiveConfig& config);

  std::vector<double> times_;                  // accepted endpoints, size m+1
  std::vector<State> states_;                  // states at endpoints
  std::vector<double> widths_;                 // step widths, size m
  std::vector<std::array<State, 5>> rcont_;    // dense coefficients per step
};

/// Adaptive Dormand-Prince 5(4) solve with dense output. Each step is
/// accepted when the embedded error estimate satisfies
/// |e_i| <= atol + rtol*max(|y_i|, |y_new_i|) componentwise; the step is
/// then rescaled by min(5, max(0.2, 0.9*err^(-1/5))).
template <int Dim, class Rhs>
DenseSolution<Dim> reference_solve(Rhs&& rhs, const Vec<double, Dim>& y0, double t0, double b,
                                   const AdaptiveConfig& config) {
  using State = Vec<double, Dim>;
  if (!(b > t0)) throw std::invalid_argument("reference_solve: b must be > t0");
  const AdaptiveConfig cfg = config.resolved(t0, b);

  DenseSolution<Dim> sol;
  State y = y0;
  double t = t0;
  double h = cfg.h_init;
  if (!y.allFinite()) throw SolveError("reference_solve: non-finite initial state");
  State k1 = rhs(t, y);
  sol.times_.push_back(t);
  sol.states_.push_back(y);

  std::array<State, 7> k;
  long steps = 0;
  while (t < b) {
    if (++steps > cfg.max_steps)
      throw SolveError("reference_solve: max_steps (" + std::to_string(cfg.max_steps) +
                       ") exceeded at t=" + std::to_string(t));
    h = std::min({h, b - t, cfg.h_max});
    if (h < cfg.h_min)
      throw SolveError("reference_solve: step size underflow at t=" + std::to_string(t));

    k[0] = k1;
    for (int s = 1; s < 7; ++s) {
      State stage = y;
      for (int j = 0; j < s; ++j) {
        if (dopri5::a[s][j] != 0.0) stage += (h * dopri5::a[s][j]) * k[j];
      }
      k[s] = rhs(t + dopri5::c[s] * h, stage);
    }
    State y_new = y;
    for (int j = 0; j < 7; ++j) {
      if (dopri5::b5[j] != 0.0) y_new += (h * dopri5::b5[j]) * k[j];
    }
    State err_vec = State::Zero();
    for (int j = 0; j < 7; ++j) {
      const double de = dopri5::b5[j] - dopri5::b4[j];
      if (de != 0.0) err_vec += (h * de) * k[j];
    }
    double err = 0.0;
    for (int i = 0; i < Dim; ++i) {
      const double scale = cfg.atol + cfg.rtol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      err = std::max(err, std::abs(err_vec[i]) / scale);
    }

    if (err <= 1.0 && y_new.allFinite()) {
      const State y_diff = y_new - y;
      const State bspl = h * k[0] - y_diff;
      State r5 = State::Zero();
      for (int j = 0; j < 7; ++j) {
        if (dopri5::d[j] != 0.0) r5 += (h * dopri5::d[j]) * k[j];
      }
      sol.rcont_.push_back({y, y_diff, bspl, y_diff - h * k[6] - bspl, r5});
      sol.widths_.push_back(h);
      t = (b - t <= h) ? b : t + h;
      y = y_new;
      k1 = k[6];  // FSAL
      sol.times_.push_back(t);
      sol.states_.push_back(y);
    } else if (!err_vec.allFinite() || !y_new.allFinite()) {
      // Poisoned stages: shrink hard and retry; underflow check above
      // turns persistent non-finite right-hand sides into an error.
      h *= 0.2;
      continue;
    }
    const double factor = (err > 0.0) ? 0.9 * std::pow(err, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
  }
  return sol;
}

template <int Dim, class Rhs>
DenseSolution<Dim> reference_solve(Rhs&& rhs, const Vec<double, Dim>& y0, double t0, double b) {
  return reference_solve<Dim>(std::forward<Rhs>(rhs), y0, t0, b, AdaptiveConfig{});
}

/// Evaluates a dense solution on a uniform grid, producing a trajectory
/// aligned with the fixed-step methods for comparison.
template <int Dim>
Trajectory<Dim> sample(const DenseSolution<Dim>& dense, const Grid& grid) {
  if (grid.t0() < dense.t0() || grid.b() > dense.b())
    throw std::out_of_range("sample: grid extends outside the solved interval");
  Trajectory<Dim> traj{grid, StateMatrix<double, Dim>(grid.num_nodes(), Dim), Method::reference};
  for (Index i = 0; i < grid.num_nodes(); ++i) {
    traj.states.row(i) = dense.eval(grid.node(i)).transpose();
  }
  return traj;
}

}  // namespace epibench
