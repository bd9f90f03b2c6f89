#pragma once

#include <string>
#include <utility>

#include "epibench/grid.hpp"
#include "epibench/trajectory.hpp"
#include "epibench/types.hpp"

namespace epibench {

// Single-step kernels. Rhs is any callable (Scalar t, const Vec<Scalar,Dim>&)
// -> Vec<Scalar,Dim>. The systems here are autonomous, but stage times are
// threaded through anyway so the kernels stay correct for non-autonomous
// right-hand sides.

template <class Scalar, int Dim, class Rhs>
Vec<Scalar, Dim> euler_step(Rhs&& rhs, Scalar t, const Vec<Scalar, Dim>& y, Scalar h) {
  return y + h * rhs(t, y);
}

/// Classical RK4: slopes at t, t+h/2 (twice), t+h, combined 1:2:2:1 over 6.
template <class Scalar, int Dim, class Rhs>
Vec<Scalar, Dim> rk4_step(Rhs&& rhs, Scalar t, const Vec<Scalar, Dim>& y, Scalar h) {
  const Scalar half = h / Scalar(2);
  const Vec<Scalar, Dim> k1 = rhs(t, y);
  const Vec<Scalar, Dim> k2 = rhs(t + half, (y + half * k1).eval());
  const Vec<Scalar, Dim> k3 = rhs(t + half, (y + half * k2).eval());
  const Vec<Scalar, Dim> k4 = rhs(t + h, (y + h * k3).eval());
  return y + (h / Scalar(6)) * (k1 + Scalar(2) * k2 + Scalar(2) * k3 + k4);
}

/// Heun predictor-corrector: Euler predictor, then a single trapezoidal
/// corrector (no corrector iteration).
template <class Scalar, int Dim, class Rhs>
Vec<Scalar, Dim> pc_step(Rhs&& rhs, Scalar t, const Vec<Scalar, Dim>& y, Scalar h) {
  const Vec<Scalar, Dim> f0 = rhs(t, y);
  const Vec<Scalar, Dim> predicted = y + h * f0;
  const Vec<Scalar, Dim> f1 = rhs(t + h, predicted);
  return y + (h / Scalar(2)) * (f0 + f1);
}

/// Runs the stepping loop of `method` over `grid`, writing node states into
/// the pre-allocated `states` (row 0 must already hold y0). Returns -1 on
/// success, or the index of the first non-finite node; rows past that index
/// are left untouched. This is the exact code path the benchmark times, so
/// it allocates nothing.
template <int Dim, class Rhs>
Index run_fixed_steps(Method method, Rhs&& rhs, const Grid& grid,
                      StateMatrix<double, Dim>& states) {
  const Index n = grid.n();
  const double h = grid.h();
  const double t0 = grid.t0();
  Vec<double, Dim> y = states.row(0).transpose();

  auto loop = [&](auto&& step) -> Index {
    for (Index i = 0; i < n; ++i) {
      y = step(t0 + static_cast<double>(i) * h, y);
      states.row(i + 1) = y.transpose();
      if (!y.allFinite()) return i + 1;
    }
    return -1;
  };

  switch (method) {
    case Method::euler:
      return loop([&](double t, const Vec<double, Dim>& yi) {
        return euler_step<double, Dim>(rhs, t, yi, h);
      });
    case Method::rk4:
      return loop([&](double t, const Vec<double, Dim>& yi) {
        return rk4_step<double, Dim>(rhs, t, yi, h);
      });
    case Method::pc:
      return loop([&](double t, const Vec<double, Dim>& yi) {
        return pc_step<double, Dim>(rhs, t, yi, h);
      });
    case Method::reference:
      break;
  }
  throw std::invalid_argument("run_fixed_steps: not a fixed-step method");
}

namespace detail {

template <int Dim, class Rhs>
Trajectory<Dim> fixed_step_solve(Method method, Rhs&& rhs, const Vec<double, Dim>& y0,
                                 const Grid& grid) {
  Trajectory<Dim> traj{grid, StateMatrix<double, Dim>(grid.num_nodes(), Dim), method};
  traj.states.row(0) = y0.transpose();
  const Index bad = run_fixed_steps<Dim>(method, rhs, grid, traj.states);
  if (bad >= 0) {
    throw SolveError(std::string(to_string(method)) + " solve: non-finite state at node " +
                         std::to_string(bad) + " (t=" + std::to_string(grid.node(bad)) + ")",
                     bad, traj.states.topRows(bad + 1));
  }
  return traj;
}

}  // namespace detail

template <int Dim, class Rhs>
Trajectory<Dim> euler_solve(Rhs&& rhs, const Vec<double, Dim>& y0, const Grid& grid) {
  return detail::fixed_step_solve<Dim>(Method::euler, std::forward<Rhs>(rhs), y0, grid);
}

template <int Dim, class Rhs>
Trajectory<Dim> rk4_solve(Rhs&& rhs, const Vec<double, Dim>& y0, const Grid& grid) {
  return detail::fixed_step_solve<Dim>(Method::rk4, std::forward<Rhs>(rhs), y0, grid);
}

template <int Dim, class Rhs>
Trajectory<Dim> pc_solve(Rhs&& rhs, const Vec<double, Dim>& y0, const Grid& grid) {
  return detail::fixed_step_solve<Dim>(Method::pc, std::forward<Rhs>(rhs), y0, grid);
}

template <int Dim, class Rhs>
Trajectory<Dim> solve(Method method, Rhs&& rhs, const Vec<double, Dim>& y0, const Grid& grid) {
  return detail::fixed_step_solve<Dim>(method, std::forward<Rhs>(rhs), y0, grid);
}

}  // namespace epibench
