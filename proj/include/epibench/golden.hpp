#pragma once

#include "epibench/types.hpp"

namespace epibench::golden {

/// Regression targets for the influenza1978 SI case, checked after 7-decimal
/// rounding. Grid: t in [0, 14], h as listed; S and I share each value.
struct SiR2Target {
  Method method;
  double h;
  double r2_rounded7;
};

inline constexpr SiR2Target si_r2_targets[] = {
    {Method::euler, 0.25, 0.9585463},
    {Method::euler, 0.10, 0.9927564},
    {Method::euler, 0.01, 0.9999239},
    {Method::pc, 0.25, 0.9994189},
    {Method::pc, 0.10, 0.9999798},
};

/// |rounded7 - target| bound; half of one unit in the 7th decimal is 5e-8.
inline constexpr double rounded7_tol = 5e-8;

/// RK4 reproduces the SI exact solution to display precision at every h.
inline constexpr double rk4_r2_one_tol = 5e-8;

/// Predictor-corrector at h=0.01 displays as 1.0; the full-precision floor.
inline constexpr double pc_fine_r2_min = 0.99999995;

/// SIR RK4 vs the adaptive reference, per compartment, at h in
/// {0.25, 0.10, 0.01}.
inline constexpr double sir_r2_min = 0.999999;

inline constexpr double step_sizes[] = {0.25, 0.10, 0.01};

}  // namespace epibench::golden
