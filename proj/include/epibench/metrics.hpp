#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "epibench/grid.hpp"
#include "epibench/trajectory.hpp"
#include "epibench/types.hpp"

namespace epibench {

/// Thrown by r_squared when the reference sequence has zero variance
/// (the denominator of the definition vanishes).
class ZeroVarianceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Coefficient of determination R^2 = 1 - SSres/SStot between a reference
/// sequence and a predicted sequence of equal length (>= 2). Sums are
/// accumulated with compensated summation. Returns exactly 1 iff the
/// sequences are identical.
double r_squared(Eigen::Ref<const Eigen::VectorXd> reference,
                 Eigen::Ref<const Eigen::VectorXd> predicted);

/// Per-compartment R^2 of a numerical trajectory against a reference
/// trajectory on the same grid.
struct R2Report {
  Model model;
  Method method;
  double h;
  std::vector<std::pair<std::string, double>> per_compartment;  // (S,I[,R]) order
  Index n_points;
};

template <int Dim>
R2Report compare_trajectories(const Trajectory<Dim>& numerical, const Trajectory<Dim>& reference,
                              Model model) {
  if (compartment_count(model) != Dim)
    throw std::invalid_argument("compare_trajectories: model tag does not match state dimension");
  if (!grids_equal(numerical.grid, reference.grid))
    throw std::invalid_argument("compare_trajectories: grid mismatch");
  R2Report report{model, numerical.method, numerical.grid.h(), {}, numerical.grid.num_nodes()};
  for (int c = 0; c < Dim; ++c) {
    report.per_compartment.emplace_back(compartment_name(model, c),
                                        r_squared(reference.states.col(c), numerical.states.col(c)));
  }
  return report;
}

}  // namespace epibench
