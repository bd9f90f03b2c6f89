#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "epibench/grid.hpp"
#include "epibench/types.hpp"

namespace epibench {

/// Solver output on a uniform grid. Row i of `states` is the state at
/// grid.node(i); row 0 is the initial condition, bit for bit.
template <int Dim>
struct Trajectory {
  Grid grid;
  StateMatrix<double, Dim> states;
  Method method;

  Index num_nodes() const { return states.rows(); }
};

/// Thrown when a solve produces a non-finite state. Carries the index of
/// the first bad node and the trajectory up to (and including) it, for
/// diagnosis.
class SolveError : public std::runtime_error {
 public:
  SolveError(std::string message, Index fail_node, Eigen::MatrixXd partial_states)
      : std::runtime_error(std::move(message)),
        fail_node_(fail_node),
        partial_states_(std::move(partial_states)) {}

  explicit SolveError(std::string message)
      : std::runtime_error(std::move(message)), fail_node_(-1) {}

  /// Index of the first non-finite node, or -1 when not applicable.
  Index fail_node() const { return fail_node_; }

  /// Nodes 0..fail_node (the offending node is kept for inspection).
  const Eigen::MatrixXd& partial_states() const { return partial_states_; }

 private:
  Index fail_node_;
  Eigen::MatrixXd partial_states_;
};

}  // namespace epibench
