#include "epibench/metrics.hpp"

#include <cmath>

namespace epibench {

namespace {

// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double r_squared(Eigen::Ref<const Eigen::VectorXd> reference,
                 Eigen::Ref<const Eigen::VectorXd> predicted) {
  const Index n = reference.size();
  if (n != predicted.size())
    throw std::invalid_argument("r_squared: sequence lengths differ (" + std::to_string(n) +
                                " vs " + std::to_string(predicted.size()) + ")");
  if (n < 2) throw std::invalid_argument("r_squared: need at least 2 points");

  CompensatedSum acc;
  for (Index i = 0; i < n; ++i) acc.add(reference[i]);
  const double mean = acc.value() / static_cast<double>(n);

  CompensatedSum ss_res;
  CompensatedSum ss_tot;
  for (Index i = 0; i < n; ++i) {
    const double r = reference[i] - predicted[i];
    ss_res.add(r * r);
    const double d = reference[i] - mean;
    ss_tot.add(d * d);
  }
  if (ss_tot.value() == 0.0)
    throw ZeroVarianceError("r_squared: reference sequence has zero variance");
  return 1.0 - ss_res.value() / ss_tot.value();
}

}  // namespace epibench
