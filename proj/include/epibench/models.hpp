#pragma once

#include <cmath>
#include <stdexcept>

#include "epibench/types.hpp"

namespace epibench {

/// SI transmission parameters. State layout: (S, I).
template <class Scalar = double>
struct SiParams {
  Scalar alpha;  // transmission rate, 1/(individual * day)

  explicit SiParams(Scalar alpha_) : alpha(alpha_) {
    if (!(alpha > Scalar(0))) throw std::invalid_argument("SiParams: alpha must be > 0");
  }
};

/// SIR parameters. State layout: (S, I, R).
template <class Scalar = double>
struct SirParams {
  Scalar alpha;  // transmission rate, 1/(individual * day)
  Scalar beta;   // recovery rate, 1/day

  SirParams(Scalar alpha_, Scalar beta_) : alpha(alpha_), beta(beta_) {
    if (!(alpha > Scalar(0))) throw std::invalid_argument("SirParams: alpha must be > 0");
    if (!(beta >= Scalar(0))) throw std::invalid_argument("SirParams: beta must be >= 0");
  }
};

template <class Scalar = double>
struct SiState {
  Scalar s;
  Scalar i;

  SiState(Scalar s_, Scalar i_) : s(s_), i(i_) {
    if (!(s >= Scalar(0)) || !(i >= Scalar(0)))
      throw std::invalid_argument("SiState: compartment counts must be >= 0");
  }

  Vec2<Scalar> vec() const { return Vec2<Scalar>(s, i); }
};

template <class Scalar = double>
struct SirState {
  Scalar s;
  Scalar i;
  Scalar r;

  SirState(Scalar s_, Scalar i_, Scalar r_) : s(s_), i(i_), r(r_) {
    if (!(s >= Scalar(0)) || !(i >= Scalar(0)) || !(r >= Scalar(0)))
      throw std::invalid_argument("SirState: compartment counts must be >= 0");
  }

  Vec3<Scalar> vec() const { return Vec3<Scalar>(s, i, r); }
};

/// dS/dt = -alpha*S*I, dI/dt = +alpha*S*I.
/// The infection flow is evaluated once and negated, so the two components
/// cancel bit-for-bit.
template <class Scalar>
Vec2<Scalar> si_rhs(const SiParams<Scalar>& p, const Vec2<Scalar>& y) {
  const Scalar infection = p.alpha * y[0] * y[1];
  return Vec2<Scalar>(-infection, infection);
}

/// dS/dt = -alpha*S*I, dI/dt = alpha*S*I - beta*I, dR/dt = beta*I.
template <class Scalar>
Vec3<Scalar> sir_rhs(const SirParams<Scalar>& p, const Vec3<Scalar>& y) {
  const Scalar infection = p.alpha * y[0] * y[1];
  const Scalar recovery = p.beta * y[1];
  return Vec3<Scalar>(-infection, infection - recovery, recovery);
}

/// Closed-form SI solution at time t for initial counts (s0, i0):
///
///   S(t) = N e^{-alpha t N} c / (1 + e^{-alpha t N} c),   c = s0 / (N - s0)
///   I(t) = N (N - s0) / (N - s0 + e^{-N alpha t} s0)
///
/// with N = s0 + i0. Requires i0 > 0 (c is undefined at i0 = 0). When the
/// S-form degenerates (e^{-alpha t N} overflows for extreme negative t),
/// S falls back to N - I(t); on the normal range both closed forms are
/// used as written and agree to ~1e-12 relative.
template <class Scalar>
Vec2<Scalar> si_exact(const SiParams<Scalar>& p, Scalar s0, Scalar i0, Scalar t) {
  if (!(i0 > Scalar(0)))
    throw std::domain_error("si_exact: i0 must be > 0 (closed form is singular at i0 = 0)");
  if (!(s0 >= Scalar(0))) throw std::domain_error("si_exact: s0 must be >= 0");
  if (!std::isfinite(static_cast<double>(t))) throw std::domain_error("si_exact: t must be finite");

  const Scalar n = s0 + i0;
  const Scalar c = s0 / (n - s0);
  const Scalar decay = std::exp(-p.alpha * t * n);
  const Scalar q = decay * c;
  const Scalar infected = n * (n - s0) / ((n - s0) + decay * s0);
  Scalar susceptible = n * q / (Scalar(1) + q);
  if (!std::isfinite(susceptible)) susceptible = n - infected;
  return Vec2<Scalar>(susceptible, infected);
}

/// Callable adapters with the (t, y) signature the integrators expect.
/// Both systems are autonomous; t is accepted and ignored.
template <class Scalar = double>
struct SiSystem {
  SiParams<Scalar> params;
  Vec2<Scalar> operator()(Scalar /*t*/, const Vec2<Scalar>& y) const { return si_rhs(params, y); }
};

template <class Scalar = double>
struct SirSystem {
  SirParams<Scalar> params;
  Vec3<Scalar> operator()(Scalar /*t*/, const Vec3<Scalar>& y) const { return sir_rhs(params, y); }
};

/// Which system to solve plus its rates (beta is ignored for SI).
struct ModelSpec {
  Model model;
  double alpha;
  double beta;

  ModelSpec(Model model_, double alpha_, double beta_ = 0.0)
      : model(model_), alpha(alpha_), beta(beta_) {
    if (!(alpha > 0)) throw std::invalid_argument("ModelSpec: alpha must be > 0");
    if (model == Model::sir && !(beta >= 0))
      throw std::invalid_argument("ModelSpec: beta must be >= 0");
  }

  int dim() const { return compartment_count(model); }
};

/// 1978 English boarding-school influenza outbreak: the parameter set and
/// initial conditions used throughout as defaults (Murray, Mathematical
/// Biology, 2002).
namespace influenza1978 {
inline constexpr double alpha = 2.18e-3;
inline constexpr double beta = 2.18e-3 * 202.0;
inline constexpr double s0 = 762.0;
inline constexpr double i0 = 1.0;
inline constexpr double r0 = 0.0;
inline constexpr double t0 = 0.0;
inline constexpr double tend = 14.0;
inline constexpr double population = s0 + i0;
}  // namespace influenza1978

}  // namespace epibench
