#include <cmath>
#include <limits>
#include <string>

#include "doctest.h"
#include "epibench/models.hpp"
#include "epibench/refsolver.hpp"
#include "testutil.hpp"

using namespace epibench;

namespace {

using Vec1 = Vec<double, 1>;

SirSystem<double> default_sir() {
  return SirSystem<double>{SirParams<double>(influenza1978::alpha, influenza1978::beta)};
}

Vec3<double> default_sir_y0() {
  return Vec3<double>(influenza1978::s0, influenza1978::i0, influenza1978::r0);
}

}  // namespace

TEST_CASE("AdaptiveConfig validation") {
  AdaptiveConfig c;
  CHECK_NOTHROW(c.resolved(0.0, 14.0));

  AdaptiveConfig bad = c;
  bad.rtol = 0.0;
  CHECK_THROWS_AS(bad.resolved(0.0, 14.0), std::invalid_argument);
  bad = c;
  bad.rtol = 1.5;
  CHECK_THROWS_AS(bad.resolved(0.0, 14.0), std::invalid_argument);
  bad = c;
  bad.atol = 0.0;
  CHECK_THROWS_AS(bad.resolved(0.0, 14.0), std::invalid_argument);
  bad = c;
  bad.h_min = 1.0;
  bad.h_init = 0.5;
  bad.h_max = 2.0;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = c;
  bad.max_steps = 0;
  CHECK_THROWS_AS(bad.resolved(0.0, 14.0), std::invalid_argument);

  const AdaptiveConfig r = c.resolved(0.0, 14.0);
  CHECK(r.h_init == doctest::Approx(14e-3));
  CHECK(r.h_max == 14.0);
}

TEST_CASE("scalar exponential decay lands on e^{-1} within 10x rtol") {
  const auto rhs = [](double, const Vec1& y) { return Vec1(-y[0]); };
  const AdaptiveConfig cfg;  // rtol 1e-8
  const DenseSolution<1> sol = reference_solve(rhs, Vec1(1.0), 0.0, 1.0, cfg);
  const double expected = std::exp(-1.0);
  CHECK(std::abs(sol.eval(1.0)[0] - expected) <= 10.0 * cfg.rtol * expected);
}

TEST_CASE("evaluation at t0 returns the initial condition exactly") {
  const DenseSolution<3> sol = reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0);
  const Vec3<double> at0 = sol.eval(0.0);
  CHECK(at0[0] == 762.0);
  CHECK(at0[1] == 1.0);
  CHECK(at0[2] == 0.0);
}

TEST_CASE("reference solution conserves the population on 57 uniform nodes") {
  const DenseSolution<3> sol = reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0);
  const Grid grid = make_grid(0.0, 14.0, 0.25);
  for (Index i = 0; i < grid.num_nodes(); ++i) {
    const Vec3<double> y = sol.eval(grid.node(i));
    CHECK(std::abs(y.sum() - 763.0) <= 1e-6 * 763.0);
  }
}

TEST_CASE("accepted steps increase monotonically and cover the interval") {
  const DenseSolution<3> sol = reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0);
  const std::vector<double>& times = sol.step_times();
  REQUIRE(times.size() >= 2);
  CHECK(times.front() == 0.0);
  CHECK(times.back() == 14.0);
  for (std::size_t k = 1; k < times.size(); ++k) CHECK(times[k] > times[k - 1]);
}

TEST_CASE("evaluation at accepted endpoints reproduces stored states bit-exactly") {
  const DenseSolution<3> sol = reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0);
  const std::vector<double>& times = sol.step_times();
  for (std::size_t k = 0; k < times.size(); ++k) {
    const Vec3<double> via_eval = sol.eval(times[k]);
    const Vec3<double>& stored = sol.state(static_cast<Index>(k));
    CHECK(via_eval[0] == stored[0]);
    CHECK(via_eval[1] == stored[1]);
    CHECK(via_eval[2] == stored[2]);
  }
}

TEST_CASE("dense output is continuous across step boundaries") {
  const AdaptiveConfig cfg;
  const DenseSolution<3> sol =
      reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0, cfg);
  const std::vector<double>& times = sol.step_times();
  for (std::size_t k = 1; k + 1 < times.size(); ++k) {
    const double t = times[k];
    const double before = std::nextafter(t, 0.0);
    const Vec3<double> left = sol.eval(before);
    const Vec3<double> right = sol.eval(t);
    for (int c = 0; c < 3; ++c) CHECK(std::abs(left[c] - right[c]) <= cfg.atol);
  }
}

TEST_CASE("sampling a constant solution returns y0 at every node") {
  const auto rhs = [](double, const Vec1&) { return Vec1(0.0); };
  const DenseSolution<1> sol = reference_solve(rhs, Vec1(42.5), 0.0, 14.0);
  const Trajectory<1> traj = sample(sol, make_grid(0.0, 14.0, 0.25));
  CHECK(traj.method == Method::reference);
  for (Index i = 0; i < traj.num_nodes(); ++i) CHECK(traj.states(i, 0) == 42.5);
}

TEST_CASE("sample covers exactly the requested grid and rejects outside times") {
  const DenseSolution<3> sol = reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0);
  const Grid grid = make_grid(0.0, 14.0, 0.25);
  const Trajectory<3> traj = sample(sol, grid);
  CHECK(traj.num_nodes() == 57);
  CHECK(grids_equal(traj.grid, grid));
  CHECK(traj.states(0, 0) == 762.0);  // endpoint short-circuit, stored state

  CHECK_THROWS_AS(sol.eval(-0.001), std::out_of_range);
  CHECK_THROWS_AS(sol.eval(14.001), std::out_of_range);
  CHECK_THROWS_AS(sample(sol, make_grid(0.0, 15.0, 0.25)), std::out_of_range);
}

TEST_CASE("tightening tolerances 10x moves sampled values by less than the coarse tolerance scale") {
  AdaptiveConfig coarse;
  coarse.rtol = 1e-8;
  coarse.atol = 1e-10;
  AdaptiveConfig tight;
  tight.rtol = 1e-9;
  tight.atol = 1e-11;

  const DenseSolution<3> a =
      reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0, coarse);
  const DenseSolution<3> b =
      reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0, tight);
  const Grid grid = make_grid(0.0, 14.0, 0.25);
  const Trajectory<3> ta = sample(a, grid);
  const Trajectory<3> tb = sample(b, grid);

  // Per-step control only bounds local error, so the sampled deviation can
  // exceed the pointwise tolerance atol + rtol*|y| (observed up to ~5x on
  // this problem). The bound is therefore 10x the coarse tolerance at the
  // trajectory's largest magnitude; observed deviation sits ~16x below it.
  const double ymax = ta.states.cwiseAbs().maxCoeff();
  const double band = 10.0 * (coarse.atol + coarse.rtol * ymax);
  const double worst = (ta.states - tb.states).cwiseAbs().maxCoeff();
  CHECK(worst <= band);
}

TEST_CASE("reference solver reproduces the SI closed form end to end") {
  const SiSystem<double> sys{SiParams<double>(influenza1978::alpha)};
  const Vec2<double> y0(influenza1978::s0, influenza1978::i0);
  const AdaptiveConfig cfg;
  const DenseSolution<2> sol = reference_solve(sys, y0, 0.0, 14.0, cfg);
  const Grid grid = make_grid(0.0, 14.0, 0.25);
  const Trajectory<2> traj = sample(sol, grid);

  const SiParams<double> p(influenza1978::alpha);
  double worst_rel = 0.0;
  for (Index i = 0; i < grid.num_nodes(); ++i) {
    const Vec2<double> exact = si_exact(p, 762.0, 1.0, grid.node(i));
    for (int c = 0; c < 2; ++c)
      worst_rel = std::max(worst_rel,
                           std::abs(traj.states(i, c) - exact[c]) / std::abs(exact[c]));
  }
  CHECK(worst_rel <= 100.0 * cfg.rtol);
}

TEST_CASE("max_steps is enforced") {
  AdaptiveConfig cfg;
  cfg.max_steps = 5;
  try {
    reference_solve(default_sir(), default_sir_y0(), 0.0, 14.0, cfg);
    FAIL("expected SolveError");
  } catch (const SolveError& e) {
    CHECK(std::string(e.what()).find("max_steps") != std::string::npos);
  }
}

TEST_CASE("step-size underflow near a blow-up is reported") {
  // y' = y^2 from y(0)=1 blows up at t=1; integrating past it must fail.
  const auto rhs = [](double, const Vec1& y) { return Vec1(y[0] * y[0]); };
  CHECK_THROWS_AS(reference_solve(rhs, Vec1(1.0), 0.0, 2.0), SolveError);
}

TEST_CASE("non-finite initial state is rejected") {
  CHECK_THROWS_AS(
      reference_solve([](double, const Vec1& y) { return y; },
                      Vec1(std::numeric_limits<double>::quiet_NaN()), 0.0, 1.0),
      SolveError);
}
