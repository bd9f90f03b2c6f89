#include <cmath>
#include <limits>

#include "doctest.h"
#include "epibench/integrators.hpp"
#include "epibench/metrics.hpp"
#include "epibench/models.hpp"
#include "epibench/report.hpp"
#include "testutil.hpp"

using namespace epibench;

namespace {

SiSystem<double> default_si() { return SiSystem<double>{SiParams<double>(influenza1978::alpha)}; }

Vec2<double> default_y0() { return Vec2<double>(influenza1978::s0, influenza1978::i0); }

Grid default_grid(double h) {
  return make_grid(influenza1978::t0, influenza1978::tend, h);
}

Trajectory<2> si_exact_trajectory(const Grid& grid) {
  const SiParams<double> p(influenza1978::alpha);
  Trajectory<2> traj{grid, StateMatrix<double, 2>(grid.num_nodes(), 2), Method::reference};
  for (Index i = 0; i < grid.num_nodes(); ++i)
    traj.states.row(i) =
        si_exact(p, influenza1978::s0, influenza1978::i0, grid.node(i)).transpose();
  return traj;
}

}  // namespace

TEST_CASE("make_grid accepts divisor steps and pins the endpoint") {
  const Grid g = make_grid(0.0, 14.0, 0.25);
  CHECK(g.n() == 56);
  CHECK(g.num_nodes() == 57);
  CHECK(g.h() == 0.25);
  CHECK(g.node(0) == 0.0);
  CHECK(g.node(56) == 14.0);

  CHECK(make_grid(0.0, 14.0, 0.01).n() == 1400);
  CHECK(make_grid(0.0, 14.0, 0.1).n() == 140);
}

TEST_CASE("make_grid rejects non-divisor steps and bad intervals") {
  CHECK_THROWS_AS(make_grid(0.0, 14.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 14.0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(0.0, 14.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(5.0, 5.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(make_grid(5.0, 3.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("grid nodes are multiples of h, not accumulated sums") {
  const Grid g = make_grid(2.0, 16.0, 0.1);
  for (Index i = 0; i < g.n(); ++i)
    CHECK(g.node(i) == 2.0 + static_cast<double>(i) * g.h());
  CHECK(g.node(g.n()) == 16.0);
}

TEST_CASE("grids_equal distinguishes differing grids") {
  CHECK(grids_equal(make_grid(0.0, 14.0, 0.25), Grid(0.0, 14.0, 56)));
  CHECK_FALSE(grids_equal(make_grid(0.0, 14.0, 0.25), make_grid(0.0, 14.0, 0.1)));
  CHECK_FALSE(grids_equal(Grid(0.0, 14.0, 56), Grid(0.1, 14.1, 56)));
}

TEST_CASE("one Euler step from the default initial state") {
  const Vec2<double> y1 =
      euler_step<double, 2>(default_si(), 0.0, default_y0(), 0.25);
  CHECK(std::abs(y1[0] - testutil::kEulerOneStepS) <= 1e-9);
  CHECK(std::abs(y1[1] - testutil::kEulerOneStepI) <= 1e-9);

  // the extended-precision oracle agrees with the frozen decimal
  const testutil::SiPairLd ld =
      testutil::euler_si_step_extended(2.18e-3L, 762.0L, 1.0L, 0.25L);
  CHECK(std::abs(static_cast<double>(ld.s) - testutil::kEulerOneStepS) <= 1e-9);
  CHECK(std::abs(static_cast<double>(ld.i) - testutil::kEulerOneStepI) <= 1e-9);
}

TEST_CASE("one RK4 step matches the extended-precision stage oracle") {
  const Vec2<double> y1 = rk4_step<double, 2>(default_si(), 0.0, default_y0(), 0.25);
  const testutil::SiPairLd ld =
      testutil::rk4_si_step_extended(2.18e-3L, 762.0L, 1.0L, 0.25L);
  CHECK(std::abs(y1[0] / static_cast<double>(ld.s) - 1.0) <= 1e-12);
  CHECK(std::abs(y1[1] / static_cast<double>(ld.i) - 1.0) <= 1e-12);
  // and the oracle itself is pinned by frozen high-precision decimals
  CHECK(static_cast<double>(ld.s) == doctest::Approx(testutil::kRk4OneStepS).epsilon(1e-15));
  CHECK(static_cast<double>(ld.i) == doctest::Approx(testutil::kRk4OneStepI).epsilon(1e-15));
}

TEST_CASE("single steps reproduce the compartment-by-compartment expansions") {
  // Scalar transcription of each method for the SI system, one step.
  const double a = influenza1978::alpha;
  const double s = 762.0, i = 1.0, h = 0.25;
  const SiSystem<double> sys = default_si();
  const Vec2<double> y0(s, i);

  SUBCASE("euler") {
    const double s1 = s + h * (-a * s * i);
    const double i1 = i + h * (a * s * i);
    const Vec2<double> y1 = euler_step<double, 2>(sys, 0.0, y0, h);
    CHECK(y1[0] == doctest::Approx(s1).epsilon(1e-15));
    CHECK(y1[1] == doctest::Approx(i1).epsilon(1e-15));
  }
  SUBCASE("rk4") {
    const double k1s = -a * s * i, k1i = a * s * i;
    const double s2 = s + h / 2 * k1s, i2 = i + h / 2 * k1i;
    const double k2s = -a * s2 * i2, k2i = a * s2 * i2;
    const double s3 = s + h / 2 * k2s, i3 = i + h / 2 * k2i;
    const double k3s = -a * s3 * i3, k3i = a * s3 * i3;
    const double s4 = s + h * k3s, i4 = i + h * k3i;
    const double k4s = -a * s4 * i4, k4i = a * s4 * i4;
    const double s1 = s + h / 6 * (k1s + 2 * k2s + 2 * k3s + k4s);
    const double i1 = i + h / 6 * (k1i + 2 * k2i + 2 * k3i + k4i);
    const Vec2<double> y1 = rk4_step<double, 2>(sys, 0.0, y0, h);
    CHECK(y1[0] == doctest::Approx(s1).epsilon(1e-15));
    CHECK(y1[1] == doctest::Approx(i1).epsilon(1e-15));
  }
  SUBCASE("pc") {
    const double f0s = -a * s * i, f0i = a * s * i;
    const double ps = s + h * f0s, pi = i + h * f0i;
    const double f1s = -a * ps * pi, f1i = a * ps * pi;
    const double s1 = s + h / 2 * (f0s + f1s);
    const double i1 = i + h / 2 * (f0i + f1i);
    const Vec2<double> y1 = pc_step<double, 2>(sys, 0.0, y0, h);
    CHECK(y1[0] == doctest::Approx(s1).epsilon(1e-15));
    CHECK(y1[1] == doctest::Approx(i1).epsilon(1e-15));
  }
}

TEST_CASE("a fixed point yields a constant trajectory, bit for bit") {
  // i0 = 0 makes the SI flow vanish identically.
  const Vec2<double> y0(500.0, 0.0);
  const Grid grid = default_grid(0.25);
  for (Method m : {Method::euler, Method::rk4, Method::pc}) {
    const Trajectory<2> traj = solve<2>(m, default_si(), y0, grid);
    for (Index i = 0; i < traj.num_nodes(); ++i) {
      CHECK(traj.states(i, 0) == 500.0);
      CHECK(traj.states(i, 1) == 0.0);
    }
  }
}

TEST_CASE("rk4 on a zero rhs leaves the state unchanged") {
  const auto zero_rhs = [](double, const Vec2<double>&) { return Vec2<double>(0.0, 0.0); };
  const Vec2<double> y0(3.5, -2.25);
  CHECK(rk4_step<double, 2>(zero_rhs, 1.0, y0, 0.5) == y0);
}

TEST_CASE("pc equals euler exactly when the rhs is constant") {
  const Vec2<double> c(0.125, -2.0);  // exactly representable slope
  const auto const_rhs = [&c](double, const Vec2<double>&) { return c; };
  const Grid grid = make_grid(0.0, 8.0, 0.25);
  const Vec2<double> y0(1.0, 2.0);
  const Trajectory<2> pc = pc_solve<2>(const_rhs, y0, grid);
  const Trajectory<2> eu = euler_solve<2>(const_rhs, y0, grid);
  CHECK(testutil::bit_equal(pc.states, eu.states));
}

TEST_CASE("trajectory row 0 is the initial condition exactly") {
  const Vec2<double> y0(762.0, 1.0);
  const Trajectory<2> traj = rk4_solve<2>(default_si(), y0, default_grid(0.25));
  CHECK(traj.states(0, 0) == 762.0);
  CHECK(traj.states(0, 1) == 1.0);
  CHECK(traj.num_nodes() == traj.grid.n() + 1);
  CHECK(traj.method == Method::rk4);
}

TEST_CASE("full Euler solve reproduces the published R^2 at h=0.25") {
  const Grid grid = default_grid(0.25);
  const Trajectory<2> num = euler_solve<2>(default_si(), default_y0(), grid);
  const R2Report report = compare_trajectories<2>(num, si_exact_trajectory(grid), Model::si);
  for (const auto& [name, r2] : report.per_compartment)
    CHECK(std::abs(round7(r2) - 0.9585463) < 5e-8);
}

TEST_CASE("conservation: compartment totals stay within 1e-9 of N") {
  const double n2 = 763.0;
  const Grid grids[] = {default_grid(0.25), default_grid(0.10), default_grid(0.01)};
  for (const Grid& grid : grids) {
    for (Method m : {Method::euler, Method::rk4, Method::pc}) {
      const Trajectory<2> si_traj = solve<2>(m, default_si(), default_y0(), grid);
      for (Index i = 0; i < si_traj.num_nodes(); ++i)
        CHECK(std::abs(si_traj.states.row(i).sum() - n2) <= 1e-9 * n2);

      const SirSystem<double> sir{SirParams<double>(influenza1978::alpha, influenza1978::beta)};
      const Vec3<double> y0(influenza1978::s0, influenza1978::i0, influenza1978::r0);
      const Trajectory<3> sir_traj = solve<3>(m, sir, y0, grid);
      for (Index i = 0; i < sir_traj.num_nodes(); ++i)
        CHECK(std::abs(sir_traj.states.row(i).sum() - n2) <= 1e-9 * n2);
    }
  }
}

TEST_CASE("solves are deterministic: identical inputs, identical bits") {
  const Grid grid = default_grid(0.1);
  for (Method m : {Method::euler, Method::rk4, Method::pc}) {
    const Trajectory<2> a = solve<2>(m, default_si(), default_y0(), grid);
    const Trajectory<2> b = solve<2>(m, default_si(), default_y0(), grid);
    CHECK(testutil::bit_equal(a.states, b.states));
  }
}

TEST_CASE("accuracy improves monotonically as h shrinks") {
  for (Method m : {Method::euler, Method::rk4, Method::pc}) {
    double prev = -std::numeric_limits<double>::infinity();
    for (double h : {0.25, 0.10, 0.01}) {  // iterate coarse to fine
      const Grid grid = default_grid(h);
      const Trajectory<2> num = solve<2>(m, default_si(), default_y0(), grid);
      const R2Report rep = compare_trajectories<2>(num, si_exact_trajectory(grid), Model::si);
      const double r2 = rep.per_compartment[0].second;
      CHECK(r2 >= prev);
      prev = r2;
    }
  }
}

TEST_CASE("empirical convergence orders sit in the textbook windows") {
  const double euler_order = testutil::si_convergence_slope(Method::euler);
  CHECK(euler_order >= 0.8);
  CHECK(euler_order <= 1.2);
  const double pc_order = testutil::si_convergence_slope(Method::pc);
  CHECK(pc_order >= 1.7);
  CHECK(pc_order <= 2.3);
  const double rk4_order = testutil::si_convergence_slope(Method::rk4);
  CHECK(rk4_order >= 3.5);
  CHECK(rk4_order <= 4.5);
}

TEST_CASE("a diverging solve reports the first non-finite node and keeps the prefix") {
  // y' = y^2 blows up past double range within a few steps from 1e160.
  using Vec1 = Vec<double, 1>;
  const auto rhs = [](double, const Vec1& y) { return Vec1(y[0] * y[0]); };
  const Grid grid = make_grid(0.0, 10.0, 1.0);
  const Vec1 y0(1e160);
  try {
    euler_solve<1>(rhs, y0, grid);
    FAIL("expected SolveError");
  } catch (const SolveError& e) {
    CHECK(e.fail_node() == 1);
    REQUIRE(e.partial_states().rows() == 2);
    CHECK(e.partial_states()(0, 0) == 1e160);
    CHECK_FALSE(std::isfinite(e.partial_states()(1, 0)));
    CHECK(std::string(e.what()).find("euler") != std::string::npos);
  }
}

TEST_CASE("run_fixed_steps rejects the adaptive method tag") {
  const Grid grid = default_grid(0.25);
  StateMatrix<double, 2> states(grid.num_nodes(), 2);
  states.row(0) = default_y0().transpose();
  CHECK_THROWS_AS(run_fixed_steps<2>(Method::reference, default_si(), grid, states),
                  std::invalid_argument);
}
