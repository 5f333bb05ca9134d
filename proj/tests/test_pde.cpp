#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geim/pde.hpp"
#include "test_util.hpp"

using namespace geim;

namespace {

double disc_error(int n) {
  const Grid g = make_grid(n, n, 0, 1, 0, 1, 0.5);
  const Field f = field_from(g, [](double x, double y) {
    return 2 * M_PI * M_PI * std::sin(M_PI * x) * std::sin(M_PI * y);
  });
  const Field u = solve_laplace(f, g);
  const Field exact = field_from(g, [](double x, double y) {
    return std::sin(M_PI * x) * std::sin(M_PI * y);
  });
  return (u.values - exact.values).lpNorm<Eigen::Infinity>();
}

}  // namespace

TEST_CASE("five-point scheme is exact for harmonic quadratics") {
  const Grid g = make_grid(17, 13, 0, 2, 0, 1, 0.75);
  const Field exact = field_from(g, [](double x, double y) { return x * x - y * y; });
  Eigen::VectorXd boundary = exact.values;  // only boundary entries are read
  const Field u = solve_laplace(Field(g), g, boundary);
  CHECK((u.values - exact.values).lpNorm<Eigen::Infinity>() < 1e-9);
}

TEST_CASE("manufactured solution converges at second order") {
  const double e1 = disc_error(17);
  const double e2 = disc_error(33);
  CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("solution satisfies the stencil residual") {
  const Grid g = make_grid(21, 11, 0, 2, 0, 1, 0.75);
  const SubdomainMask chi1 = omega1_mask(g);
  const Field f = forcing({0.4, -0.8, 1.2}, g, chi1);
  const Field u = solve_laplace(f, g);
  const double ihx2 = 1.0 / (g.hx() * g.hx()), ihy2 = 1.0 / (g.hy() * g.hy());
  for (int j = 1; j < g.ny - 1; ++j)
    for (int i = 1; i < g.nx - 1; ++i) {
      const double lap =
          ihx2 * (2 * u.values[g.index(i, j)] - u.values[g.index(i - 1, j)] -
                  u.values[g.index(i + 1, j)]) +
          ihy2 * (2 * u.values[g.index(i, j)] - u.values[g.index(i, j - 1)] -
                  u.values[g.index(i, j + 1)]);
      CHECK(lap == doctest::Approx(f.values[g.index(i, j)]).epsilon(1e-7));
    }
  for (int j = 0; j < g.ny; ++j) {
    CHECK(u.values[g.index(0, j)] == 0.0);
    CHECK(u.values[g.index(g.nx - 1, j)] == 0.0);
  }
}

TEST_CASE("forcing takes the modulated value on chi1 and 1 elsewhere") {
  const Grid g = make_grid(17, 9, 0, 2, 0, 1, 0.75);
  const SubdomainMask chi1 = omega1_mask(g);
  const ParamPoint p{0.3, -0.7, 1.25};
  const Field f = forcing(p, g, chi1);
  const int in = g.index(2, 3);  // inside Omega1
  CHECK(f.values[in] == doctest::Approx(1 + p.alpha * std::sin(g.x(2)) +
                                        p.beta * std::cos(p.gamma * M_PI * g.y(3)))
                            .epsilon(1e-14));
  const int out = g.index(g.nx - 2, 3);  // inside Omega2
  CHECK(f.values[out] == 1.0);
}

TEST_CASE("single-count axes take the interval midpoint") {
  const AxisRange r{-1, 3, 1};
  CHECK(r.value(0) == doctest::Approx(1.0));
  const AxisRange s{0, 1, 5};
  CHECK(s.value(0) == 0.0);
  CHECK(s.value(4) == 1.0);
  CHECK(s.value(2) == doctest::Approx(0.5));
}

TEST_CASE("snapshot ordering: alpha fastest, then beta, then gamma") {
  const Grid g = make_grid(9, 9, 0, 2, 0, 1, 0.75);
  const ParamRanges ranges{{-1, 1, 2}, {-1, 1, 2}, {0.5, 1.5, 2}};
  const SnapshotSet set = generate_snapshots(ranges, g, omega1_mask(g));
  REQUIRE(set.params.size() == 8);
  CHECK(set.params[0].alpha == -1);
  CHECK(set.params[1].alpha == 1);
  CHECK(set.params[1].beta == set.params[0].beta);
  CHECK(set.params[2].beta == 1);
  CHECK(set.params[2].alpha == -1);
  CHECK(set.params[4].gamma == 1.5);
  CHECK(set.params[4].alpha == -1);
  CHECK(set.params[4].beta == -1);
}

TEST_CASE("snapshot generation is thread-count invariant") {
  const Grid g = make_grid(17, 9, 0, 2, 0, 1, 0.75);
  const ParamRanges ranges{{-1, 1, 2}, {-1, 1, 2}, {0.5, 1.5, 2}};
  const SnapshotSet a = generate_snapshots(ranges, g, omega1_mask(g), 1);
  const SnapshotSet b = generate_snapshots(ranges, g, omega1_mask(g), 3);
  REQUIRE(a.fields.size() == b.fields.size());
  for (size_t k = 0; k < a.fields.size(); ++k)
    CHECK((a.fields[k].values - b.fields[k].values).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("snapshots solve the forced problem") {
  const Grid g = make_grid(17, 9, 0, 2, 0, 1, 0.75);
  const ParamRanges ranges{{-1, 1, 2}, {-1, 1, 1}, {0.5, 1.5, 1}};
  const SnapshotSet set = generate_snapshots(ranges, g, omega1_mask(g));
  const PoissonSolver solver(g);
  for (size_t k = 0; k < set.fields.size(); ++k) {
    const Field ref = solver.solve(forcing(set.params[k], g, omega1_mask(g)));
    CHECK((set.fields[k].values - ref.values).lpNorm<Eigen::Infinity>() == 0.0);
  }
}
