#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"
#include "test_util.hpp"

using namespace geim;
using geim::test::random_field;

TEST_CASE("make_grid basics") {
  const Grid g = make_grid(3, 3, 0, 1, 0, 1, 0.5);
  CHECK(g.hx() == doctest::Approx(0.5));
  CHECK(g.hy() == doctest::Approx(0.5));
  CHECK(g.interface_col == 1);
}

TEST_CASE("make_grid snaps the interface to a column") {
  const Grid g = make_grid(65, 33, 0, 2, 0, 1, 0.75);
  CHECK(g.interface_col == 24);
  CHECK(g.interface_x() == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("make_grid rejects bad geometry") {
  CHECK_THROWS_AS(make_grid(3, 3, 0, 1, 0, 1, 0.0), InvalidGeometry);
  CHECK_THROWS_AS(make_grid(3, 3, 0, 1, 0, 1, 1.0), InvalidGeometry);
  CHECK_THROWS_AS(make_grid(2, 3, 0, 1, 0, 1, 0.5), InvalidGeometry);
  CHECK_THROWS_AS(make_grid(3, 2, 0, 1, 0, 1, 0.5), InvalidGeometry);
}

TEST_CASE("inner_l2 measures the unit square") {
  const Grid g = geim::test::unit_grid(9);
  Field one(g);
  one.values.setOnes();
  CHECK(inner_l2(one, one, full_mask(g)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("inner_l2 of sin*sin") {
  const Grid g = make_grid(65, 65, 0, 1, 0, 1, 0.5);
  const Field f = field_from(
      g, [](double x, double y) { return std::sin(M_PI * x) * std::sin(M_PI * y); });
  CHECK(inner_l2(f, f, full_mask(g)) == doctest::Approx(0.25).epsilon(4e-3));
}

TEST_CASE("disjoint supports are exactly orthogonal") {
  const Grid g = geim::test::default_grid();
  const Field f = restrict_to(random_field(g, 1), omega1_mask(g));
  const Field h = restrict_to(random_field(g, 2), omega2_mask(g));
  CHECK(inner_l2(f, h, full_mask(g)) == 0.0);
}

TEST_CASE("inner_h1 equals inner_l2 on constants") {
  const Grid g = geim::test::unit_grid(11);
  Field one(g);
  one.values.setOnes();
  const SubdomainMask m = full_mask(g);
  CHECK(inner_h1(one, one, m) == doctest::Approx(inner_l2(one, one, m)).epsilon(1e-14));
}

TEST_CASE("inner_h1 of f = x on the unit square") {
  const Grid g = make_grid(65, 65, 0, 1, 0, 1, 0.5);
  const Field f = field_from(g, [](double x, double) { return x; });
  // L2 part 1/3 (trapezoid error ~ h^2), gradient part exactly 1
  CHECK(inner_h1(f, f, full_mask(g)) == doctest::Approx(4.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("grid mismatch is rejected") {
  const Grid a = geim::test::unit_grid(9);
  const Grid b = geim::test::unit_grid(11);
  CHECK_THROWS_AS(inner_l2(Field(a), Field(b), full_mask(a)), GridMismatch);
  CHECK_THROWS_AS(inner_h1(Field(a), Field(b), full_mask(a)), GridMismatch);
}

TEST_CASE("restrict_to is idempotent and norm-preserving on its mask") {
  const Grid g = geim::test::default_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const Field f = random_field(g, 3);
  const Field r = restrict_to(f, o2);
  const Field rr = restrict_to(r, o2);
  CHECK((r.values - rr.values).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK(norm(r, o2, Product::L2) == doctest::Approx(norm(f, o2, Product::L2)).epsilon(1e-14));
}

TEST_CASE("quadrature integrates piecewise-bilinear interpolants exactly") {
  const Grid g = make_grid(7, 5, 0, 2, 0, 1, 1.0);
  const Field f = random_field(g, 4);
  // cell-wise integral of the bilinear interpolant = corner average * area
  double exact = 0;
  const double cell = g.hx() * g.hy();
  for (int j = 0; j + 1 < g.ny; ++j)
    for (int i = 0; i + 1 < g.nx; ++i)
      exact += cell * 0.25 *
               (f.values[g.index(i, j)] + f.values[g.index(i + 1, j)] +
                f.values[g.index(i, j + 1)] + f.values[g.index(i + 1, j + 1)]);
  Field one(g);
  one.values.setOnes();
  CHECK(inner_l2(f, one, full_mask(g)) == doctest::Approx(exact).epsilon(1e-12));
}

TEST_CASE("subdomain quadrature additivity") {
  const Grid g = geim::test::default_grid();
  const Field f = random_field(g, 5);
  const double whole = inner_l2(f, f, full_mask(g));
  const double left = inner_l2(f, f, omega1_mask(g));
  const double right = inner_l2(f, f, omega2_mask(g));
  CHECK(whole == doctest::Approx(left + right).epsilon(1e-12));
}

TEST_CASE("Cauchy-Schwarz for both products") {
  const Grid g = geim::test::unit_grid(13);
  const SubdomainMask m = full_mask(g);
  for (uint64_t s = 0; s < 20; ++s) {
    const Field f = random_field(g, 100 + s);
    const Field h = random_field(g, 200 + s);
    for (Product p : {Product::L2, Product::H1}) {
      CHECK(std::abs(inner(f, h, m, p)) <=
            norm(f, m, p) * norm(h, m, p) * (1 + 1e-12));
    }
  }
}

TEST_CASE("product_matrix agrees with inner products on mask-supported fields") {
  const Grid g = geim::test::unit_grid(9);
  const SubdomainMask o2 = omega2_mask(g);
  const int n = static_cast<int>(o2.nodes.size());
  for (Product p : {Product::L2, Product::H1}) {
    const Eigen::MatrixXd W = product_matrix(o2, p);
    const Field f = geim::test::random_masked_field(o2, 6);
    const Field h = geim::test::random_masked_field(o2, 7);
    Eigen::VectorXd fv(n), hv(n);
    for (int a = 0; a < n; ++a) {
      fv[a] = f.values[o2.nodes[a]];
      hv[a] = h.values[o2.nodes[a]];
    }
    CHECK(fv.dot(W * hv) == doctest::Approx(inner(f, h, o2, p)).epsilon(1e-12));
  }
}
