#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geim/geim.hpp"
#include "geim/svd.hpp"
#include "test_util.hpp"

using namespace geim;

namespace {

Grid small_grid() { return make_grid(17, 9, 0, 2, 0, 1, 0.75); }

std::vector<Field> training_set(const Grid& g, const SubdomainMask& mask, int count) {
  std::vector<Field> out;
  for (int k = 0; k < count; ++k) {
    const double cx = 1.0 + 0.9 * k / std::max(1, count - 1);
    const double cy = 0.25 + 0.5 * (k % 4) / 3.0;
    out.push_back(restrict_to(field_from(g,
                                         [=](double x, double y) {
                                           return std::exp(-3.0 * ((x - cx) * (x - cx) +
                                                                   (y - cy) * (y - cy)));
                                         }),
                              mask));
  }
  return out;
}

Dictionary default_dict(const Grid& g, const SubdomainMask& o2) {
  return build_moment_dictionary(g, o2, default_moment_centers(g, o2, 2, 2),
                                 3.0 * std::max(g.hx(), g.hy()), KernelShape::Bump);
}

}  // namespace

TEST_CASE("hand-worked dirac greedy: {1, x} on the unit square") {
  const Grid g = make_grid(5, 3, 0, 1, 0, 1, 0.5);
  const SubdomainMask m = full_mask(g);
  Field one(g);
  one.values.setOnes();
  const Field fx = field_from(g, [](double x, double) { return x; });
  const Dictionary dict = build_dirac_dictionary(g, m);
  const GeimModel model = geim_build({one, fx}, dict, m, Product::L2, 10, 1e-12);

  // ||1|| = 1 > ||x|| = 1/sqrt(3): the constant wins round one; the point
  // sensor ties at every node and falls back to the lowest index
  REQUIRE(model.size() == 2);
  CHECK(model.selected_snapshots == std::vector<int>{0, 1});
  CHECK(model.sensors[0].nodes[0] == 0);
  CHECK(model.history[0] == doctest::Approx(1.0).epsilon(1e-12));
  // round two residual is x itself; |x| peaks first at node (4,0)
  CHECK(model.sensors[1].nodes[0] == g.index(4, 0));
  // trapezoid rule on 5 points: integral of x^2 over [0,1] comes out 11/32
  CHECK(model.history[1] == doctest::Approx(std::sqrt(11.0 / 32.0)).epsilon(1e-12));
  CHECK(model.B(0, 0) == 1.0);
  CHECK(model.B(0, 1) == 0.0);
  CHECK(model.B(1, 0) == doctest::Approx(1.0));
  CHECK(model.B(1, 1) == 1.0);

  const Field target = field_from(g, [](double x, double) { return 2 + 3 * x; });
  const Field interp = geim_interpolate(model, 2, geim_measure(model, 2, target));
  CHECK((interp.values - target.values).lpNorm<Eigen::Infinity>() < 1e-13);
}

TEST_CASE("collocation matrix: lower triangular, unit diagonal, entries in [-1,1]") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 8, 1e-12);
  REQUIRE(model.size() >= 5);
  for (int i = 0; i < model.size(); ++i) {
    CHECK(model.B(i, i) == 1.0);
    for (int j = 0; j < model.size(); ++j) {
      if (j > i) CHECK(model.B(i, j) == 0.0);
      CHECK(std::abs(model.B(i, j)) <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("basis fields have unit sensor value and norm >= 1") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 8, 1e-12);
  for (int j = 0; j < model.size(); ++j) {
    CHECK(apply(model.sensors[j], model.basis[j]) == doctest::Approx(1.0).epsilon(1e-12));
    // unit dual norm sensors: sigma(q) = 1 forces ||q|| >= 1
    CHECK(norm(model.basis[j], o2, Product::L2) >= 1.0 - 1e-10);
  }
}

TEST_CASE("interpolation matches all selected sensor readings") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 8, 1e-12);
  const Field probe = geim::test::random_masked_field(o2, 5);
  for (int M = 1; M <= model.size(); ++M) {
    const Field jm = geim_interpolate(model, M, geim_measure(model, M, probe));
    for (int i = 0; i < M; ++i)
      CHECK(apply(model.sensors[i], jm) ==
            doctest::Approx(apply(model.sensors[i], probe)).epsilon(1e-9));
  }
}

TEST_CASE("selected snapshots are reproduced and errors decay") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const std::vector<Field> snaps = training_set(g, o2, 14);
  const GeimModel model =
      geim_build(snaps, default_dict(g, o2), o2, Product::L2, 12, 1e-12);
  const int M = model.size();
  for (int s : model.selected_snapshots)
    CHECK(geim_error(model, snaps[s], M, Product::L2) < 1e-9 * model.history[0]);
  CHECK(model.history.back() < 1e-2 * model.history[0]);
}

TEST_CASE("coefficient growth bound") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 8, 1e-12);
  const int M = model.size();
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const Field f = geim::test::random_masked_field(o2, 300 + seed);
    const double nf = norm(f, o2, Product::L2);
    const Eigen::VectorXd alpha = model.B.topLeftCorner(M, M)
                                      .triangularView<Eigen::Lower>()
                                      .solve(geim_measure(model, M, f));
    for (int j = 0; j < M; ++j)
      CHECK(std::abs(alpha[j]) <= std::ldexp(nf, j) * (1 + 1e-10));
  }
}

TEST_CASE("exact operator norm against a dense oracle") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const int n = static_cast<int>(o2.nodes.size());
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 6, 1e-12);
  for (Product p : {Product::L2, Product::H1}) {
    const ProductSpace space(o2, p);
    for (int M : {1, 3, model.size()}) {
      // brute force: assemble J column by column in mask coordinates
      Eigen::MatrixXd J(n, n);
      for (int a = 0; a < n; ++a) {
        Field e(g);
        e.values[o2.nodes[a]] = 1.0;
        const Field je = geim_interpolate(model, M, geim_measure(model, M, e));
        for (int b = 0; b < n; ++b) J(b, a) = je.values[o2.nodes[b]];
      }
      const Eigen::MatrixXd W = product_matrix(o2, p);
      const Eigen::MatrixXd L = Eigen::LLT<Eigen::MatrixXd>(W).matrixL();
      const Eigen::MatrixXd A =
          L.transpose() * J *
          L.transpose().triangularView<Eigen::Upper>().solve(
              Eigen::MatrixXd::Identity(n, n));
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
      CHECK(space.op_norm(model, M) ==
            doctest::Approx(svd.singularValues()(0)).epsilon(1e-9));
    }
  }
}

TEST_CASE("lebesgue bounds: empirical <= exact <= pessimistic, exact >= 1") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const std::vector<Field> snaps = training_set(g, o2, 14);
  const GeimModel model =
      geim_build(snaps, default_dict(g, o2), o2, Product::L2, 8, 1e-12);
  for (int M = 1; M <= model.size(); ++M) {
    const double exact = lebesgue_exact(model, M, Product::L2);
    CHECK(exact >= 1.0 - 1e-10);
    CHECK(lebesgue_empirical(model, M, snaps) <= exact * (1 + 1e-10));
    CHECK(exact <= pessimistic_bound(model, M) * (1 + 1e-10));
  }
}

TEST_CASE("pessimistic bound recomputation") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 6, 1e-12);
  for (int M = 1; M <= model.size(); ++M) {
    double qmax = 0;
    for (int i = 0; i < M; ++i)
      qmax = std::max(qmax, norm(model.basis[i], o2, Product::L2));
    CHECK(pessimistic_bound(model, M) ==
          doctest::Approx(std::pow(2.0, M - 1) * qmax).epsilon(1e-14));
  }
}

TEST_CASE("interpolation error obeys the (1 + Lambda) best-fit bound") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const GeimModel model = geim_build(training_set(g, o2, 14), default_dict(g, o2), o2,
                                     Product::L2, 6, 1e-12);
  const Field held_out = restrict_to(
      field_from(g,
                 [](double x, double y) {
                   return std::exp(-6.0 * ((x - 1.4) * (x - 1.4) + (y - 0.45) * (y - 0.45)));
                 }),
      o2);
  for (int M = 1; M <= model.size(); ++M) {
    std::vector<Field> span(model.basis.begin(), model.basis.begin() + M);
    const double best = project_span_error(span, held_out, o2, Product::L2);
    const double lam = lebesgue_exact(model, M, Product::L2);
    CHECK(geim_error(model, held_out, M, Product::L2) <=
          (1 + lam) * best * (1 + 1e-9) + 1e-14);
  }
}

TEST_CASE("greedy build is deterministic") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const std::vector<Field> snaps = training_set(g, o2, 14);
  const Dictionary dict = default_dict(g, o2);
  const GeimModel a = geim_build(snaps, dict, o2, Product::L2, 8, 1e-12);
  const GeimModel b = geim_build(snaps, dict, o2, Product::L2, 8, 1e-12);
  REQUIRE(a.size() == b.size());
  CHECK(a.sensor_ids == b.sensor_ids);
  CHECK(a.selected_snapshots == b.selected_snapshots);
  CHECK((a.B - b.B).lpNorm<Eigen::Infinity>() == 0.0);
}

TEST_CASE("invisible residual is rejected") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  // one sensor near the interface, one snapshot supported on the far edge
  const Dictionary dict = build_moment_dictionary(
      g, o2, {g.index(g.interface_col + 2, g.ny / 2)}, 1.5 * g.hx(), KernelShape::Bump);
  Field far(g);
  far.values[g.index(g.nx - 2, g.ny / 2)] = 1.0;
  CHECK_THROWS_AS(geim_build({far}, dict, o2, Product::L2, 4, 1e-12),
                  DegenerateResidual);
}

TEST_CASE("empty dictionary is rejected") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  CHECK_THROWS_AS(
      geim_build(training_set(g, o2, 4), Dictionary{}, o2, Product::L2, 4, 1e-12),
      DictionaryExhausted);
}

TEST_CASE("H1 greedy drives the H1 error down") {
  const Grid g = small_grid();
  const SubdomainMask o2 = omega2_mask(g);
  const std::vector<Field> snaps = training_set(g, o2, 14);
  const GeimModel model =
      geim_build(snaps, default_dict(g, o2), o2, Product::H1, 12, 1e-12);
  REQUIRE(model.size() >= 4);
  double worst = 0;
  for (const Field& f : snaps)
    worst = std::max(worst, geim_error(model, f, model.size(), Product::H1));
  CHECK(worst < 0.05 * model.history[0]);
}
