#include "geim/geim.hpp"

#include <cmath>

namespace geim {

GeimModel geim_build(const std::vector<Field>& snapshots, const Dictionary& dict,
                     const SubdomainMask& mask, Product product, int M_max,
                     double tol) {
  if (snapshots.empty()) throw DegenerateSnapshot("empty snapshot set");
  if (dict.sensors.empty()) throw DictionaryExhausted("empty dictionary");
  for (const Field& f : snapshots) require_same_grid(f.grid, mask.grid);

  GeimModel model;
  model.grid = mask.grid;
  model.mask = mask;
  model.product = product;
  std::vector<char> used(dict.sensors.size(), 0);

  for (int step = 0; step < M_max; ++step) {
    const int M = step;
    double best = -1;
    int best_snap = -1;
    Field best_resid;
    for (size_t s = 0; s < snapshots.size(); ++s) {
      Field resid = snapshots[s];
      if (M > 0) {
        const Eigen::VectorXd meas = geim_measure(model, M, snapshots[s]);
        const Field interp = geim_interpolate(model, M, meas);
        resid.values -= interp.values;
      }
      const double e = norm(resid, mask, product);
      if (e > best) {
        best = e;
        best_snap = static_cast<int>(s);
        best_resid = std::move(resid);
      }
    }
    if (M == 0 && best < 1e-300)
      throw DegenerateSnapshot("all snapshots vanish in the greedy norm");
    if (M > 0 && best <= tol * model.history[0]) break;

    double smax = -1;
    int best_pos = -1;
    for (int c = 0; c < dict.size(); ++c) {
      const double v = std::abs(apply(dict.sensors[c], best_resid));
      if (v > smax) {
        smax = v;
        best_pos = c;
      }
    }
    const double sval = apply(dict.sensors[best_pos], best_resid);
    if (std::abs(sval) < 1e-14 * best)
      throw DegenerateResidual("dictionary cannot see the greedy residual");
    if (used[best_pos])
      throw DegenerateResidual("sensor re-selected; residual not interpolated");
    used[best_pos] = 1;

    Field q(best_resid.grid, best_resid.values / sval);
    model.history.push_back(best);
    model.selected_snapshots.push_back(best_snap);
    model.sensor_ids.push_back(dict.sensors[best_pos].id);
    model.sensors.push_back(dict.sensors[best_pos]);
    model.basis.push_back(std::move(q));

    const int Mn = model.size();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(Mn, Mn);
    if (Mn > 1) B.topLeftCorner(Mn - 1, Mn - 1) = model.B;
    for (int j = 0; j + 1 < Mn; ++j)
      B(Mn - 1, j) = apply(model.sensors[Mn - 1], model.basis[j]);
    B(Mn - 1, Mn - 1) = 1.0;  // sigma_M(q_M) = 1 by normalization
    model.B = std::move(B);
  }
  return model;
}

Eigen::VectorXd geim_measure(const GeimModel& model, int M, const Field& f) {
  require_same_grid(model.grid, f.grid);
  if (M < 0 || M > model.size()) throw SizeMismatch("M exceeds model size");
  Eigen::VectorXd m(M);
  for (int i = 0; i < M; ++i) m[i] = apply(model.sensors[i], f);
  return m;
}

Field geim_interpolate(const GeimModel& model, int M,
                       const Eigen::VectorXd& measurements) {
  if (M < 0 || M > model.size()) throw SizeMismatch("M exceeds model size");
  if (measurements.size() != M) throw SizeMismatch("measurement count != M");
  const Eigen::VectorXd alpha =
      model.B.topLeftCorner(M, M).triangularView<Eigen::Lower>().solve(measurements);
  Field out(model.grid);
  for (int j = 0; j < M; ++j) out.values += alpha[j] * model.basis[j].values;
  return out;
}

double geim_error(const GeimModel& model, const Field& f, int M, Product product) {
  const Eigen::VectorXd meas = geim_measure(model, M, f);
  Field diff = f;
  diff.values -= geim_interpolate(model, M, meas).values;
  return norm(diff, model.mask, product);
}

double lebesgue_empirical(const GeimModel& model, int M,
                          const std::vector<Field>& test_fields) {
  double best = 0;
  for (const Field& u : test_fields) {
    const double nu = norm(u, model.mask, model.product);
    if (nu < 1e-300) continue;
    const Field ju = geim_interpolate(model, M, geim_measure(model, M, u));
    best = std::max(best, norm(ju, model.mask, model.product) / nu);
  }
  return best;
}

ProductSpace::ProductSpace(const SubdomainMask& mask, Product product)
    : mask_(mask), product_(product), pos_(mask.grid.size(), -1) {
  for (size_t a = 0; a < mask_.nodes.size(); ++a) pos_[mask_.nodes[a]] = static_cast<int>(a);
  llt_.compute(product_matrix(mask_, product_));
  if (llt_.info() != Eigen::Success)
    throw SingularSystem("product matrix is not positive definite");
}

double ProductSpace::op_norm(const GeimModel& model, int M) const {
  if (M < 1 || M > model.size()) throw SizeMismatch("M exceeds model size");
  const int n = static_cast<int>(mask_.nodes.size());
  // J = Q B^{-1} S on mask-supported fields; operator norm in the W metric
  // is the largest singular value of L^T (Q B^{-1}) (L^{-1} S^T)^T.
  Eigen::MatrixXd Q(n, M);
  for (int j = 0; j < M; ++j)
    for (int a = 0; a < n; ++a) Q(a, j) = model.basis[j].values[mask_.nodes[a]];
  Eigen::MatrixXd St = Eigen::MatrixXd::Zero(n, M);  // S^T
  for (int i = 0; i < M; ++i) {
    const Sensor& s = model.sensors[i];
    for (size_t k = 0; k < s.nodes.size(); ++k) {
      const int a = pos_[s.nodes[k]];
      if (a < 0) throw GridMismatch("sensor support outside the mask");
      St(a, i) = s.coeffs[k];
    }
  }
  // K = Q B^{-1}  via  B^T X = Q^T
  const Eigen::MatrixXd K = model.B.topLeftCorner(M, M)
                                .transpose()
                                .triangularView<Eigen::Upper>()
                                .solve(Eigen::MatrixXd(Q.transpose()))
                                .transpose();
  const Eigen::MatrixXd L = llt_.matrixL();
  const Eigen::MatrixXd U = L.transpose() * K;
  const Eigen::MatrixXd V = L.triangularView<Eigen::Lower>().solve(St);
  // thin QR of both factors reduces the rank-M product to an MxM SVD
  Eigen::HouseholderQR<Eigen::MatrixXd> qu(U), qv(V);
  const Eigen::MatrixXd Ru =
      qu.matrixQR().topRows(M).triangularView<Eigen::Upper>();
  const Eigen::MatrixXd Rv =
      qv.matrixQR().topRows(M).triangularView<Eigen::Upper>();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Ru * Rv.transpose());
  return svd.singularValues()(0);
}

double lebesgue_exact(const GeimModel& model, int M, Product product) {
  return ProductSpace(model.mask, product).op_norm(model, M);
}

double pessimistic_bound(const GeimModel& model, int M) {
  if (M < 1 || M > model.size()) throw SizeMismatch("M exceeds model size");
  double qmax = 0;
  for (int i = 0; i < M; ++i)
    qmax = std::max(qmax, norm(model.basis[i], model.mask, Product::L2));
  return std::ldexp(qmax, M - 1);
}

GeimModel geim_from_eim(const EimModel& em) {
  GeimModel gm;
  gm.grid = em.grid;
  gm.mask = em.mask;
  gm.product = Product::L2;
  gm.basis = em.basis;
  gm.B = em.B;
  gm.selected_snapshots = em.selected_snapshots;
  gm.history = em.history;
  for (size_t i = 0; i < em.points.size(); ++i) {
    Sensor s;
    s.kind = SensorKind::Dirac;
    s.id = static_cast<int>(i);
    s.grid = em.grid;
    s.cx = em.grid.x(em.grid.col(em.points[i]));
    s.cy = em.grid.y(em.grid.row(em.points[i]));
    s.nodes = {em.points[i]};
    s.coeffs = {1.0};
    gm.sensor_ids.push_back(s.id);
    gm.sensors.push_back(std::move(s));
  }
  return gm;
}

}  // namespace geim
