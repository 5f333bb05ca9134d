#include "geim/eim.hpp"

#include <cmath>

namespace geim {

namespace {

double sup_norm(const Field& f, const SubdomainMask& mask, int* arg = nullptr) {
  double best = -1;
  int bestk = -1;
  for (int k : mask.nodes) {
    const double v = std::abs(f.values[k]);
    if (v > best) {
      best = v;
      bestk = k;
    }
  }
  if (arg) *arg = bestk;
  return best;
}

}  // namespace

EimModel eim_build(const std::vector<Field>& snapshots, const SubdomainMask& mask,
                   int M_max, double tol) {
  if (snapshots.empty()) throw DegenerateSnapshot("empty snapshot set");
  for (const Field& f : snapshots) require_same_grid(f.grid, mask.grid);

  EimModel model;
  model.grid = mask.grid;
  model.mask = mask;

  for (int step = 0; step < M_max; ++step) {
    const int M = step;  // current basis size
    // residual sup-norm per snapshot
    double best = -1;
    int best_snap = -1;
    Field best_resid;
    for (size_t s = 0; s < snapshots.size(); ++s) {
      Field resid = snapshots[s];
      if (M > 0) {
        Eigen::VectorXd pv = eim_point_values(model, M, snapshots[s]);
        Field interp = eim_interpolate(model, M, pv);
        resid.values -= interp.values;
      }
      const double e = sup_norm(resid, mask);
      if (e > best) {
        best = e;
        best_snap = static_cast<int>(s);
        best_resid = std::move(resid);
      }
    }
    if (M == 0 && best < 1e-300)
      throw DegenerateSnapshot("all snapshots vanish in sup-norm");
    if (M > 0 && best <= tol * model.history[0]) break;

    int xM;
    const double rmax = sup_norm(best_resid, mask, &xM);
    if (rmax < 1e-300) break;  // exact rank exhaustion
    Field q(best_resid.grid, best_resid.values / best_resid.values[xM]);

    model.history.push_back(best);
    model.selected_snapshots.push_back(best_snap);
    model.points.push_back(xM);
    model.basis.push_back(std::move(q));
    const int Mn = model.size();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(Mn, Mn);
    if (Mn > 1) B.topLeftCorner(Mn - 1, Mn - 1) = model.B;
    for (int j = 0; j < Mn; ++j) B(Mn - 1, j) = model.basis[j].values[xM];
    B(Mn - 1, Mn - 1) = 1.0;  // q_M(x_M) = 1 by normalization
    model.B = std::move(B);
  }
  return model;
}

Eigen::VectorXd eim_point_values(const EimModel& model, int M, const Field& f) {
  require_same_grid(model.grid, f.grid);
  if (M < 0 || M > model.size()) throw SizeMismatch("M exceeds model size");
  Eigen::VectorXd pv(M);
  for (int i = 0; i < M; ++i) pv[i] = f.values[model.points[i]];
  return pv;
}

Field eim_interpolate(const EimModel& model, int M, const Eigen::VectorXd& point_values) {
  if (M < 0 || M > model.size()) throw SizeMismatch("M exceeds model size");
  if (point_values.size() != M) throw SizeMismatch("point value count != M");
  const Eigen::VectorXd alpha =
      model.B.topLeftCorner(M, M).triangularView<Eigen::Lower>().solve(point_values);
  Field out(model.grid);
  for (int j = 0; j < M; ++j) out.values += alpha[j] * model.basis[j].values;
  return out;
}

std::vector<Field> lagrange_functions(const EimModel& model, int M) {
  if (M < 1 || M > model.size()) throw SizeMismatch("M exceeds model size");
  // columns of B^{-1} give the combinations: h_i = sum_j q_j [B^-1]_ji
  const Eigen::MatrixXd Binv = model.B.topLeftCorner(M, M)
                                   .triangularView<Eigen::Lower>()
                                   .solve(Eigen::MatrixXd::Identity(M, M));
  std::vector<Field> h;
  h.reserve(M);
  for (int i = 0; i < M; ++i) {
    Field hi(model.grid);
    for (int j = 0; j < M; ++j) hi.values += Binv(j, i) * model.basis[j].values;
    h.push_back(std::move(hi));
  }
  return h;
}

double lebesgue_linf(const EimModel& model, int M) {
  const std::vector<Field> h = lagrange_functions(model, M);
  double best = 0;
  for (int k : model.mask.nodes) {
    double s = 0;
    for (const Field& hi : h) s += std::abs(hi.values[k]);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace geim
