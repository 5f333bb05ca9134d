#include "geim/noise.hpp"

#include <cmath>

namespace geim {

double noisy_measure(const Sensor& sensor, const Field& field, const NoiseModel& nm,
                     uint64_t draw_index) {
  double v = apply(sensor, field);
  if (nm.epsilon > 0)
    v += nm.epsilon * rng::standard_normal(nm.seed, static_cast<uint64_t>(sensor.id),
                                           draw_index);
  return v;
}

SeriesEnsemble build_series_ensemble(const std::vector<Field>& snapshots,
                                     const Dictionary& dict, const SubdomainMask& mask,
                                     int P, int M, double tol) {
  if (P < 1) throw SizeMismatch("P must be >= 1");
  if (dict.size() < P * M)
    throw DictionaryExhausted("dictionary smaller than P*M sensors");

  SeriesEnsemble ens;
  ens.M = M;
  Dictionary remaining = dict;
  const ProductSpace space(mask, Product::L2);
  for (int p = 0; p < P; ++p) {
    if (remaining.size() < M)
      throw DictionaryExhausted("fewer than M candidate sensors remain");
    GeimModel model = geim_build(snapshots, remaining, mask, Product::L2, M, tol);
    if (model.size() < M)
      throw DegenerateResidual("series stopped before reaching M sensors");
    ens.lambdas.push_back(space.op_norm(model, M));

    std::vector<char> taken(dict.size() + 1, 0);
    for (int id : model.sensor_ids) taken[id] = 1;
    Dictionary next;
    next.kind = remaining.kind;
    next.subdomain = remaining.subdomain;
    for (const Sensor& s : remaining.sensors)
      if (!taken[s.id]) next.sensors.push_back(s);
    remaining = std::move(next);
    ens.models.push_back(std::move(model));
  }
  double inv = 0;
  for (double l : ens.lambdas) inv += 1.0 / l;
  ens.lambda_bar = ens.P() / inv;
  return ens;
}

namespace {

Eigen::VectorXd series_measurements(const GeimModel& model, const Field& truth,
                                    const NoiseModel& nm, int M, uint64_t trial) {
  Eigen::VectorXd m(M);
  for (int i = 0; i < M; ++i) m[i] = noisy_measure(model.sensors[i], truth, nm, trial);
  return m;
}

}  // namespace

Field averaged_reconstruction(const SeriesEnsemble& ens, const Field& truth,
                              const NoiseModel& nm, int M, uint64_t trial) {
  if (M < 1 || M > ens.M) throw SizeMismatch("M exceeds ensemble dimension");
  const int P = ens.P();
  Field out(truth.grid);
  for (int p = 0; p < P; ++p) {
    const double w = ens.lambda_bar / (P * ens.lambdas[p]);
    const Eigen::VectorXd m = series_measurements(ens.models[p], truth, nm, M, trial);
    out.values += w * geim_interpolate(ens.models[p], M, m).values;
  }
  return out;
}

VarianceReport variance_study(const SeriesEnsemble& ens, const Field& truth,
                              const NoiseModel& nm, int M, int trials) {
  const int P = ens.P();
  VarianceReport rep;
  rep.P = P;
  rep.M = M;
  rep.trials = trials;
  rep.epsilon = nm.epsilon;

  const SubdomainMask& mask = ens.models[0].mask;
  // per-series measurement -> field maps on mask nodes, K_p = Q_p B_p^{-1}
  const int n = static_cast<int>(mask.nodes.size());
  std::vector<Eigen::MatrixXd> K(P);
  std::vector<Eigen::VectorXd> m0(P), rec0(P);
  const NoiseModel noiseless{0.0, nm.seed};
  for (int p = 0; p < P; ++p) {
    Eigen::MatrixXd Q(n, M);
    for (int j = 0; j < M; ++j)
      for (int a = 0; a < n; ++a)
        Q(a, j) = ens.models[p].basis[j].values[mask.nodes[a]];
    K[p] = ens.models[p]
               .B.topLeftCorner(M, M)
               .transpose()
               .triangularView<Eigen::Upper>()
               .solve(Eigen::MatrixXd(Q.transpose()))
               .transpose();
    m0[p] = series_measurements(ens.models[p], truth, noiseless, M, 0);
    rec0[p] = K[p] * m0[p];
  }
  Eigen::VectorXd wq(n);
  {
    const Eigen::VectorXd w = quad_weights(mask.grid);
    for (int a = 0; a < n; ++a) wq[a] = w[mask.nodes[a]];
  }
  auto l2 = [&](const Eigen::VectorXd& v) { return std::sqrt(v.cwiseAbs2().dot(wq)); };

  Eigen::VectorXd avg0 = Eigen::VectorXd::Zero(n);
  for (int p = 0; p < P; ++p)
    avg0 += ens.lambda_bar / (P * ens.lambdas[p]) * rec0[p];

  double sum2_avg = 0;
  std::vector<double> sum2_single(P, 0.0);
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXd avg = Eigen::VectorXd::Zero(n);
    for (int p = 0; p < P; ++p) {
      Eigen::VectorXd m(M);
      for (int i = 0; i < M; ++i)
        m[i] = m0[p][i] + nm.epsilon *
                              rng::standard_normal(
                                  nm.seed,
                                  static_cast<uint64_t>(ens.models[p].sensors[i].id),
                                  static_cast<uint64_t>(t));
      const Eigen::VectorXd rec = K[p] * m;
      const double dev = l2(rec - rec0[p]);
      sum2_single[p] += dev * dev;
      avg += ens.lambda_bar / (P * ens.lambdas[p]) * rec;
    }
    const double dev = l2(avg - avg0);
    sum2_avg += dev * dev;
  }
  rep.std_averaged = std::sqrt(sum2_avg / trials);
  rep.std_single.resize(P);
  for (int p = 0; p < P; ++p) rep.std_single[p] = std::sqrt(sum2_single[p] / trials);
  rep.predicted_ratio = ens.lambda_bar / (ens.lambdas[0] * std::sqrt(double(P)));
  rep.empirical_ratio =
      rep.std_single[0] > 0 ? rep.std_averaged / rep.std_single[0] : 0.0;
  rep.predicted_std_averaged = rep.predicted_ratio * rep.std_single[0];
  double lmax = 0;
  for (double l : ens.lambdas) lmax = std::max(lmax, l);
  rep.condition_holds = lmax < std::sqrt(double(P));
  return rep;
}

}  // namespace geim
