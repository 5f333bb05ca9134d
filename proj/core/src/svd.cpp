#include "geim/svd.hpp"

#include <cmath>

namespace geim {

SvdResult snapshot_svd(const std::vector<Field>& snapshots,
                       const SubdomainMask& mask, Product product) {
  if (snapshots.empty()) throw DegenerateSnapshot("empty snapshot set");
  const int n = static_cast<int>(snapshots.size());
  Eigen::MatrixXd G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      G(i, j) = G(j, i) = inner(snapshots[i], snapshots[j], mask, product);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G);
  if (eig.info() != Eigen::Success) throw SingularSystem("Gram eigensolve failed");

  SvdResult out;
  out.product = product;
  out.mask = mask;
  // eigenvalues ascending; walk backwards, clip at zero
  std::vector<double> sv;
  std::vector<Eigen::VectorXd> vecs;
  for (int k = n - 1; k >= 0; --k) {
    const double lam = std::max(0.0, eig.eigenvalues()(k));
    sv.push_back(std::sqrt(lam));
    vecs.push_back(eig.eigenvectors().col(k));
  }
  const double cutoff = sv.empty() ? 0.0 : 1e-14 * sv[0];
  int kept = 0;
  while (kept < n && sv[kept] > cutoff) ++kept;
  out.singular_values = Eigen::Map<Eigen::VectorXd>(sv.data(), kept);
  out.modes.reserve(kept);
  for (int k = 0; k < kept; ++k) {
    Field mode(mask.grid);
    for (int i = 0; i < n; ++i) mode.values += vecs[k][i] * snapshots[i].values;
    mode.values /= sv[k];
    out.modes.push_back(std::move(mode));
  }
  return out;
}

double best_fit_error(const SvdResult& svd, const Field& phi, int M) {
  if (M < 0 || M > static_cast<int>(svd.modes.size()))
    throw SizeMismatch("M exceeds mode count");
  Field resid = phi;
  for (int k = 0; k < M; ++k) {
    const double c = inner(phi, svd.modes[k], svd.mask, svd.product);
    resid.values -= c * svd.modes[k].values;
  }
  return norm(resid, svd.mask, svd.product);
}

double project_span_error(const std::vector<Field>& basis, const Field& phi,
                          const SubdomainMask& mask, Product product) {
  const int m = static_cast<int>(basis.size());
  if (m == 0) return norm(phi, mask, product);
  Eigen::MatrixXd G(m, m);
  Eigen::VectorXd r(m);
  for (int i = 0; i < m; ++i) {
    r[i] = inner(basis[i], phi, mask, product);
    for (int j = i; j < m; ++j)
      G(i, j) = G(j, i) = inner(basis[i], basis[j], mask, product);
  }
  const Eigen::VectorXd c = G.ldlt().solve(r);
  Field resid = phi;
  for (int i = 0; i < m; ++i) resid.values -= c[i] * basis[i].values;
  return norm(resid, mask, product);
}

}  // namespace geim
