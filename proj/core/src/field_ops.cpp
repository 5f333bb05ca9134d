#include "geim/field_ops.hpp"

#include <cmath>
#include <vector>

namespace geim {

Eigen::VectorXd quad_weights(const Grid& g) {
  Eigen::VectorXd w(g.size());
  const double hx = g.hx(), hy = g.hy();
  for (int j = 0; j < g.ny; ++j) {
    const double cy = (j == 0 || j == g.ny - 1) ? 0.5 : 1.0;
    for (int i = 0; i < g.nx; ++i) {
      const double cx = (i == 0 || i == g.nx - 1) ? 0.5 : 1.0;
      w[g.index(i, j)] = hx * hy * cx * cy;
    }
  }
  return w;
}

double inner_l2(const Field& f, const Field& g, const SubdomainMask& mask) {
  require_same_grid(f.grid, g.grid);
  require_same_grid(f.grid, mask.grid);
  const Eigen::VectorXd w = quad_weights(mask.grid);
  double s = 0;
  for (int k : mask.nodes) s += w[k] * f.values[k] * g.values[k];
  return s;
}

namespace {

// one gradient component at a node, centered interior / one-sided at edges
double grad_at(const Eigen::VectorXd& v, const Grid& g, int i, int j, bool xdir) {
  if (xdir) {
    const double hx = g.hx();
    if (i == 0) return (v[g.index(1, j)] - v[g.index(0, j)]) / hx;
    if (i == g.nx - 1) return (v[g.index(i, j)] - v[g.index(i - 1, j)]) / hx;
    return (v[g.index(i + 1, j)] - v[g.index(i - 1, j)]) / (2 * hx);
  }
  const double hy = g.hy();
  if (j == 0) return (v[g.index(i, 1)] - v[g.index(i, 0)]) / hy;
  if (j == g.ny - 1) return (v[g.index(i, j)] - v[g.index(i, j - 1)]) / hy;
  return (v[g.index(i, j + 1)] - v[g.index(i, j - 1)]) / (2 * hy);
}

}  // namespace

double inner_h1(const Field& f, const Field& g, const SubdomainMask& mask) {
  require_same_grid(f.grid, g.grid);
  require_same_grid(f.grid, mask.grid);
  const Grid& gr = mask.grid;
  const Eigen::VectorXd w = quad_weights(gr);
  double s = 0;
  for (int k : mask.nodes) {
    const int i = gr.col(k), j = gr.row(k);
    const double fx = grad_at(f.values, gr, i, j, true);
    const double gx = grad_at(g.values, gr, i, j, true);
    const double fy = grad_at(f.values, gr, i, j, false);
    const double gy = grad_at(g.values, gr, i, j, false);
    s += w[k] * (f.values[k] * g.values[k] + fx * gx + fy * gy);
  }
  return s;
}

double inner(const Field& f, const Field& g, const SubdomainMask& mask, Product p) {
  return p == Product::L2 ? inner_l2(f, g, mask) : inner_h1(f, g, mask);
}

double norm(const Field& f, const SubdomainMask& mask, Product p) {
  return std::sqrt(std::max(0.0, inner(f, f, mask, p)));
}

Field restrict_to(const Field& f, const SubdomainMask& mask) {
  require_same_grid(f.grid, mask.grid);
  Field out(f.grid);
  for (int k : mask.nodes) out.values[k] = f.values[k];
  return out;
}

Eigen::SparseMatrix<double> gradient_x_matrix(const Grid& g) {
  std::vector<Eigen::Triplet<double>> t;
  const double hx = g.hx();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const int k = g.index(i, j);
      if (i == 0) {
        t.emplace_back(k, g.index(1, j), 1 / hx);
        t.emplace_back(k, g.index(0, j), -1 / hx);
      } else if (i == g.nx - 1) {
        t.emplace_back(k, g.index(i, j), 1 / hx);
        t.emplace_back(k, g.index(i - 1, j), -1 / hx);
      } else {
        t.emplace_back(k, g.index(i + 1, j), 1 / (2 * hx));
        t.emplace_back(k, g.index(i - 1, j), -1 / (2 * hx));
      }
    }
  Eigen::SparseMatrix<double> G(g.size(), g.size());
  G.setFromTriplets(t.begin(), t.end());
  return G;
}

Eigen::SparseMatrix<double> gradient_y_matrix(const Grid& g) {
  std::vector<Eigen::Triplet<double>> t;
  const double hy = g.hy();
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const int k = g.index(i, j);
      if (j == 0) {
        t.emplace_back(k, g.index(i, 1), 1 / hy);
        t.emplace_back(k, g.index(i, 0), -1 / hy);
      } else if (j == g.ny - 1) {
        t.emplace_back(k, g.index(i, j), 1 / hy);
        t.emplace_back(k, g.index(i, j - 1), -1 / hy);
      } else {
        t.emplace_back(k, g.index(i, j + 1), 1 / (2 * hy));
        t.emplace_back(k, g.index(i, j - 1), -1 / (2 * hy));
      }
    }
  Eigen::SparseMatrix<double> G(g.size(), g.size());
  G.setFromTriplets(t.begin(), t.end());
  return G;
}

Eigen::MatrixXd product_matrix(const SubdomainMask& mask, Product p) {
  const Grid& g = mask.grid;
  const int n = static_cast<int>(mask.nodes.size());
  const Eigen::VectorXd w = quad_weights(g);
  std::vector<int> pos(g.size(), -1);
  for (int a = 0; a < n; ++a) pos[mask.nodes[a]] = a;

  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) W(a, a) = w[mask.nodes[a]];
  if (p == Product::L2) return W;

  const Eigen::SparseMatrix<double> Gx = gradient_x_matrix(g);
  const Eigen::SparseMatrix<double> Gy = gradient_y_matrix(g);
  auto accumulate = [&](const Eigen::SparseMatrix<double>& G) {
    // W += sum_{k in mask} w_k g_k g_k^T with g_k the row of G restricted
    // to mask columns (off-mask columns read zeros of a mask-supported field)
    Eigen::SparseMatrix<double, Eigen::RowMajor> R(G);
    for (int k : mask.nodes) {
      std::vector<std::pair<int, double>> row;
      for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(R, k); it; ++it)
        if (pos[it.col()] >= 0) row.emplace_back(pos[it.col()], it.value());
      for (auto [a, va] : row)
        for (auto [b, vb] : row) W(a, b) += w[k] * va * vb;
    }
  };
  accumulate(Gx);
  accumulate(Gy);
  return W;
}

}  // namespace geim
