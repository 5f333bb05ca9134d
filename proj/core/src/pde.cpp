#include "geim/pde.hpp"

#include <cmath>
#include <thread>

namespace geim {

Field forcing(const ParamPoint& p, const Grid& grid, const SubdomainMask& chi1) {
  require_same_grid(grid, chi1.grid);
  Field f(grid);
  f.values.setOnes();
  for (int k : chi1.nodes) {
    const double x = grid.x(grid.col(k)), y = grid.y(grid.row(k));
    f.values[k] = 1.0 + p.alpha * std::sin(x) + p.beta * std::cos(p.gamma * M_PI * y);
  }
  return f;
}

PoissonSolver::PoissonSolver(const Grid& grid)
    : grid_(grid), unknown_(grid.size(), -1) {
  int n = 0;
  for (int j = 1; j < grid.ny - 1; ++j)
    for (int i = 1; i < grid.nx - 1; ++i) unknown_[grid.index(i, j)] = n++;

  const double ax = 1.0 / (grid.hx() * grid.hx());
  const double ay = 1.0 / (grid.hy() * grid.hy());
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(static_cast<size_t>(5) * n);
  for (int j = 1; j < grid.ny - 1; ++j)
    for (int i = 1; i < grid.nx - 1; ++i) {
      const int r = unknown_[grid.index(i, j)];
      t.emplace_back(r, r, 2 * ax + 2 * ay);
      if (unknown_[grid.index(i - 1, j)] >= 0)
        t.emplace_back(r, unknown_[grid.index(i - 1, j)], -ax);
      if (unknown_[grid.index(i + 1, j)] >= 0)
        t.emplace_back(r, unknown_[grid.index(i + 1, j)], -ax);
      if (unknown_[grid.index(i, j - 1)] >= 0)
        t.emplace_back(r, unknown_[grid.index(i, j - 1)], -ay);
      if (unknown_[grid.index(i, j + 1)] >= 0)
        t.emplace_back(r, unknown_[grid.index(i, j + 1)], -ay);
    }
  A_.resize(n, n);
  A_.setFromTriplets(t.begin(), t.end());
  ldlt_.compute(A_);
  if (ldlt_.info() != Eigen::Success)
    throw SingularSystem("Dirichlet Laplacian factorization failed");
}

Field PoissonSolver::solve(const Field& f, const Eigen::VectorXd& boundary) const {
  require_same_grid(f.grid, grid_);
  if (boundary.size() != grid_.size())
    throw SizeMismatch("boundary vector length != grid size");
  const double ax = 1.0 / (grid_.hx() * grid_.hx());
  const double ay = 1.0 / (grid_.hy() * grid_.hy());
  Eigen::VectorXd rhs(A_.rows());
  for (int j = 1; j < grid_.ny - 1; ++j)
    for (int i = 1; i < grid_.nx - 1; ++i) {
      const int r = unknown_[grid_.index(i, j)];
      double b = f.values[grid_.index(i, j)];
      if (i == 1) b += ax * boundary[grid_.index(0, j)];
      if (i == grid_.nx - 2) b += ax * boundary[grid_.index(grid_.nx - 1, j)];
      if (j == 1) b += ay * boundary[grid_.index(i, 0)];
      if (j == grid_.ny - 2) b += ay * boundary[grid_.index(i, grid_.ny - 1)];
      rhs[r] = b;
    }
  const Eigen::VectorXd u = ldlt_.solve(rhs);
  if (ldlt_.info() != Eigen::Success) throw SingularSystem("Laplace solve failed");
  const double rres = (A_ * u - rhs).norm();
  if (rres > 1e-10 * std::max(1e-300, rhs.norm()))
    throw SingularSystem("Laplace solve residual above tolerance");

  Field out(grid_);
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i < grid_.nx; ++i) {
      const int k = grid_.index(i, j);
      out.values[k] = grid_.on_boundary(i, j) ? boundary[k] : u[unknown_[k]];
    }
  return out;
}

Field PoissonSolver::solve(const Field& f) const {
  return solve(f, Eigen::VectorXd::Zero(grid_.size()));
}

Field solve_laplace(const Field& f, const Grid& grid, const Eigen::VectorXd& boundary) {
  return PoissonSolver(grid).solve(f, boundary);
}

Field solve_laplace(const Field& f, const Grid& grid) {
  return PoissonSolver(grid).solve(f);
}

SnapshotSet generate_snapshots(const ParamRanges& ranges, const Grid& grid,
                               const SubdomainMask& chi1, int threads) {
  SnapshotSet set;
  set.grid = grid;
  set.ranges = ranges;
  for (int ig = 0; ig < ranges.gamma.count; ++ig)
    for (int ib = 0; ib < ranges.beta.count; ++ib)
      for (int ia = 0; ia < ranges.alpha.count; ++ia)
        set.params.push_back({ranges.alpha.value(ia), ranges.beta.value(ib),
                              ranges.gamma.value(ig)});

  const int n = static_cast<int>(set.params.size());
  set.fields.resize(n);
  const PoissonSolver solver(grid);
  const int nthreads = std::max(1, std::min(threads, n));
  auto work = [&](int t) {
    for (int k = t; k < n; k += nthreads)
      set.fields[k] = solver.solve(forcing(set.params[k], grid, chi1));
  };
  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return set;
}

}  // namespace geim
