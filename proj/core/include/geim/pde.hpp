#pragma once
#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"

namespace geim {

struct ParamPoint {
  double alpha = 0, beta = 0, gamma = 0;
};

/// f = 1 + (alpha sin(x) + beta cos(gamma pi y)) on chi1 nodes, 1 elsewhere.
Field forcing(const ParamPoint& p, const Grid& grid, const SubdomainMask& chi1);

/// 5-point finite-difference solver for -Laplace(phi) = f with Dirichlet
/// data. The factorization is reused across right-hand sides.
class PoissonSolver {
 public:
  explicit PoissonSolver(const Grid& grid);

  /// boundary holds Dirichlet values on the full grid (only boundary
  /// entries are read).
  Field solve(const Field& f, const Eigen::VectorXd& boundary) const;
  Field solve(const Field& f) const;  // homogeneous Dirichlet

 private:
  Grid grid_;
  std::vector<int> unknown_;  // node -> interior unknown index, -1 on boundary
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
  Eigen::SparseMatrix<double> A_;
};

Field solve_laplace(const Field& f, const Grid& grid, const Eigen::VectorXd& boundary);
Field solve_laplace(const Field& f, const Grid& grid);

struct AxisRange {
  double min = 0, max = 0;
  int count = 1;
  /// Linspace value; a single-sample axis takes the interval midpoint.
  double value(int i) const {
    if (count == 1) return 0.5 * (min + max);
    return min + (max - min) * i / (count - 1);
  }
};

struct ParamRanges {
  AxisRange alpha, beta, gamma;
  int total() const { return alpha.count * beta.count * gamma.count; }
};

struct SnapshotSet {
  Grid grid;
  std::vector<ParamPoint> params;
  std::vector<Field> fields;
  double solver_tol = 1e-10;
  ParamRanges ranges;
};

/// Tensor parameter grid, one solve per point, alpha varying fastest.
/// Solves are distributed over `threads` workers; ordering is by index.
SnapshotSet generate_snapshots(const ParamRanges& ranges, const Grid& grid,
                               const SubdomainMask& chi1, int threads = 1);

}  // namespace geim
