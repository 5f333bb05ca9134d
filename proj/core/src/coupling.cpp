#include "geim/coupling.hpp"

#include <cmath>

namespace geim {

std::vector<double> extract_trace(const Field& f, const Grid& grid) {
  require_same_grid(f.grid, grid);
  std::vector<double> t(grid.ny);
  for (int j = 0; j < grid.ny; ++j) t[j] = f.values[grid.index(grid.interface_col, j)];
  return t;
}

double interface_trace_norm(const Grid& grid, const std::vector<double>& trace) {
  if (static_cast<int>(trace.size()) != grid.ny)
    throw SizeMismatch("trace length != ny");
  double s = 0;
  for (int j = 1; j < grid.ny - 1; ++j) s += trace[j] * trace[j];
  return std::sqrt(grid.hy() * s);
}

Field reconstruct_omega2(const GeimModel& model, const Field& truth, int M) {
  return geim_interpolate(model, M, geim_measure(model, M, truth));
}

Omega1Solver::Omega1Solver(const Grid& grid, const SubdomainMask& chi1)
    : grid_(grid), chi1_(chi1), o1_(omega1_mask(grid)), unknown_(grid.size(), -1) {
  require_same_grid(grid, chi1.grid);
  const int ic = grid.interface_col;
  int n = 0;
  for (int j = 1; j < grid.ny - 1; ++j)
    for (int i = 1; i < ic; ++i) unknown_[grid.index(i, j)] = n++;

  const double ax = 1.0 / (grid.hx() * grid.hx());
  const double ay = 1.0 / (grid.hy() * grid.hy());
  std::vector<Eigen::Triplet<double>> t;
  for (int j = 1; j < grid.ny - 1; ++j)
    for (int i = 1; i < ic; ++i) {
      const int r = unknown_[grid.index(i, j)];
      t.emplace_back(r, r, 2 * ax + 2 * ay);
      for (auto [ii, jj, a] : {std::tuple{i - 1, j, ax}, {i + 1, j, ax},
                               {i, j - 1, ay}, {i, j + 1, ay}}) {
        const int u = unknown_[grid.index(ii, jj)];
        if (u >= 0) t.emplace_back(r, u, -a);
      }
    }
  A_.resize(n, n);
  A_.setFromTriplets(t.begin(), t.end());
  ldlt_.compute(A_);
  if (ldlt_.info() != Eigen::Success)
    throw SingularSystem("Omega1 Laplacian factorization failed");
}

Field Omega1Solver::solve_forcing(const Field& f, const std::vector<double>& trace) const {
  require_same_grid(f.grid, grid_);
  if (static_cast<int>(trace.size()) != grid_.ny)
    throw SizeMismatch("trace length != ny");
  const int ic = grid_.interface_col;
  const double ax = 1.0 / (grid_.hx() * grid_.hx());
  const double ay = 1.0 / (grid_.hy() * grid_.hy());
  Eigen::VectorXd rhs(A_.rows());
  for (int j = 1; j < grid_.ny - 1; ++j)
    for (int i = 1; i < ic; ++i) {
      double b = f.values[grid_.index(i, j)];
      if (i == ic - 1) b += ax * trace[j];
      rhs[unknown_[grid_.index(i, j)]] = b;
    }
  const Eigen::VectorXd u = ldlt_.solve(rhs);
  if (ldlt_.info() != Eigen::Success) throw SingularSystem("Omega1 solve failed");

  Field out(grid_);
  for (int j = 0; j < grid_.ny; ++j)
    for (int i = 0; i <= ic; ++i) {
      const int k = grid_.index(i, j);
      if (unknown_[k] >= 0)
        out.values[k] = u[unknown_[k]];
      else if (i == ic && j > 0 && j < grid_.ny - 1)
        out.values[k] = trace[j];
      // outer boundary stays homogeneous
    }
  return out;
}

Field Omega1Solver::solve(const ParamPoint& p, const std::vector<double>& trace) const {
  return solve_forcing(forcing(p, grid_, chi1_), trace);
}

double Omega1Solver::stability_constant() const {
  if (stab_ > 0) return stab_;
  // lifting operator: unit trace impulses -> zero-forcing solves; exact
  // operator norm from the generalized eigenproblem G v = lambda D v
  const int m = grid_.ny - 2;
  Field zero(grid_);
  std::vector<Field> lift;
  lift.reserve(m);
  for (int j = 1; j <= m; ++j) {
    std::vector<double> t(grid_.ny, 0.0);
    t[j] = 1.0;
    lift.push_back(solve_forcing(zero, t));
  }
  Eigen::MatrixXd G(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      G(a, b) = G(b, a) = inner_h1(lift[a], lift[b], o1_);
  // D = hy * I in the interface norm
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(G / grid_.hy());
  stab_ = std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));
  return stab_;
}

std::vector<CoupledResult> coupled_run(const GeimModel& model, const ParamPoint& p_truth,
                                       const Grid& grid, const SubdomainMask& chi1,
                                       const std::vector<int>& M_range,
                                       const Field* truth_in) {
  Field truth;
  if (truth_in) {
    truth = *truth_in;
  } else {
    const PoissonSolver solver(grid);
    truth = solver.solve(forcing(p_truth, grid, chi1));
  }
  const SubdomainMask o1 = omega1_mask(grid);
  const SubdomainMask o2 = omega2_mask(grid);
  const SubdomainMask o2c = omega2_closed_mask(grid);
  const Field truth_o2 = restrict_to(truth, o2c);
  const std::vector<double> trace_truth = extract_trace(truth, grid);
  const Omega1Solver o1solver(grid, chi1);

  std::vector<CoupledResult> results;
  results.reserve(M_range.size());
  for (int M : M_range) {
    CoupledResult r;
    r.M = M;
    r.reconstruction_omega2 = reconstruct_omega2(model, truth_o2, M);
    std::vector<double> trace = extract_trace(r.reconstruction_omega2, grid);
    r.solution_omega1 = o1solver.solve(p_truth, trace);

    Field diff2 = r.reconstruction_omega2;
    diff2.values -= truth_o2.values;
    r.err_l2_omega2 = norm(diff2, o2, Product::L2);
    r.err_h1_omega2 = norm(diff2, o2, Product::H1);

    Field diff1 = r.solution_omega1;
    diff1.values -= restrict_to(truth, o1).values;
    // the Omega1 field also carries interface values; compare on Omega1 nodes
    diff1 = restrict_to(diff1, o1);
    r.err_l2_omega1 = norm(diff1, o1, Product::L2);
    r.err_h1_omega1 = norm(diff1, o1, Product::H1);

    std::vector<double> tdiff(grid.ny);
    for (int j = 0; j < grid.ny; ++j) tdiff[j] = trace[j] - trace_truth[j];
    r.trace_err = interface_trace_norm(grid, tdiff);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace geim
