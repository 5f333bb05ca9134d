#pragma once
#include <vector>

#include "geim/geim.hpp"
#include "geim/pde.hpp"

namespace geim {

/// Values on the interface column, bottom-to-top (size ny).
std::vector<double> extract_trace(const Field& f, const Grid& grid);

/// sqrt(hy * sum over interior interface rows of t_j^2); the endpoints sit
/// on the outer boundary and carry fixed Dirichlet data.
double interface_trace_norm(const Grid& grid, const std::vector<double>& trace);

/// Applies the model sensors to the truth field and interpolates.
Field reconstruct_omega2(const GeimModel& model, const Field& truth, int M);

/// Finite-difference solve on Omega1 with homogeneous data on the outer
/// boundary and trace data on the interface column.
class Omega1Solver {
 public:
  Omega1Solver(const Grid& grid, const SubdomainMask& chi1);

  Field solve(const ParamPoint& p, const std::vector<double>& trace) const;
  Field solve_forcing(const Field& f, const std::vector<double>& trace) const;

  /// Exact operator norm of the trace -> H1(Omega1) harmonic lifting,
  /// with respect to interface_trace_norm. Computed once, lazily.
  double stability_constant() const;

 private:
  Grid grid_;
  SubdomainMask chi1_, o1_;
  std::vector<int> unknown_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
  Eigen::SparseMatrix<double> A_;
  mutable double stab_ = -1;
};

struct CoupledResult {
  int M = 0;
  Field reconstruction_omega2;
  Field solution_omega1;
  double err_l2_omega1 = 0, err_h1_omega1 = 0;
  double err_l2_omega2 = 0, err_h1_omega2 = 0;
  double trace_err = 0;
};

/// For each M: global truth solve at p_truth -> sensor data ->
/// reconstruction -> interface trace -> Omega1 solve -> errors.
/// A precomputed truth field may be passed to skip the global solve.
std::vector<CoupledResult> coupled_run(const GeimModel& model, const ParamPoint& p_truth,
                                       const Grid& grid, const SubdomainMask& chi1,
                                       const std::vector<int>& M_range,
                                       const Field* truth = nullptr);

}  // namespace geim
