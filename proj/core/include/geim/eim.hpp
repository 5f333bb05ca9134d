#pragma once
#include <Eigen/Dense>
#include <vector>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"

namespace geim {

/// Classical EIM: magic points, nested basis, lower-triangular collocation
/// matrix B with B_ij = q_j(x_i).
struct EimModel {
  Grid grid;
  SubdomainMask mask;
  std::vector<int> points;       // node indices, selection order
  std::vector<Field> basis;      // q_1..q_M
  Eigen::MatrixXd B;
  std::vector<int> selected_snapshots;
  std::vector<double> history;   // sup-norm greedy residuals, eps_{M-1}(phi_M)
  int size() const { return static_cast<int>(points.size()); }
};

/// Greedy build over the finite snapshot set; sup-norm over mask nodes.
/// Stops at M_max, at residual <= tol * history[0], or at rank exhaustion.
EimModel eim_build(const std::vector<Field>& snapshots, const SubdomainMask& mask,
                   int M_max, double tol);

Eigen::VectorXd eim_point_values(const EimModel& model, int M, const Field& f);

/// Forward-substitution solve of B alpha = point_values, returns sum alpha_j q_j.
Field eim_interpolate(const EimModel& model, int M, const Eigen::VectorXd& point_values);

/// h_i = sum_j q_j [B^-1]_ji, the cardinal functions with h_i(x_j) = delta_ij.
std::vector<Field> lagrange_functions(const EimModel& model, int M);

/// Lambda_M = max over mask nodes of sum_i |h_i(x)|.
double lebesgue_linf(const EimModel& model, int M);

}  // namespace geim
