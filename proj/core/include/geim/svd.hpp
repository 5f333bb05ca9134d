#pragma once
#include <Eigen/Dense>
#include <vector>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"

namespace geim {

struct SvdResult {
  Product product = Product::L2;
  SubdomainMask mask;
  Eigen::VectorXd singular_values;  // nonincreasing
  std::vector<Field> modes;         // orthonormal in the declared product
};

/// Method of snapshots: eigendecomposition of the Gram matrix in the
/// declared product; modes below 1e-14 * sigma_1 are dropped.
SvdResult snapshot_svd(const std::vector<Field>& snapshots,
                       const SubdomainMask& mask, Product product);

/// ||phi - Pi_M phi|| with Pi_M the projection onto the first M modes.
double best_fit_error(const SvdResult& svd, const Field& phi, int M);

/// Orthogonal-projection residual norm onto span(basis) via a Gram solve.
double project_span_error(const std::vector<Field>& basis, const Field& phi,
                          const SubdomainMask& mask, Product product);

}  // namespace geim
