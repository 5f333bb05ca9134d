#pragma once
#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "geim/grid.hpp"

namespace geim {

enum class Product { L2, H1 };

/// Tensor trapezoidal quadrature weights over the full grid.
Eigen::VectorXd quad_weights(const Grid& g);

/// Discrete L2 pairing restricted to a mask, using the global trapezoid
/// weights. Subdomain integrals are additive when masks partition the nodes.
double inner_l2(const Field& f, const Field& g, const SubdomainMask& mask);

/// L2 part plus gradient part. Gradients use centered differences in the
/// interior and one-sided differences at the grid boundary.
double inner_h1(const Field& f, const Field& g, const SubdomainMask& mask);

double inner(const Field& f, const Field& g, const SubdomainMask& mask, Product p);
double norm(const Field& f, const SubdomainMask& mask, Product p);

/// Values copied on mask nodes, zero elsewhere.
Field restrict_to(const Field& f, const SubdomainMask& mask);

Eigen::SparseMatrix<double> gradient_x_matrix(const Grid& g);
Eigen::SparseMatrix<double> gradient_y_matrix(const Grid& g);

/// Dense SPD matrix of the inner product on mask-supported fields,
/// indexed by position in mask.nodes.
Eigen::MatrixXd product_matrix(const SubdomainMask& mask, Product p);

}  // namespace geim
