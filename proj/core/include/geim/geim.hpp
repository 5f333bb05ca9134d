#pragma once
#include <Eigen/Dense>
#include <vector>

#include "geim/eim.hpp"
#include "geim/field_ops.hpp"
#include "geim/sensors.hpp"

namespace geim {

/// Generalized EIM: greedy co-selection of basis fields and dictionary
/// sensors; B_ij = sigma_i(q_j) is lower triangular with unit diagonal.
struct GeimModel {
  Grid grid;
  SubdomainMask mask;
  Product product = Product::L2;
  std::vector<int> sensor_ids;
  std::vector<Sensor> sensors;
  std::vector<Field> basis;
  Eigen::MatrixXd B;
  std::vector<int> selected_snapshots;
  std::vector<double> history;  // greedy residual norms, eps_{M-1}(phi_M)
  int size() const { return static_cast<int>(sensors.size()); }
};

GeimModel geim_build(const std::vector<Field>& snapshots, const Dictionary& dict,
                     const SubdomainMask& mask, Product product, int M_max,
                     double tol);

Eigen::VectorXd geim_measure(const GeimModel& model, int M, const Field& f);

/// Forward-substitution solve of B alpha = measurements, returns sum alpha_j q_j.
Field geim_interpolate(const GeimModel& model, int M,
                       const Eigen::VectorXd& measurements);

/// Norm of f - J_M[f] in the requested product on model.mask.
double geim_error(const GeimModel& model, const Field& f, int M, Product product);

/// max over test fields of ||J_M[u]|| / ||u||; lower-bounds the operator norm.
double lebesgue_empirical(const GeimModel& model, int M,
                          const std::vector<Field>& test_fields);

/// Cached Cholesky factor of the product matrix on a mask, so the exact
/// operator norm can be evaluated for many M without refactoring.
class ProductSpace {
 public:
  ProductSpace(const SubdomainMask& mask, Product product);
  double op_norm(const GeimModel& model, int M) const;
  const SubdomainMask& mask() const { return mask_; }
  Product product() const { return product_; }

 private:
  SubdomainMask mask_;
  Product product_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  std::vector<int> pos_;  // full node index -> mask position, -1 outside
};

/// Exact discrete operator norm of J_M over mask-supported fields
/// (largest singular value in the product metric).
double lebesgue_exact(const GeimModel& model, int M, Product product);

/// 2^{M-1} max_i ||q_i||_{L2(mask)}.
double pessimistic_bound(const GeimModel& model, int M);

/// GEIM model with Dirac sensors at the EIM magic points and the EIM basis;
/// the two interpolation routes then coincide nodewise.
GeimModel geim_from_eim(const EimModel& model);

}  // namespace geim
