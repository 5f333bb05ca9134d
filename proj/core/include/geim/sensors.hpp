#pragma once
#include <vector>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"

namespace geim {

enum class SensorKind { Moment, Dirac };
enum class KernelShape { Bump, Box };

/// A continuous linear form. Moment sensors hold a compactly supported,
/// L2-normalized kernel stored as sparse quadrature-weighted coefficients,
/// so apply() is a sparse dot product. Dirac sensors evaluate one node.
struct Sensor {
  SensorKind kind = SensorKind::Dirac;
  int id = -1;
  Grid grid;
  double cx = 0, cy = 0, radius = 0;  // moment only
  std::vector<int> nodes;
  std::vector<double> coeffs;
};

struct Dictionary {
  SensorKind kind = SensorKind::Dirac;
  SubdomainMask subdomain;
  std::vector<Sensor> sensors;
  int size() const { return static_cast<int>(sensors.size()); }
};

/// One sensor per center node; kernel evaluated on disc(center, radius),
/// zeroed outside the mask, scaled so the L2 dual norm is 1.
Dictionary build_moment_dictionary(const Grid& grid, const SubdomainMask& mask,
                                   const std::vector<int>& centers, double radius,
                                   KernelShape shape);

/// One Dirac mass per mask node.
Dictionary build_dirac_dictionary(const Grid& grid, const SubdomainMask& mask);

/// Every (stride_x, stride_y)-th interior node of the mask, a regular
/// center layout for the default dictionary.
std::vector<int> default_moment_centers(const Grid& grid, const SubdomainMask& mask,
                                        int stride_x, int stride_y);

double apply(const Sensor& s, const Field& f);

}  // namespace geim
