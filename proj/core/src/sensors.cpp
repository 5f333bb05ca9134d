#include "geim/sensors.hpp"

#include <cmath>

namespace geim {

namespace {

double kernel_value(KernelShape shape, double r, double R) {
  if (r >= R) return 0.0;
  if (shape == KernelShape::Box) return 1.0;
  const double s = r / R;
  return std::exp(-1.0 / (1.0 - s * s));
}

}  // namespace

Dictionary build_moment_dictionary(const Grid& grid, const SubdomainMask& mask,
                                   const std::vector<int>& centers, double radius,
                                   KernelShape shape) {
  if (radius <= 0) throw InvalidGeometry("moment sensor radius must be > 0");
  require_same_grid(grid, mask.grid);
  std::vector<char> in_mask(grid.size(), 0);
  for (int k : mask.nodes) in_mask[k] = 1;
  const Eigen::VectorXd w = quad_weights(grid);

  Dictionary dict{SensorKind::Moment, mask, {}};
  dict.sensors.reserve(centers.size());
  for (size_t c = 0; c < centers.size(); ++c) {
    const int ci = grid.col(centers[c]), cj = grid.row(centers[c]);
    const double cx = grid.x(ci), cy = grid.y(cj);
    Sensor s;
    s.kind = SensorKind::Moment;
    s.id = static_cast<int>(c);
    s.grid = grid;
    s.cx = cx;
    s.cy = cy;
    s.radius = radius;

    const int di = static_cast<int>(std::ceil(radius / grid.hx()));
    const int dj = static_cast<int>(std::ceil(radius / grid.hy()));
    double norm2 = 0;
    std::vector<double> kvals;
    for (int j = std::max(0, cj - dj); j <= std::min(grid.ny - 1, cj + dj); ++j)
      for (int i = std::max(0, ci - di); i <= std::min(grid.nx - 1, ci + di); ++i) {
        const int k = grid.index(i, j);
        if (!in_mask[k]) continue;
        const double r = std::hypot(grid.x(i) - cx, grid.y(j) - cy);
        const double kv = kernel_value(shape, r, radius);
        if (kv == 0.0) continue;
        s.nodes.push_back(k);
        kvals.push_back(kv);
        norm2 += w[k] * kv * kv;
      }
    if (s.nodes.empty() || norm2 <= 0)
      throw EmptySupport("moment sensor disc covers no mask node");
    const double scale = 1.0 / std::sqrt(norm2);
    s.coeffs.resize(s.nodes.size());
    for (size_t k = 0; k < s.nodes.size(); ++k)
      s.coeffs[k] = w[s.nodes[k]] * kvals[k] * scale;
    dict.sensors.push_back(std::move(s));
  }
  return dict;
}

Dictionary build_dirac_dictionary(const Grid& grid, const SubdomainMask& mask) {
  require_same_grid(grid, mask.grid);
  if (mask.nodes.empty()) throw EmptySupport("dirac dictionary over empty mask");
  Dictionary dict{SensorKind::Dirac, mask, {}};
  dict.sensors.reserve(mask.nodes.size());
  for (size_t c = 0; c < mask.nodes.size(); ++c) {
    Sensor s;
    s.kind = SensorKind::Dirac;
    s.id = static_cast<int>(c);
    s.grid = grid;
    s.cx = grid.x(grid.col(mask.nodes[c]));
    s.cy = grid.y(grid.row(mask.nodes[c]));
    s.nodes = {mask.nodes[c]};
    s.coeffs = {1.0};
    dict.sensors.push_back(std::move(s));
  }
  return dict;
}

std::vector<int> default_moment_centers(const Grid& grid, const SubdomainMask& mask,
                                        int stride_x, int stride_y) {
  if (stride_x < 1 || stride_y < 1) throw InvalidGeometry("strides must be >= 1");
  std::vector<char> in_mask(grid.size(), 0);
  for (int k : mask.nodes) in_mask[k] = 1;
  // interior of the mask: node and its 4 grid neighbours all in the mask,
  // and not on the grid boundary
  int i0 = grid.nx, j0 = grid.ny;
  std::vector<int> interior;
  for (int k : mask.nodes) {
    const int i = grid.col(k), j = grid.row(k);
    if (grid.on_boundary(i, j)) continue;
    if (!in_mask[grid.index(i - 1, j)] || !in_mask[grid.index(i + 1, j)] ||
        !in_mask[grid.index(i, j - 1)] || !in_mask[grid.index(i, j + 1)])
      continue;
    i0 = std::min(i0, i);
    j0 = std::min(j0, j);
    interior.push_back(k);
  }
  std::vector<int> centers;
  for (int k : interior) {
    const int i = grid.col(k), j = grid.row(k);
    if ((i - i0) % stride_x == 0 && (j - j0) % stride_y == 0) centers.push_back(k);
  }
  return centers;
}

double apply(const Sensor& s, const Field& f) {
  require_same_grid(s.grid, f.grid);
  double acc = 0;
  for (size_t k = 0; k < s.nodes.size(); ++k) acc += s.coeffs[k] * f.values[s.nodes[k]];
  return acc;
}

}  // namespace geim
