#pragma once
#include <Eigen/Dense>
#include <vector>

#include "geim/errors.hpp"

namespace geim {

/// Uniform tensor grid on [x_min,x_max] x [y_min,y_max] with a vertical
/// interface column splitting Omega1 (left) from Omega2 (right).
/// Nodes are stored row-major: node = j*nx + i.
struct Grid {
  int nx = 0, ny = 0;
  double x_min = 0, x_max = 0, y_min = 0, y_max = 0;
  int interface_col = 0;

  double hx() const { return (x_max - x_min) / (nx - 1); }
  double hy() const { return (y_max - y_min) / (ny - 1); }
  double x(int i) const { return x_min + i * hx(); }
  double y(int j) const { return y_min + j * hy(); }
  double interface_x() const { return x(interface_col); }
  int index(int i, int j) const { return j * nx + i; }
  int col(int node) const { return node % nx; }
  int row(int node) const { return node / nx; }
  int size() const { return nx * ny; }
  bool on_boundary(int i, int j) const {
    return i == 0 || i == nx - 1 || j == 0 || j == ny - 1;
  }
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Builds a grid, snapping interface_x to the nearest column. Throws
/// InvalidGeometry if counts < 3 or the interface lands on the boundary.
Grid make_grid(int nx, int ny, double x_min, double x_max, double y_min,
               double y_max, double interface_x);

struct SubdomainMask {
  Grid grid;
  std::vector<int> nodes;  // sorted, unique
};

SubdomainMask full_mask(const Grid& g);
/// Columns [0, interface_col]; owns the interface column for quadrature.
SubdomainMask omega1_mask(const Grid& g);
/// Columns (interface_col, nx); excludes the interface column.
SubdomainMask omega2_mask(const Grid& g);
/// Columns [interface_col, nx); closure of Omega2, used for restrictions
/// that must keep interface values (e.g. to extract a trace later).
SubdomainMask omega2_closed_mask(const Grid& g);
SubdomainMask interface_mask(const Grid& g);
/// Mask from an explicit column range [c0, c1].
SubdomainMask column_mask(const Grid& g, int c0, int c1);

struct Field {
  Grid grid;
  Eigen::VectorXd values;

  Field() = default;
  explicit Field(const Grid& g) : grid(g), values(Eigen::VectorXd::Zero(g.size())) {}
  Field(const Grid& g, Eigen::VectorXd v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size()) throw SizeMismatch("Field: value count != nx*ny");
  }
};

template <class F>
Field field_from(const Grid& g, F&& f) {
  Field out(g);
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) out.values[g.index(i, j)] = f(g.x(i), g.y(j));
  return out;
}

inline void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw GridMismatch("fields live on different grids");
}

}  // namespace geim
