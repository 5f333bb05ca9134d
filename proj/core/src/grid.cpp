#include "geim/grid.hpp"

#include <cmath>

namespace geim {

Grid make_grid(int nx, int ny, double x_min, double x_max, double y_min,
               double y_max, double interface_x) {
  if (nx < 3 || ny < 3) throw InvalidGeometry("node counts must be >= 3");
  if (!(x_max > x_min) || !(y_max > y_min))
    throw InvalidGeometry("bounds must have positive extent");
  Grid g;
  g.nx = nx;
  g.ny = ny;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  const double hx = g.hx();
  const int c = static_cast<int>(std::lround((interface_x - x_min) / hx));
  if (std::abs(g.x(std::min(std::max(c, 0), nx - 1)) - interface_x) > hx / 2 + 1e-12 * hx)
    throw InvalidGeometry("interface_x does not snap to a grid column");
  if (c <= 0 || c >= nx - 1)
    throw InvalidGeometry("interface column must be strictly interior");
  g.interface_col = c;
  return g;
}

SubdomainMask column_mask(const Grid& g, int c0, int c1) {
  SubdomainMask m{g, {}};
  m.nodes.reserve(static_cast<size_t>(c1 - c0) * g.ny);
  for (int j = 0; j < g.ny; ++j)
    for (int i = c0; i < c1; ++i) m.nodes.push_back(g.index(i, j));
  std::sort(m.nodes.begin(), m.nodes.end());
  return m;
}

SubdomainMask full_mask(const Grid& g) { return column_mask(g, 0, g.nx); }

SubdomainMask omega1_mask(const Grid& g) {
  return column_mask(g, 0, g.interface_col + 1);
}

SubdomainMask omega2_mask(const Grid& g) {
  return column_mask(g, g.interface_col + 1, g.nx);
}

SubdomainMask omega2_closed_mask(const Grid& g) {
  return column_mask(g, g.interface_col, g.nx);
}

SubdomainMask interface_mask(const Grid& g) {
  return column_mask(g, g.interface_col, g.interface_col + 1);
}

}  // namespace geim
