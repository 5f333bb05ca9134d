#pragma once
#include <vector>

#include "geim/field_ops.hpp"
#include "geim/grid.hpp"
#include "geim/rng.hpp"

namespace geim::test {

inline Grid unit_grid(int n = 17) { return make_grid(n, n, 0, 1, 0, 1, 0.5); }

inline Grid default_grid() { return make_grid(65, 33, 0, 2, 0, 1, 0.75); }

/// Deterministic pseudo-random field, one value per node.
inline Field random_field(const Grid& g, uint64_t seed) {
  Field f(g);
  for (int k = 0; k < g.size(); ++k)
    f.values[k] = rng::standard_normal(seed, 7u, static_cast<uint64_t>(k));
  return f;
}

inline Field random_masked_field(const SubdomainMask& mask, uint64_t seed) {
  return restrict_to(random_field(mask.grid, seed), mask);
}

}  // namespace geim::test
