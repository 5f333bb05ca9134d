#pragma once
#include <cstdint>
#include <filesystem>
#include <string>

#include "geim/pde.hpp"
#include "geim/sensors.hpp"

namespace geim {

/// One flat key=value config drives every experiment subcommand.
/// Precedence is flag > file > default.
struct ExperimentConfig {
  // grid
  int nx = 65, ny = 33;
  double x_min = 0, x_max = 2, y_min = 0, y_max = 1;
  double interface_x = 0.75;
  // parameter ranges (alpha fastest in snapshot ordering)
  ParamRanges ranges{{-1, 1, 6}, {-1, 1, 6}, {0.5, 1.5, 6}};
  // dictionary
  int dict_stride_x = 2, dict_stride_y = 3;
  double dict_radius = 0;  // 0 = auto: 3 * max(hx, hy)
  KernelShape kernel = KernelShape::Bump;
  // greedy
  int M_max = 15;
  double tol = 1e-12;
  std::string product = "l2";  // greedy norm for single-model commands
  // noise study
  double epsilon = 1e-3;
  int P = 16;
  int trials = 10000;
  uint64_t seed = 12345;
  // coupled study
  std::string held_out = "midpoint";  // midpoint | training
  // execution
  int threads = 1;
  std::string out_dir = "out";

  static ExperimentConfig load(const std::filesystem::path& path);
  void set(const std::string& key, const std::string& value);

  /// Sorted key=value dump; the basis for hashing and round-tripping.
  std::string canonical() const;
  uint64_t hash() const;  // FNV-1a over canonical()
  std::string hash_hex() const;

  double effective_radius() const;
  Product greedy_product() const;
};

}  // namespace geim
