#pragma once
#include <filesystem>
#include <vector>

#include "geim/config.hpp"
#include "geim/coupling.hpp"
#include "geim/geim.hpp"
#include "geim/noise.hpp"
#include "geim/pde.hpp"
#include "geim/svd.hpp"

namespace geim {

/// Everything the experiment subcommands share: grid, masks, dictionary,
/// snapshot solves, and the Omega2 restrictions used as training fields.
struct ExperimentContext {
  ExperimentConfig cfg;
  Grid grid;
  SubdomainMask chi1;  // Omega1, support of the forcing modulation
  SubdomainMask o2;    // Omega2 without the interface column (norms, sensors)
  SubdomainMask o2c;   // Omega2 closure (restrictions keep interface values)
  Dictionary dict;
  SnapshotSet snaps;            // full-domain solutions
  std::vector<Field> training;  // restrictions to the Omega2 closure

  static ExperimentContext build(const ExperimentConfig& cfg);
  ParamPoint held_out_param() const;
};

/// Subcommand bodies. Each writes CSV (and a gnuplot script where a plot is
/// meaningful) under cfg.out_dir; partial outputs are removed on failure.
void cmd_snapshots(const ExperimentConfig& cfg);
void cmd_decay(const ExperimentConfig& cfg);
void cmd_svd(const ExperimentConfig& cfg);
void cmd_bestfit(const ExperimentConfig& cfg);
void cmd_lebesgue(const ExperimentConfig& cfg);
void cmd_coupled(const ExperimentConfig& cfg);
void cmd_noise(const ExperimentConfig& cfg);

}  // namespace geim
