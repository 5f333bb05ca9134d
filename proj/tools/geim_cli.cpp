// Experiment harness: greedy interpolation studies on the parametrized
// Laplace snapshot manifold, one subcommand per study, CSV outputs.
#include <CLI11.hpp>
#include <iostream>

#include "geim/experiments.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  long long seed = -1;
  int threads = -1;
  int M_max = -1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "Config file (key=value lines)");
  cmd->add_option("--out", opts.out_dir, "Output directory");
  cmd->add_option("--seed", opts.seed, "Random seed override");
  cmd->add_option("--threads", opts.threads, "Worker threads");
  cmd->add_option("--M-max", opts.M_max, "Greedy dimension cap");
}

geim::ExperimentConfig resolve(const CommonOpts& opts) {
  geim::ExperimentConfig cfg;
  if (!opts.config_path.empty())
    cfg = geim::ExperimentConfig::load(opts.config_path);
  // flag > file > default
  if (!opts.out_dir.empty()) cfg.out_dir = opts.out_dir;
  if (opts.seed >= 0) cfg.seed = static_cast<uint64_t>(opts.seed);
  if (opts.threads > 0) cfg.threads = opts.threads;
  if (opts.M_max > 0) cfg.M_max = opts.M_max;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GEIM/EIM experiment harness"};
  app.require_subcommand(1);

  struct Entry {
    const char* name;
    const char* help;
    void (*run)(const geim::ExperimentConfig&);
    CommonOpts opts;
  };
  Entry entries[] = {
      {"snapshots", "Generate and persist the snapshot set", geim::cmd_snapshots, {}},
      {"decay", "Worst GEIM error vs M (L2 and H1)", geim::cmd_decay, {}},
      {"svd", "Snapshot SVD spectra in L2 and H1", geim::cmd_svd, {}},
      {"bestfit", "GEIM error vs SVD best-fit error", geim::cmd_bestfit, {}},
      {"lebesgue", "Empirical and exact Lebesgue constants", geim::cmd_lebesgue, {}},
      {"coupled", "Reconstruction on Omega2 + solve on Omega1", geim::cmd_coupled, {}},
      {"noise", "Noisy-measurement variance study", geim::cmd_noise, {}},
  };
  for (Entry& e : entries) add_common(app.add_subcommand(e.name, e.help), e.opts);

  CLI11_PARSE(app, argc, argv);

  for (Entry& e : entries) {
    if (!app.got_subcommand(e.name)) continue;
    try {
      e.run(resolve(e.opts));
    } catch (const geim::Error& err) {
      std::cerr << "{\"error\":\"" << err.type() << "\",\"message\":\"" << err.what()
                << "\"}\n";
      return 1;
    } catch (const std::exception& err) {
      std::cerr << "{\"error\":\"Exception\",\"message\":\"" << err.what() << "\"}\n";
      return 1;
    }
  }
  return 0;
}
