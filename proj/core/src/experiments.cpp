#include "geim/experiments.hpp"

#include <fstream>

#include "geim/io.hpp"

namespace geim {

namespace {

namespace fs = std::filesystem;

/// Tracks files created by a command so a failure leaves no partial output.
class OutputGuard {
 public:
  ~OutputGuard() {
    if (!committed_)
      for (const fs::path& p : paths_) {
        std::error_code ec;
        fs::remove_all(p, ec);
      }
  }
  std::ofstream create(const fs::path& p, const ExperimentConfig& cfg) {
    fs::create_directories(p.parent_path());
    paths_.push_back(p);
    std::ofstream out(p);
    if (!out) throw IoError("cannot open for writing: " + p.string());
    out << "# config=" << cfg.hash_hex() << "\n";
    return out;
  }
  fs::path track(const fs::path& p) {
    paths_.push_back(p);
    return p;
  }
  void commit() { committed_ = true; }

 private:
  std::vector<fs::path> paths_;
  bool committed_ = false;
};

void write_plot_script(OutputGuard& guard, const ExperimentConfig& cfg,
                       const fs::path& path, const std::string& csv,
                       const std::string& title,
                       const std::vector<std::pair<int, std::string>>& columns,
                       bool logy = true) {
  std::ofstream out = guard.create(path, cfg);
  out << "set datafile separator ','\n";
  out << "set key outside\n";
  out << "set title '" << title << "'\n";
  if (logy) out << "set logscale y\n";
  out << "plot ";
  bool first = true;
  for (const auto& [col, name] : columns) {
    if (!first) out << ", \\\n     ";
    out << "'" << csv << "' using 1:" << col << " with linespoints title '" << name
        << "'";
    first = false;
  }
  out << "\n";
}

}  // namespace

ExperimentContext ExperimentContext::build(const ExperimentConfig& cfg) {
  ExperimentContext ctx;
  ctx.cfg = cfg;
  ctx.grid = make_grid(cfg.nx, cfg.ny, cfg.x_min, cfg.x_max, cfg.y_min, cfg.y_max,
                       cfg.interface_x);
  ctx.chi1 = omega1_mask(ctx.grid);
  ctx.o2 = omega2_mask(ctx.grid);
  ctx.o2c = omega2_closed_mask(ctx.grid);
  const std::vector<int> centers =
      default_moment_centers(ctx.grid, ctx.o2, cfg.dict_stride_x, cfg.dict_stride_y);
  ctx.dict = build_moment_dictionary(ctx.grid, ctx.o2, centers, cfg.effective_radius(),
                                     cfg.kernel);
  ctx.snaps = generate_snapshots(cfg.ranges, ctx.grid, ctx.chi1, cfg.threads);
  ctx.training.reserve(ctx.snaps.fields.size());
  for (const Field& f : ctx.snaps.fields)
    ctx.training.push_back(restrict_to(f, ctx.o2c));
  return ctx;
}

ParamPoint ExperimentContext::held_out_param() const {
  auto mid = [](const AxisRange& r) {
    if (r.count == 1) return r.value(0);
    const int i = (r.count - 1) / 2;
    return 0.5 * (r.value(i) + r.value(i + 1));
  };
  if (cfg.held_out == "training") {
    // central training sample
    const ParamRanges& r = cfg.ranges;
    return {r.alpha.value(r.alpha.count / 2), r.beta.value(r.beta.count / 2),
            r.gamma.value(r.gamma.count / 2)};
  }
  return {mid(cfg.ranges.alpha), mid(cfg.ranges.beta), mid(cfg.ranges.gamma)};
}

void cmd_snapshots(const ExperimentConfig& cfg) {
  OutputGuard guard;
  const fs::path dir = fs::path(cfg.out_dir) / "snapshots";
  guard.track(dir);
  ExperimentContext ctx = ExperimentContext::build(cfg);
  save_snapshots(dir, ctx.snaps);
  {
    std::ofstream out = guard.create(fs::path(cfg.out_dir) / "dictionary.csv", cfg);
    out << "id,kind,center_x,center_y,radius\n";
    for (const Sensor& s : ctx.dict.sensors)
      out << s.id << "," << (s.kind == SensorKind::Moment ? "moment" : "dirac") << ","
          << fmt_double(s.cx) << "," << fmt_double(s.cy) << ","
          << fmt_double(s.radius) << "\n";
  }
  guard.commit();
}

void cmd_decay(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  const GeimModel ml2 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::L2, cfg.M_max, cfg.tol);
  const GeimModel mh1 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::H1, cfg.M_max, cfg.tol);

  std::ofstream out = guard.create(fs::path(cfg.out_dir) / "decay.csv", cfg);
  out << "M,worst_err_l2,worst_err_h1\n";
  const int Mmax = std::max(ml2.size(), mh1.size());
  for (int M = 1; M <= Mmax; ++M) {
    double e2 = 0, eh = 0;
    for (const Field& f : ctx.training) {
      if (M <= ml2.size()) e2 = std::max(e2, geim_error(ml2, f, M, Product::L2));
      if (M <= mh1.size()) eh = std::max(eh, geim_error(mh1, f, M, Product::H1));
    }
    out << M << "," << fmt_double(e2) << "," << fmt_double(eh) << "\n";
  }
  write_plot_script(guard, cfg, fs::path(cfg.out_dir) / "decay.gp", "decay.csv",
                    "Worst GEIM error vs M", {{2, "L2"}, {3, "H1"}});
  guard.commit();
}

void cmd_svd(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  for (Product p : {Product::L2, Product::H1}) {
    const SvdResult svd = snapshot_svd(ctx.training, ctx.o2, p);
    const char* tag = p == Product::L2 ? "l2" : "h1";
    std::ofstream out =
        guard.create(fs::path(cfg.out_dir) / (std::string("spectrum_") + tag + ".csv"),
                     cfg);
    out << "index,singular_value\n";
    for (Eigen::Index k = 0; k < svd.singular_values.size(); ++k)
      out << k + 1 << "," << fmt_double(svd.singular_values[k]) << "\n";
  }
  write_plot_script(guard, cfg, fs::path(cfg.out_dir) / "spectrum.gp",
                    "spectrum_l2.csv", "Snapshot SVD spectrum",
                    {{2, "L2 singular values"}});
  guard.commit();
}

void cmd_bestfit(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  const GeimModel ml2 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::L2, cfg.M_max, cfg.tol);
  const GeimModel mh1 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::H1, cfg.M_max, cfg.tol);
  const SvdResult svd2 = snapshot_svd(ctx.training, ctx.o2, Product::L2);
  const SvdResult svdh = snapshot_svd(ctx.training, ctx.o2, Product::H1);

  std::ofstream out = guard.create(fs::path(cfg.out_dir) / "bestfit.csv", cfg);
  out << "M,geim_l2,bestfit_l2,ratio_l2,geim_h1,bestfit_h1,ratio_h1\n";
  const int Mmax = std::min(ml2.size(), mh1.size());
  for (int M = 1; M <= Mmax; ++M) {
    double g2 = 0, b2 = 0, gh = 0, bh = 0;
    for (const Field& f : ctx.training) {
      g2 = std::max(g2, geim_error(ml2, f, M, Product::L2));
      gh = std::max(gh, geim_error(mh1, f, M, Product::H1));
      if (M <= static_cast<int>(svd2.modes.size()))
        b2 = std::max(b2, best_fit_error(svd2, f, M));
      if (M <= static_cast<int>(svdh.modes.size()))
        bh = std::max(bh, best_fit_error(svdh, f, M));
    }
    out << M << "," << fmt_double(g2) << "," << fmt_double(b2) << ","
        << fmt_double(b2 > 0 ? g2 / b2 : 0.0) << "," << fmt_double(gh) << ","
        << fmt_double(bh) << "," << fmt_double(bh > 0 ? gh / bh : 0.0) << "\n";
  }
  write_plot_script(guard, cfg, fs::path(cfg.out_dir) / "bestfit.gp", "bestfit.csv",
                    "GEIM error vs SVD best fit",
                    {{2, "GEIM L2"}, {3, "best fit L2"}, {5, "GEIM H1"},
                     {6, "best fit H1"}});
  guard.commit();
}

void cmd_lebesgue(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  const GeimModel ml2 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::L2, cfg.M_max, cfg.tol);
  const GeimModel mh1 =
      geim_build(ctx.training, ctx.dict, ctx.o2, Product::H1, cfg.M_max, cfg.tol);
  const ProductSpace space2(ctx.o2, Product::L2);
  const ProductSpace spaceh(ctx.o2, Product::H1);

  std::ofstream out = guard.create(fs::path(cfg.out_dir) / "lebesgue.csv", cfg);
  out << "M,lambda_emp_l2,lambda_exact_l2,pessimistic_l2,lambda_emp_h1,"
         "lambda_exact_h1\n";
  const int Mmax = std::min(ml2.size(), mh1.size());
  for (int M = 1; M <= Mmax; ++M) {
    out << M << "," << fmt_double(lebesgue_empirical(ml2, M, ctx.training)) << ","
        << fmt_double(space2.op_norm(ml2, M)) << ","
        << fmt_double(pessimistic_bound(ml2, M)) << ","
        << fmt_double(lebesgue_empirical(mh1, M, ctx.training)) << ","
        << fmt_double(spaceh.op_norm(mh1, M)) << "\n";
  }
  write_plot_script(guard, cfg, fs::path(cfg.out_dir) / "lebesgue.gp", "lebesgue.csv",
                    "Lebesgue constant vs M",
                    {{2, "empirical L2"}, {3, "exact L2"}, {5, "empirical H1"},
                     {6, "exact H1"}});
  guard.commit();
}

void cmd_coupled(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  const GeimModel model = geim_build(ctx.training, ctx.dict, ctx.o2,
                                     cfg.greedy_product(), cfg.M_max, cfg.tol);
  const ParamPoint p = ctx.held_out_param();
  std::vector<int> M_range;
  for (int M = 1; M <= model.size(); ++M) M_range.push_back(M);
  const std::vector<CoupledResult> results =
      coupled_run(model, p, ctx.grid, ctx.chi1, M_range);

  std::ofstream out = guard.create(fs::path(cfg.out_dir) / "coupled.csv", cfg);
  out << "M,err_l2_omega1,err_h1_omega1,err_l2_omega2,err_h1_omega2,trace_err\n";
  for (const CoupledResult& r : results)
    out << r.M << "," << fmt_double(r.err_l2_omega1) << ","
        << fmt_double(r.err_h1_omega1) << "," << fmt_double(r.err_l2_omega2) << ","
        << fmt_double(r.err_h1_omega2) << "," << fmt_double(r.trace_err) << "\n";
  write_plot_script(guard, cfg, fs::path(cfg.out_dir) / "coupled.gp", "coupled.csv",
                    "Coupled reconstruction errors",
                    {{3, "H1 Omega1"}, {5, "H1 Omega2"}});
  guard.commit();
}

void cmd_noise(const ExperimentConfig& cfg) {
  OutputGuard guard;
  ExperimentContext ctx = ExperimentContext::build(cfg);
  const int M = std::min(cfg.M_max, 5);
  const SeriesEnsemble ens =
      build_series_ensemble(ctx.training, ctx.dict, ctx.o2, cfg.P, M, cfg.tol);
  const PoissonSolver solver(ctx.grid);
  const ParamPoint p = ctx.held_out_param();
  const Field truth =
      restrict_to(solver.solve(forcing(p, ctx.grid, ctx.chi1)), ctx.o2c);
  const NoiseModel nm{cfg.epsilon, cfg.seed};
  const VarianceReport rep = variance_study(ens, truth, nm, M, cfg.trials);

  std::ofstream out = guard.create(fs::path(cfg.out_dir) / "noise.csv", cfg);
  out << "P,M,epsilon,trials,empirical_std_single,empirical_std_averaged,"
         "predicted_ratio\n";
  out << rep.P << "," << rep.M << "," << fmt_double(rep.epsilon) << "," << rep.trials
      << "," << fmt_double(rep.std_single[0]) << "," << fmt_double(rep.std_averaged)
      << "," << fmt_double(rep.predicted_ratio) << "\n";

  std::ofstream series = guard.create(fs::path(cfg.out_dir) / "noise_series.csv", cfg);
  series << "series,lambda,empirical_std\n";
  for (int q = 0; q < rep.P; ++q)
    series << q + 1 << "," << fmt_double(ens.lambdas[q]) << ","
           << fmt_double(rep.std_single[q]) << "\n";
  guard.commit();
}

}  // namespace geim
