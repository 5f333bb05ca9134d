#pragma once
#include <vector>

#include "geim/geim.hpp"
#include "geim/rng.hpp"

namespace geim {

struct NoiseModel {
  double epsilon = 0;  // per-sensor noise standard deviation
  uint64_t seed = 0;
};

/// apply(sensor, field) + epsilon * z with z from the counter-based stream
/// keyed by (seed, sensor id, draw_index).
double noisy_measure(const Sensor& sensor, const Field& field, const NoiseModel& nm,
                     uint64_t draw_index);

/// P GEIM models over pairwise-disjoint sensor subsets, with exact Lebesgue
/// constants and the harmonic-mean weight lambda.
struct SeriesEnsemble {
  std::vector<GeimModel> models;
  std::vector<double> lambdas;  // Lambda^p via lebesgue_exact at dimension M
  double lambda_bar = 0;        // lambda^-1 = (1/P) sum 1/Lambda^p
  int M = 0;
  int P() const { return static_cast<int>(models.size()); }
};

/// Runs geim_build P times, removing previously selected sensors from the
/// dictionary each round.
SeriesEnsemble build_series_ensemble(const std::vector<Field>& snapshots,
                                     const Dictionary& dict, const SubdomainMask& mask,
                                     int P, int M, double tol);

/// (lambda/P) sum_p J_M^p[noisy truth] / Lambda^p; weights sum to 1.
Field averaged_reconstruction(const SeriesEnsemble& ens, const Field& truth,
                              const NoiseModel& nm, int M, uint64_t trial = 0);

struct VarianceReport {
  int P = 0, M = 0, trials = 0;
  double epsilon = 0;
  double std_averaged = 0;            // rms L2 deviation of the averaged estimator
  std::vector<double> std_single;     // rms L2 deviation per series
  double predicted_ratio = 0;         // lambda / (Lambda^1 sqrt(P))
  double empirical_ratio = 0;         // std_averaged / std_single[0]
  double predicted_std_averaged = 0;  // (lambda/sqrt(P)) * std_single[0]/Lambda^1
  bool condition_holds = false;       // max_p Lambda^p < sqrt(P)
};

/// Monte-Carlo deviation statistics of the averaged estimator against the
/// single-series reconstructions, around their noiseless values.
VarianceReport variance_study(const SeriesEnsemble& ens, const Field& truth,
                              const NoiseModel& nm, int M, int trials);

}  // namespace geim
