#ifndef GFIT_BENCH_HPP
#define GFIT_BENCH_HPP

#include <cstdint>
#include <vector>

#include "gfit/errmodel.hpp"
#include "gfit/fitters.hpp"
#include "gfit/model.hpp"

namespace gfit {

enum class SweepAxis { Snr, W, N };

// A Monte Carlo accuracy sweep: one of (snr, W, N) varies, the other
// two stay fixed, and each axis point runs `trials` independent noisy
// scenarios per algorithm.
struct SweepConfig {
  GaussianParams truth{1.0, 10.0, 2.0};
  SweepAxis axis = SweepAxis::W;
  std::vector<double> axis_values;
  double fixed_snr = 25.0;
  double fixed_w = 12.0;
  int fixed_n = 200;
  int trials = 10000;
  std::vector<Algorithm> algorithms{Algorithm::Caruana, Algorithm::Guo,
                                    Algorithm::Roonizi, Algorithm::Fas};
  IterationPolicy policy;
  std::uint64_t base_seed = 0;
  int threads = 1;  // result is identical for any thread count
};

struct AlgorithmStats {
  double mean_are_pct = 0.0;
  double worst_are_pct = 0.0;
  std::int64_t failures = 0;  // trials where the fitter threw, excluded
                              // from the mean and worst
};

struct SweepRow {
  double axis_value = 0.0;
  std::vector<AlgorithmStats> stats;  // parallel to SweepConfig::algorithms
  double theoretical_worst_pct = 0.0; // 100 * alpha with k1=2, k2=3
};

// 100 * |estimate - truth| / truth.
double are_percent(double estimate, double truth);

std::vector<SweepRow> run_sweep(const SweepConfig& config);

// Per-trial seed derivation; exposed so replication scripts can rebuild
// an individual trial's dataset.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t axis_index,
                         std::size_t trial_index);

}  // namespace gfit

#endif  // GFIT_BENCH_HPP
