#include "gfit/bench.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace gfit {

namespace {

// splitmix64 finalizer; decorrelates structured (base, axis, trial)
// triples into well-mixed seeds.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct TrialOutcome {
  double are_pct = std::numeric_limits<double>::quiet_NaN();  // NaN: failed
};

Scenario scenario_for(const SweepConfig& config, double axis_value,
                      std::uint64_t seed) {
  Scenario s;
  s.truth = config.truth;
  s.n = config.fixed_n;
  s.width_ratio = config.fixed_w;
  double snr = config.fixed_snr;
  switch (config.axis) {
    case SweepAxis::Snr:
      snr = axis_value;
      break;
    case SweepAxis::W:
      s.width_ratio = axis_value;
      break;
    case SweepAxis::N:
      s.n = static_cast<int>(std::llround(axis_value));
      break;
  }
  s.noise_sd = config.truth.amplitude / snr;
  s.seed = seed;
  return s;
}

double fit_sigma(Algorithm algorithm, const Dataset& data,
                 const IterationPolicy& policy) {
  switch (algorithm) {
    case Algorithm::Caruana:
      return fit_caruana(data).params.sigma;
    case Algorithm::Guo:
      return fit_guo(data).params.sigma;
    case Algorithm::GuoIterative:
      return fit_guo(data, policy).params.sigma;
    case Algorithm::Roonizi:
      return fit_roonizi(data).params.sigma;
    case Algorithm::Fas:
      return fit_fas(data).params.sigma;
    case Algorithm::FasIterative:
      return fit_fas(data, policy).params.sigma;
  }
  throw InvalidArgument("unknown algorithm");
}

}  // namespace

double are_percent(double estimate, double truth) {
  if (!(truth > 0.0)) {
    throw InvalidArgument("truth must be > 0");
  }
  return 100.0 * std::abs(estimate - truth) / truth;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t axis_index,
                         std::size_t trial_index) {
  return mix(mix(mix(base_seed) ^ axis_index) ^ trial_index);
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  if (config.trials < 1) {
    throw InvalidArgument("trials must be >= 1");
  }
  if (config.axis_values.empty()) {
    throw InvalidArgument("axis_values must be non-empty");
  }
  for (std::size_t i = 1; i < config.axis_values.size(); ++i) {
    if (!(config.axis_values[i] > config.axis_values[i - 1])) {
      throw InvalidArgument("axis_values must be strictly increasing");
    }
  }

  const std::size_t n_algos = config.algorithms.size();
  const std::size_t trials = static_cast<std::size_t>(config.trials);
  std::vector<SweepRow> rows;
  rows.reserve(config.axis_values.size());

  for (std::size_t ai = 0; ai < config.axis_values.size(); ++ai) {
    const double axis_value = config.axis_values[ai];

    // Per-trial outcomes land in a preallocated table, so the reduction
    // below is sequential and identical for any thread count.
    std::vector<TrialOutcome> outcomes(trials * n_algos);
    auto run_range = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        const Scenario scenario = scenario_for(
            config, axis_value, trial_seed(config.base_seed, ai, t));
        const Dataset data = synthesize(scenario);
        for (std::size_t a = 0; a < n_algos; ++a) {
          try {
            const double sigma =
                fit_sigma(config.algorithms[a], data, config.policy);
            outcomes[t * n_algos + a].are_pct =
                are_percent(sigma, scenario.truth.sigma);
          } catch (const Error&) {
            // failed trial; stays NaN
          }
        }
      }
    };

    const int n_threads = std::max(1, config.threads);
    if (n_threads == 1 || trials < 2) {
      run_range(0, trials);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (trials + n_threads - 1) / n_threads;
      for (int w = 0; w < n_threads; ++w) {
        const std::size_t begin = std::min(trials, chunk * w);
        const std::size_t end = std::min(trials, begin + chunk);
        if (begin < end) {
          pool.emplace_back(run_range, begin, end);
        }
      }
      for (std::thread& th : pool) {
        th.join();
      }
    }

    SweepRow row;
    row.axis_value = axis_value;
    row.stats.resize(n_algos);
    for (std::size_t a = 0; a < n_algos; ++a) {
      double sum = 0.0;
      double worst = 0.0;
      std::int64_t ok = 0;
      for (std::size_t t = 0; t < trials; ++t) {
        const double are = outcomes[t * n_algos + a].are_pct;
        if (std::isnan(are)) {
          ++row.stats[a].failures;
        } else {
          sum += are;
          worst = std::max(worst, are);
          ++ok;
        }
      }
      row.stats[a].mean_are_pct = ok > 0 ? sum / static_cast<double>(ok) : 0.0;
      row.stats[a].worst_are_pct = worst;
    }

    double snr = config.fixed_snr;
    double w = config.fixed_w;
    int n = config.fixed_n;
    switch (config.axis) {
      case SweepAxis::Snr:
        snr = axis_value;
        break;
      case SweepAxis::W:
        w = axis_value;
        break;
      case SweepAxis::N:
        n = static_cast<int>(std::llround(axis_value));
        break;
    }
    row.theoretical_worst_pct =
        100.0 * predict_relative_error(snr, w, n).alpha_total;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gfit
