#ifndef GFIT_MODEL_HPP
#define GFIT_MODEL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "gfit/errors.hpp"

namespace gfit {

// The bell curve A * exp(-(x - mu)^2 / (2 sigma^2)).
struct GaussianParams {
  double amplitude = 1.0;  // A > 0, peak height
  double mean = 0.0;       // mu, peak center
  double sigma = 1.0;      // > 0, width
};

double evaluate(const GaussianParams& params, double x);
std::vector<double> evaluate(const GaussianParams& params,
                             std::span<const double> xs);

// Paired observations (x_n, y_n) with strictly increasing x. Immutable
// after construction; the constructor validates.
class Dataset {
 public:
  Dataset(std::vector<double> xs, std::vector<double> ys);

  std::size_t size() const noexcept { return xs_.size(); }
  const std::vector<double>& xs() const noexcept { return xs_; }
  const std::vector<double>& ys() const noexcept { return ys_; }

  // Step size Delta x_n: the forward gap x_{n+1} - x_n, with the last
  // gap replicated so every sample has a width.
  double step(std::size_t n) const;

 private:
  std::vector<double> xs_;
  std::vector<double> ys_;
};

// A synthetic-data recipe: a ground-truth curve sampled on a uniform
// grid spanning [mu - (W/2) sigma, mu + (W/2) sigma] with additive
// i.i.d. zero-mean Gaussian noise of SD noise_sd.
struct Scenario {
  GaussianParams truth;
  int n = 200;               // number of grid points, >= 3
  double width_ratio = 12.0; // W: observation width / sigma
  double noise_sd = 0.0;     // sigma_w, >= 0
  std::uint64_t seed = 0;

  double snr() const { return truth.amplitude / noise_sd; }
};

// Deterministic for a fixed scenario (including seed).
Dataset synthesize(const Scenario& scenario);

}  // namespace gfit

#endif  // GFIT_MODEL_HPP
