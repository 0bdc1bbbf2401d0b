#include "gfit/model.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace gfit {

namespace {

void validate(const GaussianParams& params) {
  if (!(params.amplitude > 0.0)) {
    throw InvalidArgument("amplitude must be > 0");
  }
  if (!(params.sigma > 0.0)) {
    throw InvalidArgument("sigma must be > 0");
  }
}

}  // namespace

double evaluate(const GaussianParams& params, double x) {
  validate(params);
  const double z = (x - params.mean) / params.sigma;
  return params.amplitude * std::exp(-0.5 * z * z);
}

std::vector<double> evaluate(const GaussianParams& params,
                             std::span<const double> xs) {
  validate(params);
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    const double z = (x - params.mean) / params.sigma;
    out.push_back(params.amplitude * std::exp(-0.5 * z * z));
  }
  return out;
}

Dataset::Dataset(std::vector<double> xs, std::vector<double> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  if (xs_.size() != ys_.size()) {
    throw InvalidArgument("xs and ys must have the same length");
  }
  if (xs_.size() < 3) {
    throw TooFewPoints("a dataset needs at least 3 points");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i] > xs_[i - 1])) {
      std::ostringstream msg;
      msg << "x values must be strictly increasing (violation at index " << i
          << ": " << xs_[i - 1] << " then " << xs_[i] << ")";
      throw NonIncreasingX(msg.str());
    }
  }
}

double Dataset::step(std::size_t n) const {
  if (n + 1 < xs_.size()) {
    return xs_[n + 1] - xs_[n];
  }
  return xs_.back() - xs_[xs_.size() - 2];
}

Dataset synthesize(const Scenario& scenario) {
  validate(scenario.truth);
  if (scenario.n < 3) {
    throw TooFewPoints("scenario needs n >= 3");
  }
  if (!(scenario.width_ratio > 0.0)) {
    throw InvalidArgument("width_ratio must be > 0");
  }
  if (scenario.noise_sd < 0.0) {
    throw InvalidArgument("noise_sd must be >= 0");
  }

  const double half = 0.5 * scenario.width_ratio * scenario.truth.sigma;
  const double lo = scenario.truth.mean - half;
  const double hi = scenario.truth.mean + half;
  const double dx = (hi - lo) / static_cast<double>(scenario.n - 1);

  std::vector<double> xs(static_cast<std::size_t>(scenario.n));
  for (int i = 0; i < scenario.n; ++i) {
    xs[static_cast<std::size_t>(i)] = lo + dx * static_cast<double>(i);
  }

  std::vector<double> ys = evaluate(scenario.truth, xs);
  if (scenario.noise_sd > 0.0) {
    std::mt19937_64 rng(scenario.seed);
    std::normal_distribution<double> noise(0.0, scenario.noise_sd);
    for (double& y : ys) {
      y += noise(rng);
    }
  }
  return Dataset(std::move(xs), std::move(ys));
}

}  // namespace gfit
