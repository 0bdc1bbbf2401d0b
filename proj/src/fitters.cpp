#include "gfit/fitters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gfit/linalg.hpp"

namespace gfit {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

struct PositiveSubset {
  std::vector<double> xs;
  std::vector<double> log_ys;
  int dropped = 0;
};

// Only observations above zero enter the log-domain systems.
PositiveSubset positive_subset(const Dataset& data) {
  PositiveSubset out;
  out.xs.reserve(data.size());
  out.log_ys.reserve(data.size());
  for (std::size_t n = 0; n < data.size(); ++n) {
    if (data.ys()[n] > 0.0) {
      out.xs.push_back(data.xs()[n]);
      out.log_ys.push_back(std::log(data.ys()[n]));
    } else {
      ++out.dropped;
    }
  }
  if (out.xs.size() < 3) {
    throw TooFewPoints("fewer than 3 observations above zero");
  }
  return out;
}

double inf_norm_rel_change(const QuadraticCoeffs& prev,
                           const QuadraticCoeffs& next) {
  const double change = std::max({std::abs(next.a - prev.a),
                                  std::abs(next.b - prev.b),
                                  std::abs(next.c - prev.c)});
  const double scale = std::max(
      {std::abs(next.a), std::abs(next.b), std::abs(next.c), 1e-30});
  return change / scale;
}

// Fitted curve values exp(a + b x + c x^2) used as the next weights.
std::vector<double> fitted_weights(const QuadraticCoeffs& coeffs,
                                   std::span<const double> xs) {
  std::vector<double> w;
  w.reserve(xs.size());
  for (double x : xs) {
    w.push_back(std::exp(coeffs.a + x * (coeffs.b + x * coeffs.c)));
  }
  return w;
}

}  // namespace

std::string algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Caruana:
      return "caruana";
    case Algorithm::Guo:
      return "guo";
    case Algorithm::GuoIterative:
      return "guo-iter";
    case Algorithm::Roonizi:
      return "roonizi";
    case Algorithm::Fas:
      return "fas";
    case Algorithm::FasIterative:
      return "fas-iter";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "caruana") return Algorithm::Caruana;
  if (name == "guo") return Algorithm::Guo;
  if (name == "guo-iter") return Algorithm::GuoIterative;
  if (name == "roonizi") return Algorithm::Roonizi;
  if (name == "fas") return Algorithm::Fas;
  if (name == "fas-iter") return Algorithm::FasIterative;
  return std::nullopt;
}

GaussianParams params_from_quadratic(const QuadraticCoeffs& coeffs) {
  if (!(coeffs.c < 0.0)) {
    throw InvalidCurvature("log-domain curvature c must be negative");
  }
  GaussianParams params;
  params.amplitude = std::exp(coeffs.a - coeffs.b * coeffs.b / (4.0 * coeffs.c));
  params.mean = -coeffs.b / (2.0 * coeffs.c);
  params.sigma = std::sqrt(-1.0 / (2.0 * coeffs.c));
  return params;
}

QuadraticCoeffs quadratic_from_params(const GaussianParams& params) {
  if (!(params.sigma > 0.0) || !(params.amplitude > 0.0)) {
    throw InvalidArgument("amplitude and sigma must be positive");
  }
  const double inv2s2 = 1.0 / (2.0 * params.sigma * params.sigma);
  QuadraticCoeffs coeffs;
  coeffs.a = std::log(params.amplitude) - params.mean * params.mean * inv2s2;
  coeffs.b = 2.0 * params.mean * inv2s2;
  coeffs.c = -inv2s2;
  return coeffs;
}

CenterWidth params_from_integral(const IntegralCoeffs& coeffs) {
  if (!(coeffs.beta1 < 0.0)) {
    throw InvalidCurvature("beta1 must be negative");
  }
  CenterWidth out;
  out.sigma = std::sqrt(-1.0 / coeffs.beta1);
  out.mean = -coeffs.beta2 / coeffs.beta1;
  return out;
}

namespace detail {

QuadraticCoeffs solve_log_quadratic(std::span<const double> xs,
                                    std::span<const double> log_ys,
                                    std::span<const double> weights) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  double r0 = 0, r1 = 0, r2 = 0;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const double w2 = weights[n] * weights[n];
    const double x = xs[n];
    const double wl = w2 * log_ys[n];
    s0 += w2;
    s1 += w2 * x;
    s2 += w2 * x * x;
    s3 += w2 * x * x * x;
    s4 += w2 * x * x * x * x;
    r0 += wl;
    r1 += wl * x;
    r2 += wl * x * x;
  }
  SmallSystem system;
  system.n = 3;
  system.matrix = {s0, s1, s2, s1, s2, s3, s2, s3, s4};
  system.rhs = {r0, r1, r2};
  const std::vector<double> sol = solve(std::move(system));
  return QuadraticCoeffs{sol[0], sol[1], sol[2]};
}

QuadraticCoeffs solve_log_linear_fixed_c(std::span<const double> xs,
                                         std::span<const double> log_ys,
                                         std::span<const double> weights,
                                         double c) {
  double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
  double r0 = 0, r1 = 0;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const double w2 = weights[n] * weights[n];
    const double x = xs[n];
    const double wl = w2 * log_ys[n];
    s0 += w2;
    s1 += w2 * x;
    s2 += w2 * x * x;
    s3 += w2 * x * x * x;
    r0 += wl;
    r1 += wl * x;
  }
  SmallSystem system;
  system.n = 2;
  system.matrix = {s0, s1, s1, s2};
  system.rhs = {r0 - c * s2, r1 - c * s3};
  const std::vector<double> sol = solve(std::move(system));
  return QuadraticCoeffs{sol[0], sol[1], c};
}

}  // namespace detail

FitResult fit_caruana(const Dataset& data) {
  const PositiveSubset subset = positive_subset(data);
  const std::vector<double> unit(subset.xs.size(), 1.0);
  const QuadraticCoeffs coeffs =
      detail::solve_log_quadratic(subset.xs, subset.log_ys, unit);
  FitResult result;
  result.params = params_from_quadratic(coeffs);
  result.points_used = static_cast<int>(subset.xs.size());
  result.dropped_nonpositive = subset.dropped;
  result.algorithm = Algorithm::Caruana;
  return result;
}

FitResult fit_guo(const Dataset& data, const IterationPolicy& policy) {
  const PositiveSubset subset = positive_subset(data);

  // Iteration 0 weighs by the raw observations themselves.
  std::vector<double> weights(subset.xs.size());
  for (std::size_t n = 0; n < weights.size(); ++n) {
    weights[n] = std::exp(subset.log_ys[n]);
  }

  QuadraticCoeffs coeffs =
      detail::solve_log_quadratic(subset.xs, subset.log_ys, weights);
  int iterations = 0;
  for (int k = 1; k <= policy.max_iters; ++k) {
    weights = fitted_weights(coeffs, subset.xs);
    const QuadraticCoeffs next =
        detail::solve_log_quadratic(subset.xs, subset.log_ys, weights);
    const double change = inf_norm_rel_change(coeffs, next);
    coeffs = next;
    iterations = k;
    if (change < policy.rel_tol) {
      break;
    }
  }

  FitResult result;
  result.params = params_from_quadratic(coeffs);
  result.iterations_used = iterations;
  result.points_used = static_cast<int>(subset.xs.size());
  result.dropped_nonpositive = subset.dropped;
  result.algorithm =
      policy.max_iters == 0 ? Algorithm::Guo : Algorithm::GuoIterative;
  return result;
}

FitResult fit_roonizi(const Dataset& data) {
  const std::size_t n = data.size();
  const std::vector<double>& xs = data.xs();
  const std::vector<double>& ys = data.ys();

  // Cumulative trapezoid integrals of x*y and y from the first sample.
  std::vector<double> phi1(n, 0.0);
  std::vector<double> phi2(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    const double dx = xs[i] - xs[i - 1];
    phi1[i] = phi1[i - 1] +
              0.5 * dx * (xs[i] * ys[i] + xs[i - 1] * ys[i - 1]);
    phi2[i] = phi2[i - 1] + 0.5 * dx * (ys[i] + ys[i - 1]);
  }

  double g11 = 0, g12 = 0, g22 = 0, r1 = 0, r2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    g11 += phi1[i] * phi1[i];
    g12 += phi1[i] * phi2[i];
    g22 += phi2[i] * phi2[i];
    r1 += phi1[i] * ys[i];
    r2 += phi2[i] * ys[i];
  }
  SmallSystem system;
  system.n = 2;
  system.matrix = {g11, g12, g12, g22};
  system.rhs = {r1, r2};
  const std::vector<double> sol = solve(std::move(system));
  const CenterWidth cw = params_from_integral({sol[0], sol[1]});

  // Least-squares amplitude for the fixed shape g = exp(-(x-mu)^2/(2s^2)):
  // argmin_A sum (y - A g)^2.
  double num = 0.0;
  double den = 0.0;
  const double inv2s2 = 1.0 / (2.0 * cw.sigma * cw.sigma);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = xs[i] - cw.mean;
    const double g = std::exp(-d * d * inv2s2);
    num += ys[i] * g;
    den += g * g;
  }
  if (!(den > 1e-300)) {
    throw SingularSystem("amplitude denominator vanishes; fit far from data");
  }
  const double amplitude = num / den;
  if (!(amplitude > 0.0)) {
    throw SingularSystem("non-positive amplitude estimate");
  }

  FitResult result;
  result.params = GaussianParams{amplitude, cw.mean, cw.sigma};
  result.points_used = static_cast<int>(n);
  result.dropped_nonpositive = 0;
  result.algorithm = Algorithm::Roonizi;
  return result;
}

double estimate_sigma_fas(const Dataset& data) {
  const double peak = *std::max_element(data.ys().begin(), data.ys().end());
  if (!(peak > 0.0)) {
    throw NonPositivePeak("peak observation must be positive");
  }
  double area = 0.0;
  for (std::size_t n = 0; n < data.size(); ++n) {
    area += data.step(n) * data.ys()[n];
  }
  if (!(area > 0.0)) {
    throw NonPositivePeak("rectangle-sum area must be positive");
  }
  return area / (kSqrt2Pi * peak);
}

FitResult fit_fas(const Dataset& data, const IterationPolicy& policy) {
  double sigma = estimate_sigma_fas(data);
  double c = -1.0 / (2.0 * sigma * sigma);

  const PositiveSubset subset = positive_subset(data);
  std::vector<double> weights(subset.xs.size());
  for (std::size_t n = 0; n < weights.size(); ++n) {
    weights[n] = std::exp(subset.log_ys[n]);
  }

  // The sum-of-rectangles area is a property of the data alone; keep it
  // for optional sigma refreshes.
  double area = 0.0;
  for (std::size_t n = 0; n < data.size(); ++n) {
    area += data.step(n) * data.ys()[n];
  }

  QuadraticCoeffs coeffs =
      detail::solve_log_linear_fixed_c(subset.xs, subset.log_ys, weights, c);
  int iterations = 0;
  for (int k = 1; k <= policy.max_iters; ++k) {
    if (policy.refresh_sigma_every && k % *policy.refresh_sigma_every == 0) {
      // Replace the peak observation by the currently fitted amplitude.
      const double amplitude = params_from_quadratic(coeffs).amplitude;
      sigma = area / (kSqrt2Pi * amplitude);
      if (!(sigma > 0.0)) {
        throw InvalidCurvature("sigma refresh produced a non-positive width");
      }
      c = -1.0 / (2.0 * sigma * sigma);
    }
    weights = fitted_weights(coeffs, subset.xs);
    const QuadraticCoeffs next = detail::solve_log_linear_fixed_c(
        subset.xs, subset.log_ys, weights, c);
    const double change = inf_norm_rel_change(coeffs, next);
    coeffs = next;
    iterations = k;
    if (change < policy.rel_tol) {
      break;
    }
  }

  FitResult result;
  result.params = params_from_quadratic(coeffs);
  result.iterations_used = iterations;
  result.points_used = static_cast<int>(subset.xs.size());
  result.dropped_nonpositive = subset.dropped;
  result.algorithm =
      policy.max_iters == 0 ? Algorithm::Fas : Algorithm::FasIterative;
  return result;
}

}  // namespace gfit
