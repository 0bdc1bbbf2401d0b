#ifndef GFIT_FITTERS_HPP
#define GFIT_FITTERS_HPP

#include <optional>
#include <span>
#include <string>

#include "gfit/model.hpp"

namespace gfit {

// Log-domain quadratic ln(y) = a + b x + c x^2. A valid Gaussian needs
// c < 0, since c = -1 / (2 sigma^2).
struct QuadraticCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

// Coefficients of the integral-transform linear model
// y = beta1 * phi1 + beta2 * phi2, with beta1 = -1/sigma^2 and
// beta2 = mu/sigma^2.
struct IntegralCoeffs {
  double beta1 = 0.0;
  double beta2 = 0.0;
};

enum class Algorithm {
  Caruana,
  Guo,
  GuoIterative,
  Roonizi,
  Fas,
  FasIterative,
};

std::string algorithm_name(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct FitResult {
  GaussianParams params;
  int iterations_used = 0;      // refinement solves beyond the first
  int points_used = 0;
  int dropped_nonpositive = 0;  // observations <= 0 removed before logs
  Algorithm algorithm = Algorithm::Caruana;
};

struct IterationPolicy {
  int max_iters = 0;       // 0 means run the non-iterative base algorithm
  double rel_tol = 1e-8;   // stop when coeff change (inf-norm, relative)
                           // drops below this
  std::optional<int> refresh_sigma_every;  // FAS only
};

// Recovers (A, mu, sigma) from the log-domain quadratic. Throws
// InvalidCurvature when c >= 0.
GaussianParams params_from_quadratic(const QuadraticCoeffs& coeffs);

// Inverse of params_from_quadratic; handy for constructing exact
// log-domain data.
QuadraticCoeffs quadratic_from_params(const GaussianParams& params);

struct CenterWidth {
  double mean = 0.0;
  double sigma = 0.0;
};

// Recovers (mu, sigma) from the integral-transform coefficients. Throws
// InvalidCurvature when beta1 >= 0.
CenterWidth params_from_integral(const IntegralCoeffs& coeffs);

// Unweighted least squares on ln(y); observations <= 0 are dropped.
FitResult fit_caruana(const Dataset& data);

// Weighted least squares with weights y^2; optionally iterated with
// weights taken from the previous fitted curve.
FitResult fit_guo(const Dataset& data, const IterationPolicy& policy = {});

// Integral-transform fit: cumulative quadrature of y and x*y from the
// first sample, then a 2x2 least-squares solve. No points are dropped.
FitResult fit_roonizi(const Dataset& data);

// Width straight from the data: the rectangle-sum area divided by
// sqrt(2 pi) times the peak observation. No solver involved.
double estimate_sigma_fas(const Dataset& data);

// Fixes sigma via estimate_sigma_fas, then solves the remaining 2x2
// weighted system for amplitude and mean; optionally iterated, with an
// opt-in sigma refresh every `refresh_sigma_every` iterations.
FitResult fit_fas(const Dataset& data, const IterationPolicy& policy = {});

namespace detail {

// One weighted least-squares solve of the log-domain quadratic:
// minimizes sum w_n^2 (ln y_n - a - b x_n - c x_n^2)^2. Unit weights
// give Caruana's system, weights y_n give Guo's.
QuadraticCoeffs solve_log_quadratic(std::span<const double> xs,
                                    std::span<const double> log_ys,
                                    std::span<const double> weights);

// The 2x2 counterpart with the curvature c held fixed; solves for a, b.
QuadraticCoeffs solve_log_linear_fixed_c(std::span<const double> xs,
                                         std::span<const double> log_ys,
                                         std::span<const double> weights,
                                         double c);

}  // namespace detail

}  // namespace gfit

#endif  // GFIT_FITTERS_HPP
