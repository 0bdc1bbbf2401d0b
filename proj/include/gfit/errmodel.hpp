#ifndef GFIT_ERRMODEL_HPP
#define GFIT_ERRMODEL_HPP

#include "gfit/errors.hpp"

namespace gfit {

// First-order relative-error prediction for the area-ratio width
// estimate, split into its numerator and denominator contributions.
struct ErrorBreakdown {
  double alpha_numerator = 0.0;
  double alpha_denominator = 0.0;
  double alpha_total = 0.0;
  double k1 = 2.0;  // 2 covers the 95.5% confidence interval
  double k2 = 3.0;  // worst-case peak-noise constant
};

ErrorBreakdown predict_relative_error(double snr, double width_ratio, int n,
                                      double k1 = 2.0, double k2 = 3.0);

}  // namespace gfit

#endif  // GFIT_ERRMODEL_HPP
