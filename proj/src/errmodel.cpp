#include "gfit/errmodel.hpp"

#include <cmath>
#include <numbers>

namespace gfit {

ErrorBreakdown predict_relative_error(double snr, double width_ratio, int n,
                                      double k1, double k2) {
  if (!(snr > 0.0) || !(width_ratio > 0.0) || n < 1 || !(k1 > 0.0) ||
      !(k2 > 0.0)) {
    throw InvalidArgument("all error-model arguments must be positive");
  }
  ErrorBreakdown out;
  out.k1 = k1;
  out.k2 = k2;
  out.alpha_numerator =
      k1 * width_ratio /
      (snr * std::sqrt(2.0 * std::numbers::pi * static_cast<double>(n)));
  out.alpha_denominator = k2 / snr;
  out.alpha_total = out.alpha_numerator + out.alpha_denominator;
  return out;
}

}  // namespace gfit
