#include "gfit/linalg.hpp"

#include <cmath>
#include <utility>

namespace gfit {

std::vector<double> solve(SmallSystem system) {
  const std::size_t n = system.n;
  if (n == 0 || system.matrix.size() != n * n || system.rhs.size() != n) {
    throw InvalidArgument("inconsistent system dimensions");
  }
  std::vector<double>& a = system.matrix;
  std::vector<double>& b = system.rhs;

  double max_row_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      row += std::abs(a[i * n + j]);
    }
    max_row_norm = std::max(max_row_norm, row);
  }
  const double pivot_tol = 1e-12 * max_row_norm;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row) {
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col])) {
        pivot = row;
      }
    }
    if (!(std::abs(a[pivot * n + col]) > pivot_tol)) {
      throw SingularSystem("pivot below tolerance; observations degenerate");
    }
    if (pivot != col) {
      for (std::size_t j = col; j < n; ++j) {
        std::swap(a[col * n + j], a[pivot * n + j]);
      }
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t row = col + 1; row < n; ++row) {
      const double factor = a[row * n + col] / a[col * n + col];
      a[row * n + col] = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) {
        a[row * n + j] -= factor * a[col * n + j];
      }
      b[row] -= factor * b[col];
    }
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    double acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      acc -= a[i * n + j] * x[j];
    }
    x[i] = acc / a[i * n + i];
  }
  return x;
}

}  // namespace gfit
