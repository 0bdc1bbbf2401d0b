#ifndef GFIT_LINALG_HPP
#define GFIT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "gfit/errors.hpp"

namespace gfit {

// A dense n x n system A x = b for the tiny n (2, 3) the normal
// equations produce. Row-major matrix storage.
struct SmallSystem {
  std::size_t n = 0;
  std::vector<double> matrix;  // n * n, row-major
  std::vector<double> rhs;     // n
};

// Gauss elimination with partial pivoting. Throws SingularSystem when a
// pivot magnitude falls below 1e-12 times the largest row norm.
std::vector<double> solve(SmallSystem system);

}  // namespace gfit

#endif  // GFIT_LINALG_HPP
