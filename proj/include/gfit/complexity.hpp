#ifndef GFIT_COMPLEXITY_HPP
#define GFIT_COMPLEXITY_HPP

#include <cstdint>

#include "gfit/errors.hpp"

namespace gfit {

// Per-call arithmetic cost of the transcendental primitives that the
// operation-count formulas leave symbolic.
struct CostModel {
  std::int64_t a_ln = 0;   // additions per natural log
  std::int64_t m_ln = 0;   // multiplications per natural log
  std::int64_t a_exp = 0;  // additions per natural exponential
  std::int64_t m_exp = 0;  // multiplications per natural exponential
};

struct OpCount {
  std::int64_t additions = 0;
  std::int64_t multiplications = 0;
};

enum class CountedAlgorithm { Guo, Roonizi, Fas };

// Closed-form operation totals for one full fit of N observations.
// Subtractions and divisions count as additions and multiplications.
OpCount op_counts(CountedAlgorithm algorithm, std::int64_t n,
                  const CostModel& model = {});

// Cost of solving an n x n system by Gauss elimination.
OpCount gauss_elimination_cost(std::int64_t n);

}  // namespace gfit

#endif  // GFIT_COMPLEXITY_HPP
