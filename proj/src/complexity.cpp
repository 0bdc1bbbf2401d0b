#include "gfit/complexity.hpp"

namespace gfit {

OpCount op_counts(CountedAlgorithm algorithm, std::int64_t n,
                  const CostModel& model) {
  if (n < 1) {
    throw InvalidArgument("n must be >= 1");
  }
  switch (algorithm) {
    case CountedAlgorithm::Guo:
      return {n * (model.a_ln + 8) + 3, n * (model.m_ln + 11) + 17};
    case CountedAlgorithm::Roonizi:
      // 0.5 N^2 + 9.5 N == N (N + 19) / 2, integral for every N.
      return {n * n + 8 * n + n * model.a_exp - 5,
              n * (n + 19) / 2 + n * model.m_exp + 9};
    case CountedAlgorithm::Fas:
      return {n * (model.a_ln + 8) - 3, n * (model.m_ln + 10) + 12};
  }
  throw InvalidArgument("unknown algorithm");
}

OpCount gauss_elimination_cost(std::int64_t n) {
  if (n < 1) {
    throw InvalidArgument("n must be >= 1");
  }
  return {(2 * n * n * n + 3 * n * n - 5 * n) / 6,
          (n * n * n + 3 * n * n - n) / 3};
}

}  // namespace gfit
