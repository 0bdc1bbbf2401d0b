#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include <doctest.h>

#include "gfit/linalg.hpp"
#include "oracles.hpp"

using namespace gfit;

namespace {

SmallSystem make3(const std::array<double, 9>& m,
                  const std::array<double, 3>& rhs) {
  SmallSystem s;
  s.n = 3;
  s.matrix.assign(m.begin(), m.end());
  s.rhs.assign(rhs.begin(), rhs.end());
  return s;
}

// Random diagonally dominant 3x3 system.
SmallSystem random_system(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> off(-1.0, 1.0);
  std::uniform_real_distribution<double> diag(3.5, 8.0);
  SmallSystem s;
  s.n = 3;
  s.matrix.resize(9);
  s.rhs.resize(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      s.matrix[i * 3 + j] = i == j ? diag(rng) : off(rng);
    }
    s.rhs[i] = 10.0 * off(rng);
  }
  return s;
}

double residual_inf(const SmallSystem& s, const std::vector<double>& x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < s.n; ++i) {
    double acc = -s.rhs[i];
    for (std::size_t j = 0; j < s.n; ++j) {
      acc += s.matrix[i * s.n + j] * x[j];
    }
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

}  // namespace

TEST_CASE("identity system") {
  const auto x = solve(make3({1, 0, 0, 0, 1, 0, 0, 0, 1}, {1, 2, 3}));
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
  CHECK(x[2] == doctest::Approx(3.0));
}

TEST_CASE("diagonal 2x2 system") {
  SmallSystem s;
  s.n = 2;
  s.matrix = {2, 0, 0, 4};
  s.rhs = {2, 8};
  const auto x = solve(s);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(2.0));
}

TEST_CASE("matches the Cramer's-rule oracle on random systems") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const SmallSystem s = random_system(rng);
    std::array<double, 9> m;
    std::array<double, 3> rhs;
    std::copy(s.matrix.begin(), s.matrix.end(), m.begin());
    std::copy(s.rhs.begin(), s.rhs.end(), rhs.begin());
    const auto expected = oracles::cramer3(m, rhs);
    const auto x = solve(s);
    for (int j = 0; j < 3; ++j) {
      CHECK(x[j] ==
            doctest::Approx(expected[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("residual bound on random systems") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const SmallSystem s = random_system(rng);
    const auto x = solve(s);
    double rhs_inf = 0.0;
    for (double v : s.rhs) {
      rhs_inf = std::max(rhs_inf, std::abs(v));
    }
    CHECK(residual_inf(s, x) <= 1e-8 * (1.0 + rhs_inf));
  }
}

TEST_CASE("row permutation leaves the solution unchanged") {
  std::mt19937_64 rng(17);
  std::array<std::array<std::size_t, 3>, 6> perms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  for (int i = 0; i < 500; ++i) {
    const SmallSystem s = random_system(rng);
    const auto base = solve(s);
    const auto& perm = perms[static_cast<std::size_t>(i) % perms.size()];
    SmallSystem p;
    p.n = 3;
    p.matrix.resize(9);
    p.rhs.resize(3);
    for (std::size_t r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < 3; ++c) {
        p.matrix[r * 3 + c] = s.matrix[perm[r] * 3 + c];
      }
      p.rhs[r] = s.rhs[perm[r]];
    }
    const auto permuted = solve(p);
    for (int j = 0; j < 3; ++j) {
      CHECK(permuted[j] == doctest::Approx(base[j]).epsilon(1e-10));
    }
  }
}

TEST_CASE("singular systems are reported") {
  CHECK_THROWS_AS(solve(make3({1, 2, 3, 2, 4, 6, 1, 1, 1}, {1, 2, 3})),
                  SingularSystem);
  SmallSystem zero;
  zero.n = 2;
  zero.matrix = {0, 0, 0, 0};
  zero.rhs = {1, 1};
  CHECK_THROWS_AS(solve(zero), SingularSystem);
}

TEST_CASE("dimension mismatch is rejected") {
  SmallSystem s;
  s.n = 3;
  s.matrix = {1, 2, 3};
  s.rhs = {1, 2, 3};
  CHECK_THROWS_AS(solve(s), InvalidArgument);
}
