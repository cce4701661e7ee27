#include <gtest/gtest.h>

#include <cmath>
#include <set>
#include <thread>

#include "graphdiffuse/absorbers.hpp"
#include "graphdiffuse/closed_form.hpp"
#include "oracles.hpp"

using namespace graphdiffuse;

namespace {

// Tridiagonal operator on n sites with zero values outside.
Eigen::MatrixXd truncated_path(int n, double alpha0) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = 2.0 + alpha0;
    if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -1.0;
  }
  return h;
}

GreenKernel<std::int64_t> matrix_kernel(const Eigen::MatrixXd& g) {
  return [g](const std::int64_t& a, const std::int64_t& b) { return g(a, b); };
}

// G0 - G with G the inverse after adding alpha0*kappa at each site.
Eigen::MatrixXd direct_scattered(const Eigen::MatrixXd& h0, const std::vector<std::int64_t>& sites, double ak) {
  Eigen::MatrixXd h = h0;
  for (auto y : sites) h(y, y) += ak;
  return oracle::inverse(h0) - oracle::inverse(h);
}

}  // namespace

TEST(SingleAbsorber, ZeroStrengthGivesZero) {
  const auto k = infinite_path_kernel(0.3);
  EXPECT_EQ(single_absorber_scattered<std::int64_t>(k, 0, 0.0, 0.3, 2, -3).value, 0.0);
  EXPECT_EQ(multi_absorber_scattered<std::int64_t>(k, {0, 4}, 0.0, 0.3, 2, -3).value, 0.0);
}

TEST(SingleAbsorber, RejectsBadStrength) {
  const auto k = infinite_path_kernel(0.3);
  EXPECT_THROW(single_absorber_scattered<std::int64_t>(k, 0, -1.0, 0.3, 0, 0), DomainError);
  EXPECT_THROW(single_absorber_scattered<std::int64_t>(k, 0, 1.0, 0.0, 0, 0), DomainError);
}

TEST(SingleAbsorber, MatchesRankOneDirectSolve) {
  const double alpha0 = 0.05, kappa = 7.0;
  const Eigen::MatrixXd h0 = truncated_path(200, alpha0);
  const Eigen::MatrixXd g0 = oracle::inverse(h0);
  const Eigen::MatrixXd want = direct_scattered(h0, {77}, alpha0 * kappa);
  const auto k = matrix_kernel(g0);
  for (std::int64_t i : {0, 50, 77, 140})
    for (std::int64_t j : {3, 77, 199})
      EXPECT_NEAR(single_absorber_scattered<std::int64_t>(k, 77, kappa, alpha0, i, j).value, want(i, j), 1e-10);
}

TEST(SingleAbsorber, InfinitePathPrefactor) {
  // On the infinite path G(y,y) = 1 / (r - 1/r).
  const double alpha0 = 0.2, kappa = 3.0;
  const double r = absorption_ratio(alpha0);
  const double gyy = 1.0 / (r - 1.0 / r);
  const auto k = infinite_path_kernel(alpha0);
  const double v = single_absorber_scattered<std::int64_t>(k, 0, kappa, alpha0, -4, 6).value;
  EXPECT_NEAR(v, alpha0 * kappa / (1.0 + alpha0 * kappa * gyy) * gyy * gyy * std::pow(r, -10.0), 1e-14);
}

TEST(MultiAbsorber, OneSiteEqualsSingle) {
  const auto k = infinite_path_kernel(0.4);
  EXPECT_NEAR(multi_absorber_scattered<std::int64_t>(k, {3}, 2.0, 0.4, -1, 8).value,
              single_absorber_scattered<std::int64_t>(k, 3, 2.0, 0.4, -1, 8).value, 1e-15);
}

TEST(MultiAbsorber, RejectsRepeatedOrMissingSites) {
  const auto k = infinite_path_kernel(0.4);
  EXPECT_THROW(multi_absorber_scattered<std::int64_t>(k, {3, 3}, 1.0, 0.4, 0, 0), DomainError);
  EXPECT_THROW(multi_absorber_scattered<std::int64_t>(k, {}, 1.0, 0.4, 0, 0), DomainError);
}

TEST(MultiAbsorber, MatchesDirectSolveOnFiniteHost) {
  const double alpha0 = 0.02;
  const Eigen::MatrixXd h0 = truncated_path(301, alpha0);
  const auto k = matrix_kernel(oracle::inverse(h0));
  for (const std::vector<std::int64_t>& sites : {std::vector<std::int64_t>{100, 180}, std::vector<std::int64_t>{40, 150, 151}})
    for (double kappa : {0.5, 20.0, 5000.0}) {
      const Eigen::MatrixXd want = direct_scattered(h0, sites, alpha0 * kappa);
      for (std::int64_t i : {0, 120, 151, 300})
        for (std::int64_t j : {10, 150, 260})
          EXPECT_NEAR(multi_absorber_scattered(k, sites, kappa, alpha0, i, j).value, want(i, j), 1e-9)
              << sites.size() << " sites, kappa " << kappa;
    }
}

TEST(MultiAbsorber, SymmetricInSourceAndDetector) {
  const auto k = infinite_path_kernel(0.15);
  const std::vector<std::int64_t> sites{-3, 2, 9};
  EXPECT_NEAR(multi_absorber_scattered<std::int64_t>(k, sites, 4.0, 0.15, -7, 5).value,
              multi_absorber_scattered<std::int64_t>(k, sites, 4.0, 0.15, 5, -7).value, 1e-15);
}

TEST(MultiAbsorber, GeometricSeriesWhenConvergent) {
  const double alpha0 = 0.3, kappa = 0.4;
  const auto k = infinite_path_kernel(alpha0);
  const std::vector<std::int64_t> sites{0, 2, 5};
  const ScatteringOperator op = scattering_operator(k, sites, kappa, alpha0);
  ASSERT_TRUE(op.converges);
  Eigen::VectorXd gi(3), gj(3);
  for (int a = 0; a < 3; ++a) {
    gi(a) = k(-4, sites[a]);
    gj(a) = k(sites[a], 7);
  }
  const double ak = alpha0 * kappa;
  double sum = 0.0;
  Eigen::VectorXd v = gj;
  for (int n = 0; n < 200; ++n) {
    sum += std::pow(-ak, n) * gi.dot(v);
    v = op.g_r * v;
  }
  EXPECT_NEAR(multi_absorber_scattered(k, sites, kappa, alpha0, std::int64_t{-4}, std::int64_t{7}).value, ak * sum, 1e-14);
}

TEST(MultiAbsorber, SeriesFlagFollowsStrength) {
  const auto k = infinite_path_kernel(0.3);
  EXPECT_TRUE(multi_absorber_scattered<std::int64_t>(k, {0, 2}, 0.1, 0.3, 0, 0).in_series_region);
  EXPECT_FALSE(multi_absorber_scattered<std::int64_t>(k, {0, 2}, 100.0, 0.3, 0, 0).in_series_region);
}

TEST(MultiAbsorber, ModesInterlaceWithDiagonal) {
  // Eigenvalues of the restricted Green's function bracket its diagonal entries.
  const auto k = infinite_path_kernel(0.25);
  const ScatteringOperator op = scattering_operator<std::int64_t>(k, {0, 1, 3, 8}, 1.0, 0.25);
  for (Eigen::Index a = 0; a < 4; ++a) {
    EXPECT_LE(op.eigvals(0), op.g_r(a, a) + 1e-15);
    EXPECT_GE(op.eigvals(3), op.g_r(a, a) - 1e-15);
  }
  EXPECT_GT(op.eigvals(0), 0.0);
  EXPECT_LT((op.eigvecs.transpose() * op.eigvecs - Eigen::MatrixXd::Identity(4, 4)).norm(), 1e-14);
}

TEST(TwoAbsorberPath, ModeFormulaMatchesGenericAndTruncatedSolve) {
  const double alpha0 = 0.5;
  const int n = 401, c = 200;
  const Eigen::MatrixXd h0 = truncated_path(n, alpha0);
  const auto k = infinite_path_kernel(alpha0);
  for (double kappa : {0.3, 10.0, 1e4}) {
    const Eigen::MatrixXd want = direct_scattered(h0, {c + 2, c + 7}, alpha0 * kappa);
    const TwoAbsorberValue v = two_absorber_infinite_path(alpha0, kappa, 2, 7, -3, 11);
    EXPECT_NEAR(v.value, multi_absorber_scattered<std::int64_t>(k, {2, 7}, kappa, alpha0, -3, 11).value, 1e-14);
    EXPECT_NEAR(v.value, want(c - 3, c + 11), 1e-12);
  }
}

TEST(TwoAbsorberPath, ModeEigenvalues) {
  const double alpha0 = 0.5, r = absorption_ratio(alpha0);
  const double s = std::sinh(std::log(r));
  const TwoAbsorberValue v = two_absorber_infinite_path(alpha0, 1.0, 0, 3, 0, 0);
  EXPECT_NEAR(v.lambda_plus, 1.0 / (2.0 * s) + infinite_path_green(alpha0, 0, 3), 1e-15);
  EXPECT_NEAR(v.lambda_minus, 1.0 / (2.0 * s) - infinite_path_green(alpha0, 0, 3), 1e-15);
  EXPECT_THROW(two_absorber_infinite_path(alpha0, 1.0, 4, 4, 0, 0), DomainError);
}

TEST(TwoAbsorberPath, FarSeparationResidualShrinks) {
  const double alpha0 = 0.1, kappa = 5.0;
  double prev = far_separation_residual(alpha0, kappa, 0, 10, -5, 3);
  for (std::int64_t d : {20, 40}) {
    const double cur = far_separation_residual(alpha0, kappa, 0, d, -5, 3);
    EXPECT_LT(cur, prev) << d;
    prev = cur;
  }
}

TEST(TwoAbsorberLattice, MatchesGenericEigendecomposition) {
  const double alpha0 = 0.5, kappa = 3.0;
  const LatticeGreenCache cache(alpha0);
  const TwoAbsorberValue v = two_absorber_lattice2d(alpha0, kappa, 2, -3, 4, -1, cache);
  const double generic = multi_absorber_scattered<LatticePoint>(lattice2d_kernel(cache), {{0, 2}, {0, -3}}, kappa, alpha0,
                                                                {4, 0}, {-1, 0}).value;
  EXPECT_NEAR(v.value, generic, 1e-13);
  EXPECT_GT(v.lambda_plus, v.lambda_minus);
  EXPECT_THROW(two_absorber_lattice2d(alpha0, kappa, 1, 1, 0, 0, cache), DomainError);
  EXPECT_THROW(two_absorber_lattice2d(0.4, kappa, 1, 2, 0, 0, cache), DomainError);
}

TEST(TwoAbsorberLattice, SmallAbsorptionStrongAbsorbers) {
  const TwoAbsorberValue v = two_absorber_lattice2d(1e-3, 1e3, 3, -4, 5, 7);
  EXPECT_TRUE(std::isfinite(v.value));
  EXPECT_GT(v.value, 0.0);
  EXPECT_LT(v.abs_error, 1e-8);
  EXPECT_FALSE(v.in_series_region);
}

TEST(LatticeCache, ConcurrentReadsAgreeWithSerial) {
  const double alpha0 = 0.3;
  const LatticeGreenCache shared(alpha0);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t)
    pool.emplace_back([&shared, t] {
      for (int m = -6; m <= 6; ++m)
        for (int n = -6; n <= 6; ++n) (void)shared.get((m + t) % 7, n);
    });
  for (auto& th : pool) th.join();
  std::set<std::pair<std::int64_t, std::int64_t>> keys;
  for (int m = -6; m <= 6; ++m)
    for (int n = -6; n <= 6; ++n) {
      const std::int64_t a = std::abs(m), b = std::abs(n);
      keys.insert({std::max(a, b), std::min(a, b)});
      EXPECT_EQ(shared.get(m, n).value, lattice2d_green_estimate(alpha0, m, n).value);
    }
  EXPECT_EQ(shared.size(), keys.size());
}
