#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"
#include "oracles.hpp"

using namespace cusp;
using std::numbers::pi;

// mpmath, 30 digits
constexpr double kLambdaPi6 = 0.507470803204826812;
constexpr double kLambdaPi4 = 0.457982797088609508;
constexpr double kLambdaPi3 = 0.338313868803217875;

TEST(Lobachevsky, KnownValues) {
  EXPECT_NEAR(lobachevsky(pi / 6), kLambdaPi6, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 4), kLambdaPi4, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 3), kLambdaPi3, 1e-15);
  EXPECT_NEAR(lobachevsky(pi / 2), 0.0, 1e-15);
  EXPECT_EQ(lobachevsky(0.0), 0.0);
}

TEST(Lobachevsky, QuadratureOracle) {
  for (int i = 1; i <= 200; ++i) {
    const double theta = (pi / 2) * i / 200.0;
    EXPECT_NEAR(lobachevsky(theta), oracle::lobachevsky_quadrature(theta), 1e-12) << theta;
  }
}

TEST(Lobachevsky, OracleAgreesWithTable) {
  EXPECT_NEAR(oracle::lobachevsky_quadrature(pi / 6), kLambdaPi6, 1e-13);
  EXPECT_NEAR(oracle::lobachevsky_quadrature(pi / 4), kLambdaPi4, 1e-13);
}

TEST(Lobachevsky, PeriodicAndOdd) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> theta(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = theta(rng);
    EXPECT_NEAR(lobachevsky(t + pi), lobachevsky(t), 1e-13);
    EXPECT_NEAR(lobachevsky(-t), -lobachevsky(t), 1e-15);
  }
}

TEST(Lobachevsky, DuplicationIdentity) {
  // Λ(2θ) = 2Λ(θ) + 2Λ(θ + π/2)
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> theta(-4.0, 4.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = theta(rng);
    EXPECT_NEAR(lobachevsky(2 * t), 2 * lobachevsky(t) + 2 * lobachevsky(t + pi / 2), 1e-13);
  }
}

TEST(Lobachevsky, NonFiniteRejected) {
  EXPECT_THROW(lobachevsky(std::nan("")), DomainError);
  EXPECT_THROW(lobachevsky(INFINITY), DomainError);
}

TEST(Clausen, MaximumAtPiOverThree) {
  // Cl₂(π/3) = 1.0149416064096536..., the largest value of Cl₂.
  EXPECT_NEAR(clausen2(pi / 3), 1.01494160640965362502, 1e-14);
  EXPECT_NEAR(clausen2(pi), 0.0, 1e-15);
}

TEST(Bounds, Values) {
  const BoundSet& b = bounds();
  EXPECT_NEAR(b.v_tet, 1.01494160640965362502, 1e-14);
  EXPECT_NEAR(b.v_oct, 3.66386237670887606022, 1e-14);
  EXPECT_NEAR(b.boroczky, 0.853276088314080804, 1e-14);
  EXPECT_NEAR(b.dcc_upper, 3.12628615691928092, 1e-14);
  EXPECT_EQ(b.volume_density_upper, b.v_oct);
  EXPECT_NEAR(b.boroczky, std::sqrt(3.0) / (2 * b.v_tet), 1e-15);
}

TEST(Bounds, CachedInstance) { EXPECT_EQ(&bounds(), &bounds()); }

TEST(CuspVolumeBound, Formula) {
  EXPECT_NEAR(acfgk_cusp_volume_bound(3), 4.5 * 3 * (2.0 / 3) * (2.0 / 3), 1e-12);
  EXPECT_NEAR(acfgk_cusp_volume_bound(10), 4.5 * 10 * 0.81, 1e-12);
  EXPECT_THROW(acfgk_cusp_volume_bound(2), DomainError);
}
