#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "steinernet/errors.hpp"
#include "steinernet/families.hpp"
#include "steinernet/symmetric.hpp"

namespace sn = steinernet;

TEST(ElementarySymmetric, Values) {
  EXPECT_EQ(sn::elementary_symmetric(2, Eigen::Vector3d(1, 2, 3)), 11.0);
  EXPECT_EQ(sn::elementary_symmetric(0, Eigen::Vector3d(4, 5, 6)), 1.0);
  EXPECT_EQ(sn::elementary_symmetric(4, Eigen::Vector4d(1, 1, 1, 1)), 1.0);
  EXPECT_EQ(sn::elementary_symmetric(3, Eigen::Vector4d(1, 1, 1, 1)), 4.0);
  EXPECT_THROW(sn::elementary_symmetric(4, Eigen::Vector3d(1, 1, 1)), sn::Error);
}

TEST(ElementarySymmetric, MatchesSubsetEnumeration) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 2000; ++trial) {
    const int m = 1 + trial % 8;
    const Eigen::VectorXd x = oracle::uniform_vector(rng, m, 0.0, 3.0);
    for (int k = 0; k <= m; ++k) {
      EXPECT_LT(oracle::relative_error(sn::elementary_symmetric(k, x), oracle::elementary_symmetric(k, x)), 1e-13);
    }
  }
}

TEST(ElementarySymmetric, LargeInputUsesRecurrence) {
  const Eigen::VectorXd x = Eigen::VectorXd::Constant(40, 1.0);
  EXPECT_NEAR(sn::elementary_symmetric(20, x), oracle::binomial(40, 20), 1e-3);
}

TEST(Maclaurin, GapValues) {
  EXPECT_EQ(sn::maclaurin_gap(2, Eigen::Vector3d(1, 1, 1)), 0.0);
  EXPECT_NEAR(sn::maclaurin_gap(2, Eigen::Vector3d(1, 2, 3)), 1.0, 1e-14);
  EXPECT_EQ(sn::maclaurin_gap(3, Eigen::Vector4d(1, 1, 1, 1)), 0.0);
  EXPECT_THROW(sn::maclaurin_gap(2, Eigen::Vector3d(1, -1, 1)), sn::Error);
  EXPECT_THROW(sn::maclaurin_gap(1, Eigen::Vector3d(1, 1, 1)), sn::Error);
}

TEST(Maclaurin, GapIsNonNegativeAndCharacterizesEquality) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int draw = 0; draw < 100000; ++draw) {
    const int m = 3 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(m - 1));
    Eigen::VectorXd x(m);
    for (int i = 0; i < m; ++i) x[i] = u(rng);
    const double gap = sn::maclaurin_gap(k, x);
    EXPECT_GE(gap, -1e-12);
    if (gap < 1e-10) EXPECT_LT(x.maxCoeff() - x.minCoeff(), 1e-4);
  }
}

TEST(Maclaurin, EqualityDetector) {
  EXPECT_TRUE(sn::maclaurin_equality(3, Eigen::VectorXd::Constant(6, 0.7)));
  EXPECT_TRUE(sn::maclaurin_equality(2, Eigen::Vector3d(1, 1, 1 + 1e-9)));
  EXPECT_FALSE(sn::maclaurin_equality(2, Eigen::Vector3d(1, 1, 1 + 1e-4)));
  // Sparse small-scale input: the absolute gap is tiny but the entries are far apart.
  Eigen::VectorXd sparse = Eigen::VectorXd::Zero(8);
  sparse[0] = 0.4;
  EXPECT_LT(sn::maclaurin_gap(8, sparse), 1e-10);
  EXPECT_FALSE(sn::maclaurin_equality(8, sparse));
}

TEST(Lagrange, ThsEqualityPoint) {
  Eigen::Matrix<double, 5, 1> z;
  z << 2.0 / 9, 2.0 / 9, 2.0 / 9, 2.0 / 9, 1.0 / 9;
  const auto r = sn::ths_lagrange_residual(z);
  EXPECT_LT(r.residual, 1e-14);
  EXPECT_NEAR(r.multiplier, r.gradient[0], 1e-15);
  EXPECT_NEAR(r.multiplier, 4.0 / 27.0, 1e-15);
  const auto scaled = sn::ths_lagrange_residual(3.0 * z);
  EXPECT_LT(scaled.residual, 1e-13);
  EXPECT_NEAR(scaled.multiplier, 9.0 * r.multiplier, 1e-13);
}

TEST(Lagrange, ThsAsymmetricPointHasResidual) {
  Eigen::Matrix<double, 5, 1> z;
  z << 0.1, 0.3, 0.2, 0.2, 0.2;
  EXPECT_GT(sn::ths_lagrange_residual(z).residual, 1e-3);
  z[0] = 0.0;
  EXPECT_THROW(sn::ths_lagrange_residual(z), sn::Error);
}

TEST(Lagrange, SrsEqualityPoint) {
  const auto r = sn::srs_lagrange_residual(sn::Vector6d::Constant(1.0 / 6));
  EXPECT_LT(r.residual, 1e-14);
  EXPECT_NEAR(r.multiplier, oracle::kSqrt2 / 9, 1e-15);
  EXPECT_LT(sn::srs_lagrange_residual(sn::Vector6d::Ones()).residual, 1e-14);
  sn::Vector6d x;
  x << 0.1, 0.2, 0.15, 0.3, 0.1, 0.15;  // x1 x4 != x3 x6
  EXPECT_GT(sn::srs_lagrange_residual(x).residual, 1e-3);
}

TEST(Lagrange, ResidualZeroSetIsScaleInvariant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const sn::Vector6d x = oracle::uniform_vector(rng, 6, 0.1, 1.0);
    const double c = 0.1 + 5.0 * (trial % 10) / 10.0;
    const double a = sn::srs_lagrange_residual(x).residual;
    const double b = sn::srs_lagrange_residual(sn::Vector6d(c * x)).residual;
    EXPECT_NEAR(b, c * c * a, 1e-12 * (1 + b));
  }
}

TEST(Lagrange, GradientsMatchFiniteDifferences) {
  std::mt19937_64 rng(4);
  auto ths = [](const Eigen::VectorXd& z) { return sn::ths_reduced_volume(z); };
  auto srs = [](const Eigen::VectorXd& x) { return sn::srs_volume_formula(x); };
  auto hex = [](const Eigen::VectorXd& x) { return sn::hex_area_formula(x); };
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::VectorXd z = oracle::uniform_vector(rng, 5, 0.01, 1.0);
    const Eigen::VectorXd x = oracle::uniform_vector(rng, 6, 0.01, 1.0);
    const Eigen::VectorXd h = oracle::uniform_vector(rng, 3, 0.01, 1.0);
    const Eigen::VectorXd gz = sn::ths_reduced_gradient(z);
    const Eigen::VectorXd gx = sn::srs_volume_gradient(x);
    const Eigen::VectorXd gh = sn::hex_area_gradient(h);
    EXPECT_LT((gz - oracle::central_gradient(ths, z, 1e-6)).norm() / gz.norm(), 1e-6);
    EXPECT_LT((gx - oracle::central_gradient(srs, x, 1e-6)).norm() / gx.norm(), 1e-6);
    EXPECT_LT((gh - oracle::central_gradient(hex, h, 1e-6)).norm() / gh.norm(), 1e-6);
  }
}

TEST(Lagrange, ReducedThsMatchesFullVolume) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const sn::Vector6d x = oracle::uniform_vector(rng, 6, 0.01, 2.0);
    Eigen::Matrix<double, 5, 1> z;
    z << x[0], x[1], x[2], x[3], x[4] + x[5];
    EXPECT_LT(oracle::relative_error(sn::ths_reduced_volume(z), sn::ths_volume_formula(x, std::numbers::pi / 2)),
              1e-14);
  }
}

TEST(Ratio, FamilyEqualityCases) {
  sn::Vector6d ths;
  ths << 1, 1, 1, 1, 0.2, 0.3;
  EXPECT_LT(oracle::relative_error(sn::length_ratio(sn::construct_srs({sn::Vector6d::Ones(), sn::Chirality::Right})),
                                   oracle::kSrsRatio),
            1e-12);
  EXPECT_LT(oracle::relative_error(sn::length_ratio(sn::construct_ths({ths, std::numbers::pi / 2})), oracle::kThsRatio),
            1e-12);
  EXPECT_LT(oracle::relative_error(sn::length_ratio(sn::construct_hexagonal({Eigen::Vector3d::Ones()})),
                                   oracle::kHexRatio),
            1e-12);
  EXPECT_DOUBLE_EQ(sn::kSrsRatioBound, oracle::kSrsRatio);
  EXPECT_DOUBLE_EQ(sn::kThsRatioBound, oracle::kThsRatio);
  EXPECT_DOUBLE_EQ(sn::kHexRatioBound, oracle::kHexRatio);
}
