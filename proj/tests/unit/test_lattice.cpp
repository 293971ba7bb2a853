#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "steinernet/errors.hpp"
#include "steinernet/lattice.hpp"

namespace sn = steinernet;

TEST(Lattice, IdentityHasUnitVolume) {
  EXPECT_DOUBLE_EQ(sn::lattice_volume(sn::Lattice::identity(3)), 1.0);
  EXPECT_DOUBLE_EQ(sn::lattice_volume(sn::Lattice::identity(2)), 1.0);
}

TEST(Lattice, HomotopyLatticeVolumeIsNineHalves) {
  Eigen::Matrix3d g;
  g.col(0) << 0, oracle::kSqrt3, 0;
  g.col(1) << 0, 0, -oracle::kSqrt3;
  g.col(2) << 1.5, oracle::kSqrt3 / 2, oracle::kSqrt3 / 2;
  const sn::Lattice lattice(g);
  EXPECT_NEAR(sn::lattice_volume(lattice), 4.5, 1e-14);
  EXPECT_NEAR(std::abs(oracle::cofactor_det(g)), 4.5, 1e-14);
}

TEST(Lattice, VolumeScalesWithPowerOfDimension) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> c(0.01, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 2;
    Eigen::MatrixXd g = Eigen::MatrixXd::Random(n, n) + 2.0 * Eigen::MatrixXd::Identity(n, n);
    const sn::Lattice lattice(g);
    const double s = c(rng);
    EXPECT_LT(oracle::relative_error(sn::lattice_volume(lattice.scaled(s)),
                                     std::pow(s, n) * sn::lattice_volume(lattice)),
              1e-12);
  }
}

TEST(Lattice, DeterminantMatchesCofactorOracle) {
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::MatrixXd g = Eigen::MatrixXd::Random(3, 3);
    if (std::abs(oracle::cofactor_det(g)) < 1e-3) continue;
    EXPECT_LT(oracle::relative_error(sn::lattice_volume(sn::Lattice(g)), std::abs(oracle::cofactor_det(g))), 1e-12);
  }
}

TEST(Lattice, RejectsDegenerateGenerators) {
  Eigen::Matrix3d g;
  g << 1, 2, 3, 4, 5, 6, 7, 8, 9;  // rank 2
  try {
    sn::Lattice bad(g);
    FAIL() << "expected DegenerateLattice";
  } catch (const sn::Error& e) {
    EXPECT_EQ(e.code(), sn::ErrorCode::DegenerateLattice);
  }
  EXPECT_THROW(sn::Lattice(Eigen::MatrixXd::Zero(2, 2)), sn::Error);
  EXPECT_THROW(sn::Lattice(Eigen::MatrixXd::Ones(2, 3)), sn::Error);
}

TEST(Lattice, PointIsIntegerCombination) {
  Eigen::Matrix2d g;
  g << 1, 0.5, 0, 2;
  const sn::Lattice lattice(g);
  const Eigen::Vector2i s(2, -1);
  const Eigen::VectorXd p = lattice.point(s);
  EXPECT_DOUBLE_EQ(p[0], 1.5);
  EXPECT_DOUBLE_EQ(p[1], -2.0);
}
