#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "steinernet/errors.hpp"
#include "steinernet/families.hpp"
#include "steinernet/homotopy.hpp"
#include "steinernet/symmetric.hpp"

namespace sn = steinernet;

namespace {

const double kEndLength = oracle::kSqrt3 / 2 * (2 + oracle::kSqrt2 + oracle::kSqrt3);

}  // namespace

TEST(Homotopy, StartIsThsEquality) {
  const auto net = sn::homotopy_network({0.25, -1.0});
  EXPECT_NEAR(sn::network_length(net), 4.5, 1e-12);
  EXPECT_NEAR(sn::lattice_volume(net.lattice()), 4.5, 1e-12);
  EXPECT_EQ(sn::classify_quotient(net.graph()), sn::FamilyKind::Ths);
  EXPECT_LT(oracle::max_balancing(net), 1e-12);
}

TEST(Homotopy, EndIsSteinerK4) {
  for (double xi : {0.1, 0.25, 0.4}) {
    const auto net = sn::homotopy_network({xi, 1.0});
    EXPECT_NEAR(sn::network_length(net), kEndLength, 1e-12);
    EXPECT_EQ(sn::classify_quotient(net.graph()), sn::FamilyKind::Srs);
    EXPECT_LT(oracle::max_balancing(net), 1e-12);
    const double ratio = sn::length_ratio(net);
    EXPECT_LT(ratio, oracle::kThsRatio);
    EXPECT_GT(ratio, oracle::kSrsRatio);
  }
  // The endpoint decimal: 4.4567957, not 4.4569935.
  EXPECT_NEAR(kEndLength, 4.456795678960466, 1e-14);
}

TEST(Homotopy, MidpointHasDegreeFourVertex) {
  const auto net = sn::homotopy_network({0.3, 0.0});
  EXPECT_EQ(net.graph().vertex_count(), 3);
  int four = 0;
  for (int v = 0; v < 3; ++v) four += net.graph().degree(v) == 4;
  EXPECT_EQ(four, 1);
  EXPECT_NEAR(sn::network_length(net), 4.5, 1e-12);
}

TEST(Homotopy, LatticeIsConstant) {
  const Eigen::MatrixXd g = sn::homotopy_lattice().generators();
  for (double xi : {0.1, 0.25, 0.4}) {
    for (double t : {-1.0, -0.5, 0.0, 0.3, 1.0}) {
      EXPECT_EQ(sn::homotopy_network({xi, t}).lattice().generators(), g);
    }
  }
  EXPECT_NEAR(g(1, 0), oracle::kSqrt3, 0.0);
  EXPECT_NEAR(g(2, 1), -oracle::kSqrt3, 0.0);
}

TEST(Homotopy, ProfileMonotoneWithExactEnds) {
  const auto profile = sn::homotopy_length_profile(0.25, 9);
  ASSERT_EQ(profile.size(), 9u);
  EXPECT_EQ(profile.front().t, -1.0);
  EXPECT_EQ(profile[4].t, 0.0);
  EXPECT_EQ(profile.back().t, 1.0);
  EXPECT_NEAR(profile.front().length, 4.5, 1e-12);
  EXPECT_NEAR(profile.back().length, kEndLength, 1e-12);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) EXPECT_LE(profile[i].length, profile[i - 1].length + 1e-12);
    if (profile[i].t <= 0) EXPECT_NEAR(profile[i].length, 4.5, 1e-12);
    EXPECT_NEAR(profile[i].volume, 4.5, 1e-12);
  }
}

TEST(Homotopy, SegmentLengthsAreConvexOnPositiveSide) {
  const int steps = 64;
  for (double xi : {0.1, 0.4}) {
    std::vector<sn::PeriodicNetwork> nets;
    for (int i = 0; i <= steps; ++i) nets.push_back(sn::homotopy_network({xi, 1e-9 + (1 - 1e-9) * i / steps}));
    for (int e = 0; e < 6; ++e) {
      for (int i = 1; i < steps; ++i) {
        const double mid = nets[i].edge_length(e);
        const double avg = 0.5 * (nets[i - 1].edge_length(e) + nets[i + 1].edge_length(e));
        EXPECT_LE(mid, avg + 1e-12) << "edge " << e << " step " << i;
      }
    }
  }
}

TEST(Homotopy, RejectsOutOfRange) {
  EXPECT_THROW(sn::homotopy_network({0.0, 0.5}), sn::Error);
  EXPECT_THROW(sn::homotopy_network({0.5, 0.5}), sn::Error);
  EXPECT_THROW(sn::homotopy_network({0.25, 1.5}), sn::Error);
  EXPECT_THROW(sn::homotopy_length_profile(0.25, 4), sn::Error);
  EXPECT_THROW(sn::homotopy_length_profile(0.25, 1), sn::Error);
}
