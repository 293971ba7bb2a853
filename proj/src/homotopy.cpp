#include "steinernet/homotopy.hpp"

#include <cmath>
#include <numbers>

#include "steinernet/errors.hpp"
#include "steinernet/families.hpp"

namespace steinernet {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;

Eigen::Vector3d p0_fixed() { return {-0.5, -kSqrt3 / 2, 0.0}; }

QuotientGraph merged_graph() {
  auto z = [] { return Eigen::VectorXi(Eigen::Vector3i(0, 0, 0)); };
  return QuotientGraph(3, 3,
                       {{0, 1, z(), "e1"},
                        {1, 0, Eigen::Vector3i(1, 0, 0), "e2"},
                        {1, 2, z(), "e3"},
                        {1, 2, Eigen::Vector3i(0, 1, 0), "e4"},
                        {2, 0, Eigen::Vector3i(0, 0, 1), "e6"}});
}

/// K4 chart; labels follow the srs numbering (e_i and e_{i+3} disjoint).
QuotientGraph k4_graph() {
  auto z = [] { return Eigen::VectorXi(Eigen::Vector3i(0, 0, 0)); };
  return QuotientGraph(3, 4,
                       {{0, 1, z(), "e1"},
                        {2, 0, Eigen::Vector3i(1, 0, 0), "e2"},
                        {3, 0, Eigen::Vector3i(0, 0, 1), "e3"},
                        {2, 3, z(), "e4"},
                        {1, 3, Eigen::Vector3i(0, 1, 0), "e5"},
                        {1, 2, z(), "e6"}});
}

Eigen::Matrix<double, 3, 4> merged_start_vertices() {
  Eigen::Matrix<double, 3, 4> v;
  v.col(0) = p0_fixed();
  v.col(1) = Eigen::Vector3d::Zero();
  v.col(2) = Eigen::Vector3d::Zero();
  v.col(3) = Eigen::Vector3d(0.5, 0.0, kSqrt3 / 2);
  return v;
}

}  // namespace

Lattice homotopy_lattice() {
  Eigen::Matrix3d g;
  g.col(0) << 0.0, kSqrt3, 0.0;
  g.col(1) << 0.0, 0.0, -kSqrt3;
  g.col(2) << 1.5, kSqrt3 / 2, kSqrt3 / 2;
  return Lattice(g);
}

Eigen::Matrix<double, 3, 4> homotopy_endpoint_vertices() {
  const double a = (kSqrt3 - 2.0) / 4.0;
  const double b = kSqrt3 / 8.0 * (kSqrt2 - 2.0);
  Eigen::Matrix<double, 3, 4> v;
  v.col(0) = p0_fixed();
  v.col(1) << a, b, b;
  v.col(2) << a, -b, -b;
  v.col(3) << (kSqrt3 - 1.0) / 2.0, 0.0, kSqrt3 / 2;
  return v;
}

PeriodicNetwork homotopy_network(const HomotopyParams& p) {
  if (!(p.xi > 0.0 && p.xi < 0.5)) {
    throw Error(ErrorCode::InvalidParameter, "xi must lie in (0, 1/2)");
  }
  if (!(p.t >= -1.0 && p.t <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, "t must lie in [-1, 1]");
  }
  if (p.t < 0.0) {
    const double x5 = -p.t * p.xi;
    Eigen::MatrixXd x(3, 4);
    x.col(0) = p0_fixed();
    x.col(1) = Eigen::Vector3d::Zero();
    x.col(2) = Eigen::Vector3d(x5, 0.0, 0.0);
    x.col(3) = Eigen::Vector3d(x5 + 0.5, 0.0, kSqrt3 / 2);
    return PeriodicNetwork(ths_quotient_graph(), std::move(x), homotopy_lattice());
  }
  const auto start = merged_start_vertices();
  if (p.t == 0.0) {
    Eigen::MatrixXd x(3, 3);
    x.col(0) = start.col(0);
    x.col(1) = start.col(1);
    x.col(2) = start.col(3);
    return PeriodicNetwork(merged_graph(), std::move(x), homotopy_lattice());
  }
  const Eigen::MatrixXd x = (1.0 - p.t) * start + p.t * homotopy_endpoint_vertices();
  return PeriodicNetwork(k4_graph(), x, homotopy_lattice());
}

std::vector<ProfileSample> homotopy_length_profile(double xi, int samples) {
  if (samples < 3 || samples % 2 == 0) {
    throw Error(ErrorCode::InvalidParameter, "samples must be odd and at least 3");
  }
  const int half = (samples - 1) / 2;
  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k - half) / half;
    const auto net = homotopy_network({xi, t});
    out.push_back({t, network_length(net), lattice_volume(net.lattice())});
  }
  return out;
}

}  // namespace steinernet
