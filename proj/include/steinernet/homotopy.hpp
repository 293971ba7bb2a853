#pragma once

#include <vector>

#include <Eigen/Dense>

#include "steinernet/periodic_network.hpp"

namespace steinernet {

/// `xi` is the edge length x5 of the starting ths network (x1 = 1), `t` the
/// homotopy time in [-1, 1].
struct HomotopyParams {
  double xi = 0.25;
  double t = -1.0;
};

/// Lattice shared by every network of the family: (0, sqrt3, 0),
/// (0, 0, -sqrt3), (3/2, sqrt3/2, sqrt3/2).
Lattice homotopy_lattice();

/// Quotient vertices p0..p3 of the Steiner K4 network reached at t = 1.
Eigen::Matrix<double, 3, 4> homotopy_endpoint_vertices();

/// t < 0: minimizing ths network with x5 = |t| xi, x5 + x6 = 1/2, alpha = pi/2.
/// t = 0: three quotient vertices, p1 = p2 merged into one degree-4 vertex.
/// t > 0: K4 network with vertices (1 - t) p^0 + t p^1.
/// Throws InvalidParameter for xi outside (0, 1/2) or t outside [-1, 1].
PeriodicNetwork homotopy_network(const HomotopyParams& p);

struct ProfileSample {
  double t = 0.0;
  double length = 0.0;
  double volume = 0.0;
};

/// Uniform samples of t over [-1, 1]; `samples` must be odd and >= 3 so that
/// t = -1, 0, 1 are hit exactly.
std::vector<ProfileSample> homotopy_length_profile(double xi, int samples);

}  // namespace steinernet
