#pragma once

// Reference computations written independently of the library: brute force
// where the library is clever, and literal constants where it computes.

#include <cmath>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "steinernet/periodic_network.hpp"

namespace oracle {

inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kSqrt3 = 1.7320508075688772;
inline constexpr double kSrsRatio = 19.091883092036785;  // 27 / sqrt 2
inline constexpr double kThsRatio = 20.25;
inline constexpr double kHexRatio = 3.4641016151377544;  // 2 sqrt 3

inline double relative_error(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Sum over all k-subsets by bitmask enumeration.
inline double elementary_symmetric(int k, const Eigen::VectorXd& x) {
  const int m = static_cast<int>(x.size());
  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    double term = 1.0;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) term *= x[i];
    }
    total += term;
  }
  return total;
}

inline double binomial(int m, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

// Laplace expansion along the first row.
inline double cofactor_det(const Eigen::MatrixXd& a) {
  const auto n = a.rows();
  if (n == 1) return a(0, 0);
  if (n == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  double det = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::MatrixXd minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    }
    det += ((j % 2 == 0) ? 1.0 : -1.0) * a(0, j) * cofactor_det(minor);
  }
  return det;
}

inline Eigen::VectorXd central_gradient(const std::function<double(const Eigen::VectorXd&)>& f,
                                        const Eigen::VectorXd& x, double h = 1e-5) {
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd up = x, down = x;
    up[i] += h;
    down[i] -= h;
    g[i] = (f(up) - f(down)) / (2.0 * h);
  }
  return g;
}

// Weiszfeld iteration for the geometric median of three points.
inline Eigen::VectorXd weiszfeld(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                 const Eigen::VectorXd& c, int iterations = 20000) {
  Eigen::VectorXd x = (a + b + c) / 3.0;
  for (int it = 0; it < iterations; ++it) {
    const double wa = 1.0 / (x - a).norm(), wb = 1.0 / (x - b).norm(), wc = 1.0 / (x - c).norm();
    const Eigen::VectorXd next = (wa * a + wb * b + wc * c) / (wa + wb + wc);
    if ((next - x).norm() < 1e-15) return next;
    x = next;
  }
  return x;
}

// Total length and per-vertex balancing computed straight from the raw data.
inline double total_length(const steinernet::PeriodicNetwork& net) {
  double total = 0.0;
  for (const auto& e : net.graph().edges()) {
    const Eigen::VectorXd d = net.positions().col(e.head) + net.lattice().generators() * e.shift.cast<double>() -
                              net.positions().col(e.tail);
    total += d.norm();
  }
  return total;
}

inline double max_balancing(const steinernet::PeriodicNetwork& net) {
  const auto& G = net.lattice().generators();
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(net.dimension(), net.graph().vertex_count());
  for (const auto& e : net.graph().edges()) {
    const Eigen::VectorXd d =
        net.positions().col(e.head) + G * e.shift.cast<double>() - net.positions().col(e.tail);
    sums.col(e.tail) += d.normalized();
    sums.col(e.head) -= d.normalized();
  }
  return sums.colwise().norm().maxCoeff();
}

inline Eigen::VectorXd uniform_vector(std::mt19937_64& rng, int m, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::VectorXd x(m);
  for (int i = 0; i < m; ++i) x[i] = u(rng);
  return x;
}

}  // namespace oracle
