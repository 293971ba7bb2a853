#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>

#include "steinernet/errors.hpp"
#include "steinernet/periodic_network.hpp"

namespace steinernet {

/// Reference values of the scale-invariant length ratio L^n / V.
inline constexpr double kHexRatioBound = 2.0 * std::numbers::sqrt3;          // n = 2
inline constexpr double kThsRatioBound = 81.0 / 4.0;                         // D1 x D2
inline constexpr double kSrsRatioBound = 27.0 / std::numbers::sqrt2;         // n = 3

/// P_k(x), the sum over all k-subsets of products. Computed with the prefix
/// recurrence e_j <- e_j + x_i e_{j-1}; P_0 = 1.
template <typename Derived>
typename Derived::Scalar elementary_symmetric(int k, const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  const auto m = static_cast<int>(x.size());
  if (k < 0 || k > m) {
    throw Error(ErrorCode::InvalidParameter,
                "elementary_symmetric needs 0 <= k <= m, got k=" + std::to_string(k));
  }
  Eigen::Matrix<S, Eigen::Dynamic, 1> e = Eigen::Matrix<S, Eigen::Dynamic, 1>::Zero(k + 1);
  e[0] = S(1);
  for (int i = 0; i < m; ++i) {
    for (int j = std::min(k, i + 1); j >= 1; --j) e[j] += x(i) * e[j - 1];
  }
  return e[k];
}

inline double binomial(int m, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (m - k + i) / i;
  return b;
}

/// binom(m, k) (mean x)^k - P_k(x); non-negative for x >= 0, zero iff all x equal.
template <typename Derived>
typename Derived::Scalar maclaurin_gap(int k, const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  const auto m = static_cast<int>(x.size());
  if (k < 2 || k > m) {
    throw Error(ErrorCode::InvalidParameter, "maclaurin_gap needs 2 <= k <= m");
  }
  for (int i = 0; i < m; ++i) {
    if (!(x(i) >= S(0))) throw Error(ErrorCode::InvalidParameter, "maclaurin_gap needs x >= 0");
  }
  const S mean = x.sum() / S(m);
  return S(binomial(m, k)) * std::pow(mean, k) - elementary_symmetric(k, x);
}

/// Equality-case detector on the gap of x / mean(x) relative to binom(m, k).
/// A positive answer bounds (max - min) / mean by sqrt(2 m (m - 1) tol).
bool maclaurin_equality(int k, const Eigen::VectorXd& x, double relative_tolerance = 1e-13);

struct LagrangeReport {
  Eigen::VectorXd gradient;
  double multiplier = 0.0;  // mean of the gradient components
  double residual = 0.0;    // max - min of the gradient components
};

LagrangeReport make_lagrange_report(Eigen::VectorXd gradient);

/// ths volume at alpha = pi/2 as a function of z = (x1, x2, x3, x4, y), y = x5 + x6.
template <typename Derived>
typename Derived::Scalar ths_reduced_volume(const Eigen::MatrixBase<Derived>& z) {
  using S = typename Derived::Scalar;
  const S x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3), y = z(4);
  return S(3) / S(4) *
         (x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4 +
          y * (x1 * x3 + x2 * x3 + x1 * x4 + x2 * x4));
}

/// Gradient of ths_reduced_volume, component by component.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 5, 1> ths_reduced_gradient(const Eigen::MatrixBase<Derived>& z) {
  using S = typename Derived::Scalar;
  const S x1 = z(0), x2 = z(1), x3 = z(2), x4 = z(3), y = z(4);
  Eigen::Matrix<S, 5, 1> g;
  g << x2 * x3 + x2 * x4 + x3 * x4 + x3 * y + x4 * y,
       x1 * x3 + x1 * x4 + x3 * x4 + x3 * y + x4 * y,
       x1 * x2 + x1 * x4 + x2 * x4 + x1 * y + x2 * y,
       x1 * x2 + x1 * x3 + x2 * x3 + x1 * y + x2 * y,
       x1 * x3 + x2 * x3 + x1 * x4 + x2 * x4;
  return S(3) / S(4) * g;
}

/// Gradient of srs_volume_formula, component by component.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 6, 1> srs_volume_gradient(const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  const S x1 = x(0), x2 = x(1), x3 = x(2), x4 = x(3), x5 = x(4), x6 = x(5);
  Eigen::Matrix<S, 6, 1> g;
  g << x2 * x4 + x3 * x4 + x2 * x5 + x3 * x5 + x4 * x5 + x2 * x6 + x3 * x6 + x4 * x6,
       x1 * x4 + x3 * x4 + x1 * x5 + x3 * x5 + x4 * x5 + x1 * x6 + x3 * x6 + x5 * x6,
       x1 * x4 + x2 * x4 + x1 * x5 + x2 * x5 + x1 * x6 + x2 * x6 + x4 * x6 + x5 * x6,
       x1 * x2 + x1 * x3 + x2 * x3 + x1 * x5 + x2 * x5 + x1 * x6 + x3 * x6 + x5 * x6,
       x1 * x2 + x1 * x3 + x2 * x3 + x1 * x4 + x2 * x4 + x2 * x6 + x3 * x6 + x4 * x6,
       x1 * x2 + x1 * x3 + x2 * x3 + x1 * x4 + x3 * x4 + x2 * x5 + x3 * x5 + x4 * x5;
  return g / std::sqrt(S(2));
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 3, 1> hex_area_gradient(const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  Eigen::Matrix<S, 3, 1> g(x(1) + x(2), x(0) + x(2), x(0) + x(1));
  return std::sqrt(S(3)) / S(2) * g;
}

/// Lagrange system grad V = lambda (1, ..., 1) for the reduced ths volume.
/// All inputs must be positive.
LagrangeReport ths_lagrange_residual(const Eigen::Matrix<double, 5, 1>& z);
LagrangeReport srs_lagrange_residual(const Eigen::Matrix<double, 6, 1>& x);
LagrangeReport hex_lagrange_residual(const Eigen::Vector3d& x);

/// L^n / V; throws DegenerateLattice when V vanishes.
double length_ratio(const PeriodicNetwork& net);

}  // namespace steinernet
