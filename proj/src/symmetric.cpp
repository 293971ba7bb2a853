#include "steinernet/symmetric.hpp"

#include <cmath>

namespace steinernet {

namespace {

template <typename Vec>
void require_positive(const Vec& x, const char* what) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !(x[i] > 0.0)) {
      throw Error(ErrorCode::InvalidParameter, std::string(what) + " needs positive inputs");
    }
  }
}

}  // namespace

bool maclaurin_equality(int k, const Eigen::VectorXd& x, double relative_tolerance) {
  const double mean = x.mean();
  if (mean == 0.0) return maclaurin_gap(k, x) == 0.0;  // validates k, x
  // Scale-free gap 1 - P_k(y) / binom(m, k) with y = x / mean. Newton's
  // inequalities bound it below by spread(y)^2 / (2 m (m - 1)).
  const Eigen::VectorXd y = x / mean;
  const double relative = maclaurin_gap(k, y) / binomial(static_cast<int>(x.size()), k);
  return relative < relative_tolerance;
}

LagrangeReport make_lagrange_report(Eigen::VectorXd gradient) {
  LagrangeReport r;
  r.multiplier = gradient.mean();
  r.residual = gradient.maxCoeff() - gradient.minCoeff();
  r.gradient = std::move(gradient);
  return r;
}

LagrangeReport ths_lagrange_residual(const Eigen::Matrix<double, 5, 1>& z) {
  require_positive(z, "ths_lagrange_residual");
  return make_lagrange_report(ths_reduced_gradient(z));
}

LagrangeReport srs_lagrange_residual(const Eigen::Matrix<double, 6, 1>& x) {
  require_positive(x, "srs_lagrange_residual");
  return make_lagrange_report(srs_volume_gradient(x));
}

LagrangeReport hex_lagrange_residual(const Eigen::Vector3d& x) {
  require_positive(x, "hex_lagrange_residual");
  return make_lagrange_report(hex_area_gradient(x));
}

double length_ratio(const PeriodicNetwork& net) {
  const double volume = lattice_volume(net.lattice());
  return std::pow(network_length(net), net.dimension()) / volume;
}

}  // namespace steinernet
