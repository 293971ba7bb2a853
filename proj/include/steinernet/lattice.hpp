#pragma once

#include <Eigen/Dense>

namespace steinernet {

/// Rank-n lattice in R^n, stored as the n x n matrix whose columns are the
/// generators g_1, ..., g_n.
class Lattice {
 public:
  /// Throws DegenerateLattice unless the matrix is square and its columns are
  /// linearly independent (relative to the product of their norms).
  explicit Lattice(Eigen::MatrixXd generators);

  static Lattice identity(int dimension);

  int dimension() const { return static_cast<int>(generators_.rows()); }
  const Eigen::MatrixXd& generators() const { return generators_; }
  Eigen::VectorXd generator(int i) const { return generators_.col(i); }

  /// Lattice vector sum_i shift_i g_i.
  template <typename Derived>
  Eigen::VectorXd point(const Eigen::MatrixBase<Derived>& shift) const {
    return generators_ * shift.template cast<double>();
  }

  Eigen::MatrixXd gram() const { return generators_.transpose() * generators_; }

  Lattice scaled(double factor) const { return Lattice(generators_ * factor); }

 private:
  Eigen::MatrixXd generators_;
};

/// |det(g_1, ..., g_n)|, the volume of a fundamental domain.
double lattice_volume(const Lattice& lattice);

}  // namespace steinernet
