#include "steinernet/lattice.hpp"

#include <cmath>
#include <string>

#include "steinernet/errors.hpp"
#include "steinernet/tolerances.hpp"

namespace steinernet {

namespace {

double checked_abs_det(const Eigen::MatrixXd& g) {
  if (g.rows() == 0 || g.rows() != g.cols()) {
    throw Error(ErrorCode::DegenerateLattice,
                "generator matrix must be square and non-empty, got " +
                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  }
  if (!g.allFinite()) {
    throw Error(ErrorCode::DegenerateLattice, "generators contain non-finite entries");
  }
  const double det = std::abs(g.determinant());
  double scale = 1.0;
  for (Eigen::Index i = 0; i < g.cols(); ++i) scale *= g.col(i).norm();
  if (!(det > tol::kDegenerate * scale)) {
    throw Error(ErrorCode::DegenerateLattice, "generators are linearly dependent");
  }
  return det;
}

}  // namespace

Lattice::Lattice(Eigen::MatrixXd generators) : generators_(std::move(generators)) {
  checked_abs_det(generators_);
}

Lattice Lattice::identity(int dimension) {
  return Lattice(Eigen::MatrixXd::Identity(dimension, dimension));
}

double lattice_volume(const Lattice& lattice) { return checked_abs_det(lattice.generators()); }

}  // namespace steinernet
