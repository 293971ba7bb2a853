#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include <Eigen/Dense>

#include "steinernet/periodic_network.hpp"

namespace steinernet {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// Dihedral angle between srs tangent planes is arccos(1/3) for either orientation.
inline constexpr double kSrsCosBeta = 1.0 / 3.0;

enum class Chirality : int { Right = 1, Left = -1 };

/// sin(beta) of the rotation relating the tangent planes at p0 and p1; the
/// mirror image flips its sign.
inline double srs_sin_beta(Chirality c) {
  return static_cast<int>(c) * 2.0 * std::numbers::sqrt2 / 3.0;
}

/// Doubly periodic Steiner network over the dipole graph D3.
struct HexParams {
  Eigen::Vector3d lengths;
};

/// Steiner network over D1 x D2 (the ths family). `alpha` is the rotation
/// about the x-axis between the tangent planes at p1 and p2.
struct ThsParams {
  Vector6d lengths;
  double alpha = std::numbers::pi / 2;
};

/// Steiner network over K4 (the srs family).
struct SrsParams {
  Vector6d lengths;
  Chirality chirality = Chirality::Right;
};

// Closed-form volume polynomials. They admit zero lengths (boundary analysis)
// and are generic in the scalar type.

/// (sqrt3/2)(x1 x2 + x1 x3 + x2 x3)
template <typename Derived>
typename Derived::Scalar hex_area_formula(const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  return std::sqrt(S(3)) / S(2) * (x(0) * x(1) + x(0) * x(2) + x(1) * x(2));
}

/// (3/4) sin(alpha) (P3(x1..x4) + (x5 + x6)(x1 + x2)(x3 + x4)), written term by term.
template <typename Derived>
typename Derived::Scalar ths_volume_formula(const Eigen::MatrixBase<Derived>& x,
                                            typename Derived::Scalar alpha) {
  using S = typename Derived::Scalar;
  const S x1 = x(0), x2 = x(1), x3 = x(2), x4 = x(3), x5 = x(4), x6 = x(5);
  return S(3) / S(4) * std::sin(alpha) *
         (x1 * x2 * x3 + x1 * x2 * x4 + x1 * x3 * x4 + x2 * x3 * x4 +
          (x5 + x6) * (x1 * x3 + x2 * x3 + x1 * x4 + x2 * x4));
}

/// Sixteen cubic terms over 1/sqrt2: every product of three distinct edge
/// lengths except the four triples of concurrent edges.
template <typename Derived>
typename Derived::Scalar srs_volume_formula(const Eigen::MatrixBase<Derived>& x) {
  using S = typename Derived::Scalar;
  const S x1 = x(0), x2 = x(1), x3 = x(2), x4 = x(3), x5 = x(4), x6 = x(5);
  const S sum = x1 * x2 * x4 + x1 * x2 * x5 + x1 * x2 * x6 + x1 * x3 * x4 +
                x1 * x3 * x5 + x1 * x3 * x6 + x1 * x4 * x5 + x1 * x4 * x6 +
                x2 * x3 * x4 + x2 * x3 * x5 + x2 * x3 * x6 + x2 * x4 * x5 +
                x2 * x5 * x6 + x3 * x4 * x6 + x3 * x5 * x6 + x4 * x5 * x6;
  return sum / std::sqrt(S(2));
}

/// Quotient graphs with the shift assignments used by the constructors.
/// Edge labels "e1".."e6" (or "e1".."e3") follow the edge-length numbering.
QuotientGraph hex_quotient_graph();
QuotientGraph ths_quotient_graph();
QuotientGraph srs_quotient_graph();

Lattice hex_lattice(const HexParams& p);
Lattice ths_lattice(const ThsParams& p);
Lattice srs_lattice(const SrsParams& p);

/// p0 at the origin, p1 on the x-axis, p2 and p3 in the xy-plane. Lattice
/// g1 = p1 - p3, g2 = p2 - p3.
PeriodicNetwork construct_hexagonal(const HexParams& p);
/// Quotient vertices p0..p3 with p1 at the origin and p2 on the x-axis;
/// double edges p0p1 (x1, x2) and p2p3 (x3, x4). Throws InvalidParameter for
/// alpha outside (0, pi).
PeriodicNetwork construct_ths(const ThsParams& p);
/// Quotient vertices p0..p3 with p0 at the origin; e1,e2,e3 join p0 to
/// p1,p2,p3 and e4 = p2p3, e5 = p3p1, e6 = p1p2, so e_i and e_{i+3} are disjoint.
PeriodicNetwork construct_srs(const SrsParams& p);

enum class FamilyKind { Hexagonal, Ths, Srs, Unknown };

const char* to_string(FamilyKind kind);

/// Recognizes D3 (n = 2), D1 x D2 and K4 (n = 3) by combinatorics alone.
FamilyKind classify_quotient(const QuotientGraph& graph);

/// Edge lengths ordered by the labels "e1", "e2", ...; empty when the labels
/// are missing or not a complete numbering.
std::optional<Eigen::VectorXd> labelled_lengths(const PeriodicNetwork& net);

/// Unit normals of the tangent plane at each quotient vertex (sign arbitrary).
std::vector<Eigen::Vector3d> tangent_normals(const PeriodicNetwork& net);

}  // namespace steinernet
