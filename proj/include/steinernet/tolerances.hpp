#pragma once

namespace steinernet::tol {

/// Relative threshold below which a determinant or edge length counts as zero.
inline constexpr double kDegenerate = 1e-14;
/// A vertex passes the Steiner condition when its balancing residual is below this.
inline constexpr double kSteiner = 1e-9;
/// Agreement of two algebraic routes to the same quantity.
inline constexpr double kFormula = 1e-12;
/// Two incident unit directions closer than this are considered equal (star not embedded).
inline constexpr double kDirection = 1e-12;

}  // namespace steinernet::tol
