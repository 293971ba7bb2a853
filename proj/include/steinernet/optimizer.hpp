#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steinernet/lattice.hpp"
#include "steinernet/periodic_network.hpp"
#include "steinernet/quotient_graph.hpp"

namespace steinernet {

enum class SimplexFamily { Hexagonal, ThsReduced, Srs };

const char* to_string(SimplexFamily family);
/// Accepts "hex", "ths" / "ths-reduced", "srs".
SimplexFamily parse_simplex_family(const std::string& name);
/// Number of free lengths: 3, 5 or 6.
int simplex_dimension(SimplexFamily family);

/// Maximize the closed-form volume of a family over {x >= 0, sum x = 1}.
struct SimplexProblem {
  SimplexFamily family = SimplexFamily::Srs;
  double tolerance = 1e-12;  // on the Lagrange residual
  int max_iterations = 20000;
  std::uint64_t seed = 0;
  int starts = 32;
};

/// Minimize total length over vertex positions with graph and lattice fixed.
struct EmbeddingProblem {
  QuotientGraph graph;
  Lattice lattice;
  std::optional<Eigen::MatrixXd> initial_positions;  // n x V; random when absent
  double smoothing = 1e-2;                           // first epsilon of the continuation
  double tolerance = 1e-12;                          // relative objective decrease per stage
  int max_iterations = 50000;
  std::uint64_t seed = 0;
};

enum class SolverStatus { Converged, NotConverged, VertexCollision };

const char* to_string(SolverStatus status);

struct OptimizationReport {
  Eigen::VectorXd argpoint;  // simplex point, or positions flattened column-major
  double objective = 0.0;    // V at L = 1 (simplex) or unsmoothed length L (embedding)
  double ratio = 0.0;        // L^n / V at argpoint
  double lagrange_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  SolverStatus status = SolverStatus::NotConverged;
  std::vector<double> trace;
  int start_index = 0;
  std::vector<int> collided_edges;  // embedding only: shorter than smoothing * 1e-3
  int flat_directions = 0;          // embedding only: null directions of the length Hessian
};

/// Seed of the i-th multi-start run, derived from the master seed.
std::uint64_t derive_seed(std::uint64_t master, int index);

/// One projected-ascent run from the given start point (projected onto the simplex first).
OptimizationReport maximize_volume_from(SimplexFamily family, const Eigen::VectorXd& start,
                                        double tolerance, int max_iterations);

/// All multi-start runs, in start order.
std::vector<OptimizationReport> maximize_volume_runs(const SimplexProblem& problem);

/// Best run by (objective descending, start index ascending). Never throws for
/// non-convergence; inspect `converged`.
OptimizationReport maximize_volume_on_simplex(const SimplexProblem& problem);

/// Euclidean projection onto {x >= 0, sum x = 1} (sort-based).
Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v);

/// Smoothed iteratively reweighted least squares with epsilon continuation
/// down to 1e-8. Vertex 0 is pinned where it starts (random starts pin it at
/// the origin). The smoothed objective in `trace` is non-increasing.
OptimizationReport minimize_embedding(const EmbeddingProblem& problem);

/// Reshape an embedding argpoint back to an n x V matrix.
Eigen::MatrixXd argpoint_positions(const OptimizationReport& report, int dimension);

}  // namespace steinernet
