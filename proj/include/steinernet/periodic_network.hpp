#pragma once

#include <vector>

#include <Eigen/Dense>

#include "steinernet/lattice.hpp"
#include "steinernet/quotient_graph.hpp"

namespace steinernet {

/// A quotient graph immersed in R^n: one representative position per
/// quotient vertex (columns of an n x V matrix) plus the lattice. Lifts are
/// computed on demand.
///
/// Construction enforces that every lifted edge has positive length and that
/// each vertex star is embedded (incident unit directions pairwise distinct).
class PeriodicNetwork {
 public:
  PeriodicNetwork(QuotientGraph graph, Eigen::MatrixXd positions, Lattice lattice);

  int dimension() const { return graph_.dimension(); }
  const QuotientGraph& graph() const { return graph_; }
  const Eigen::MatrixXd& positions() const { return positions_; }
  Eigen::VectorXd position(int vertex) const { return positions_.col(vertex); }
  const Lattice& lattice() const { return lattice_; }

  /// x_head + Lambda * shift - x_tail.
  Eigen::VectorXd edge_vector(int edge) const;
  double edge_length(int edge) const { return edge_vector(edge).norm(); }
  /// Lifted position of the neighbour reached through `end`, in the frame of end.vertex.
  Eigen::VectorXd far_point(const EdgeEnd& end) const;

  /// Same graph, new geometry; all invariants are re-checked.
  PeriodicNetwork with_geometry(Eigen::MatrixXd positions, Lattice lattice) const;

 private:
  QuotientGraph graph_;
  Eigen::MatrixXd positions_;
  Lattice lattice_;
};

/// Geometric edge vector for arbitrary positions, without the network invariants.
Eigen::VectorXd edge_vector(const QuotientEdge& edge, const Eigen::MatrixXd& positions,
                            const Lattice& lattice);

/// True when each vertex star is embedded: no two incident unit directions coincide.
bool is_immersed(const QuotientGraph& graph, const Eigen::MatrixXd& positions, const Lattice& lattice);

struct NetworkMetrics {
  double length = 0.0;
  double volume = 0.0;
  double ratio = 0.0;  // length^n / volume
  std::vector<double> balancing_residual;
};

/// Sum of the quotient edge lengths.
double network_length(const PeriodicNetwork& net);

/// Per vertex, the norm of the sum of outgoing unit edge directions.
std::vector<double> balancing_residual(const PeriodicNetwork& net);

/// Every vertex has degree 3 and balancing residual at most `tolerance`.
bool is_steiner(const PeriodicNetwork& net, double tolerance);

NetworkMetrics network_metrics(const PeriodicNetwork& net);

/// Half-open integer box [lo, hi) of lattice cells.
struct CellRange {
  Eigen::VectorXi lo;
  Eigen::VectorXi hi;

  static CellRange single(int dimension);
  /// [0, count)^n
  static CellRange cube(int dimension, int count);
  long long cell_count() const;
};

struct Segment {
  Eigen::VectorXd from;
  Eigen::VectorXd to;
  int edge = 0;
  Eigen::VectorXi cell;
};

/// One segment per (cell, edge), ordered cell-major (last coordinate fastest)
/// and then by edge index. Throws EmptyRange for an empty box.
std::vector<Segment> lift_tile(const PeriodicNetwork& net, const CellRange& cells);

}  // namespace steinernet
