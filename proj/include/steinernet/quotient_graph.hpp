#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace steinernet {

/// Edge of the quotient multigraph. `shift` holds the integer coordinates of
/// the deck transformation taking the tail's cell to the head's cell, so the
/// lifted edge runs from x_tail to x_head + Lambda * shift. Reversing an edge
/// negates its shift.
struct QuotientEdge {
  int tail = 0;
  int head = 0;
  Eigen::VectorXi shift;
  std::string label;

  bool is_loop() const { return tail == head; }
};

/// One end of an edge as seen from a vertex: `shift` is oriented away from
/// `vertex`, so the neighbour sits at x_other + Lambda * shift.
struct EdgeEnd {
  int edge = 0;
  int vertex = 0;
  int other = 0;
  Eigen::VectorXi shift;
};

/// Finite multigraph N / Lambda with integer edge shifts in Z^n.
/// Loops and multiple edges are allowed.
class QuotientGraph {
 public:
  QuotientGraph(int dimension, int vertex_count, std::vector<QuotientEdge> edges);

  int dimension() const { return dimension_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<QuotientEdge>& edges() const { return edges_; }
  const QuotientEdge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

  /// Degree counts a loop twice.
  int degree(int vertex) const;
  /// All edge ends at `vertex`, ordered by edge index; a loop contributes two.
  std::vector<EdgeEnd> ends(int vertex) const;

  bool is_connected() const;
  /// 1 - #vertices + #edges for connected graphs (components - #V + #E otherwise).
  int circuit_rank() const;
  /// Rank of the sublattice of Z^n spanned by the shift sums of a cycle basis.
  int shift_rank() const;
  /// Shift sums of the fundamental cycles of a BFS spanning forest (one per non-tree edge).
  std::vector<Eigen::VectorXi> cycle_shifts() const;

  std::vector<int> loop_edges() const;
  /// Unordered vertex pairs {a, b}, a < b, joined by two or more edges.
  std::vector<std::pair<int, int>> multi_edge_pairs() const;
  /// Number of edges joining a and b (loops if a == b).
  int multiplicity(int a, int b) const;

 private:
  int component_count() const;

  int dimension_;
  int vertex_count_;
  std::vector<QuotientEdge> edges_;
};

/// Rank over Q of a list of integer vectors (exact, fraction-free elimination).
int integer_rank(const std::vector<Eigen::VectorXi>& vectors, int dimension);

struct QuotientValidation {
  int dimension = 0;
  bool connected = false;
  int circuit_rank = 0;
  int shift_rank = 0;
  std::vector<int> loop_edges;
  std::vector<std::pair<int, int>> multi_edge_pairs;
  std::vector<int> irregular_vertices;  // degree != 3
  bool simple = false;
  bool passed = false;
  std::vector<std::string> issues;
};

/// Diagnostic report. Always requires connectivity and shift rank n; with
/// `require_steiner_topology` it also requires a loop-free 3-regular graph.
/// Multiple edges are reported but never fail the check.
QuotientValidation validate_quotient(const QuotientGraph& graph, bool require_steiner_topology);

}  // namespace steinernet
