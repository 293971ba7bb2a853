#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "steinernet/periodic_network.hpp"

namespace steinernet {

/// Result of a surgery pass: the new network, how many local moves were
/// applied, and notes on moves that were skipped.
struct SurgeryOutcome {
  PeriodicNetwork network;
  int applied = 0;
  std::vector<std::string> skipped;
};

/// Repeatedly deletes degree-1 vertices with their edge. Throws
/// SurgeryDegenerate when the result would be empty or disconnected.
SurgeryOutcome remove_leaves(const PeriodicNetwork& net);

/// Replaces each degree-2 vertex and its two edges by one edge. Merges that
/// would create a zero-shift loop or a non-embedded star are skipped and
/// noted. With `opposite_only`, only vertices whose two edges are opposite
/// (length-preserving) are merged.
SurgeryOutcome merge_degree_two(const PeriodicNetwork& net, bool opposite_only = false);

/// Length-preserving normalization: merges degree-2 vertices with opposite edges.
PeriodicNetwork canonicalize(const PeriodicNetwork& net);

/// Point minimizing the total distance to a, b, c (any dimension). Requires
/// all triangle angles below 120 degrees; throws NumericalDegeneracy otherwise.
Eigen::VectorXd fermat_point(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c);

/// Lowers the degree of `vertex` (>= 4) by one: takes the two incident edges
/// with the smallest angle (< 120 degrees, ties by lowest edge index) and
/// replaces them by a tripod through a new Steiner point. Length strictly
/// decreases. The new vertex is appended last.
PeriodicNetwork split_high_degree(const PeriodicNetwork& net, int vertex);

/// Applies split_high_degree until every vertex has degree <= 3.
SurgeryOutcome split_all_high_degree(const PeriodicNetwork& net);

/// For a doubly connected pair (p, q) of degree-3 vertices whose outer edges
/// are antiparallel, translates p and q along p's outer edge until p lands on
/// its outer neighbour r, then merges p into r. Length and lattice are
/// unchanged; r ends with degree 4. Throws NotApplicable otherwise.
PeriodicNetwork slide_double_edge(const PeriodicNetwork& net, int p, int q);

}  // namespace steinernet
