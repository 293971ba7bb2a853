#include "steinernet/periodic_network.hpp"

#include <cmath>
#include <string>

#include "steinernet/errors.hpp"
#include "steinernet/tolerances.hpp"

namespace steinernet {

namespace {

double length_scale(const Lattice& lattice) {
  return lattice.generators().colwise().norm().maxCoeff();
}

void check_invariants(const QuotientGraph& graph, const Eigen::MatrixXd& positions,
                      const Lattice& lattice) {
  if (lattice.dimension() != graph.dimension()) {
    throw Error(ErrorCode::InvalidParameter, "lattice and graph dimensions differ");
  }
  if (positions.rows() != graph.dimension() || positions.cols() != graph.vertex_count()) {
    throw Error(ErrorCode::InvalidParameter, "positions must be an n x vertex_count matrix");
  }
  if (!positions.allFinite()) {
    throw Error(ErrorCode::InvalidParameter, "positions contain non-finite entries");
  }
  const double floor = tol::kDegenerate * length_scale(lattice);
  for (int i = 0; i < graph.edge_count(); ++i) {
    if (!(edge_vector(graph.edge(i), positions, lattice).norm() > floor)) {
      throw Error(ErrorCode::ZeroLengthEdge, "edge " + std::to_string(i) + " has zero length");
    }
  }
  if (!is_immersed(graph, positions, lattice)) {
    throw Error(ErrorCode::NotImmersed, "a vertex star has two edges in the same direction");
  }
}

}  // namespace

Eigen::VectorXd edge_vector(const QuotientEdge& edge, const Eigen::MatrixXd& positions,
                            const Lattice& lattice) {
  return positions.col(edge.head) + lattice.point(edge.shift) - positions.col(edge.tail);
}

bool is_immersed(const QuotientGraph& graph, const Eigen::MatrixXd& positions, const Lattice& lattice) {
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const auto ends = graph.ends(v);
    std::vector<Eigen::VectorXd> dirs;
    dirs.reserve(ends.size());
    for (const auto& end : ends) {
      const Eigen::VectorXd d = positions.col(end.other) + lattice.point(end.shift) - positions.col(v);
      dirs.push_back(d.normalized());
    }
    for (std::size_t a = 0; a < dirs.size(); ++a) {
      for (std::size_t b = a + 1; b < dirs.size(); ++b) {
        if ((dirs[a] - dirs[b]).norm() < tol::kDirection) return false;
      }
    }
  }
  return true;
}

PeriodicNetwork::PeriodicNetwork(QuotientGraph graph, Eigen::MatrixXd positions, Lattice lattice)
    : graph_(std::move(graph)), positions_(std::move(positions)), lattice_(std::move(lattice)) {
  check_invariants(graph_, positions_, lattice_);
}

Eigen::VectorXd PeriodicNetwork::edge_vector(int edge) const {
  return steinernet::edge_vector(graph_.edge(edge), positions_, lattice_);
}

Eigen::VectorXd PeriodicNetwork::far_point(const EdgeEnd& end) const {
  return positions_.col(end.other) + lattice_.point(end.shift);
}

PeriodicNetwork PeriodicNetwork::with_geometry(Eigen::MatrixXd positions, Lattice lattice) const {
  return PeriodicNetwork(graph_, std::move(positions), std::move(lattice));
}

double network_length(const PeriodicNetwork& net) {
  double total = 0.0;
  for (int i = 0; i < net.graph().edge_count(); ++i) total += net.edge_length(i);
  return total;
}

std::vector<double> balancing_residual(const PeriodicNetwork& net) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(net.graph().vertex_count()));
  for (int v = 0; v < net.graph().vertex_count(); ++v) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(net.dimension());
    for (const auto& end : net.graph().ends(v)) {
      const Eigen::VectorXd d = net.far_point(end) - net.position(v);
      const double len = d.norm();
      if (!(len > 0.0)) {
        throw Error(ErrorCode::ZeroLengthEdge, "edge " + std::to_string(end.edge) + " has zero length");
      }
      sum += d / len;
    }
    out.push_back(sum.norm());
  }
  return out;
}

bool is_steiner(const PeriodicNetwork& net, double tolerance) {
  const auto residual = balancing_residual(net);
  for (int v = 0; v < net.graph().vertex_count(); ++v) {
    if (net.graph().degree(v) != 3 || residual[static_cast<std::size_t>(v)] > tolerance) return false;
  }
  return true;
}

NetworkMetrics network_metrics(const PeriodicNetwork& net) {
  NetworkMetrics m;
  m.length = network_length(net);
  m.volume = lattice_volume(net.lattice());
  m.ratio = std::pow(m.length, net.dimension()) / m.volume;
  m.balancing_residual = balancing_residual(net);
  return m;
}

CellRange CellRange::single(int dimension) { return cube(dimension, 1); }

CellRange CellRange::cube(int dimension, int count) {
  return {Eigen::VectorXi::Zero(dimension), Eigen::VectorXi::Constant(dimension, count)};
}

long long CellRange::cell_count() const {
  if (lo.size() == 0 || lo.size() != hi.size()) return 0;
  long long count = 1;
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (hi[i] <= lo[i]) return 0;
    count *= hi[i] - lo[i];
  }
  return count;
}

std::vector<Segment> lift_tile(const PeriodicNetwork& net, const CellRange& cells) {
  const int n = net.dimension();
  if (cells.lo.size() != n || cells.hi.size() != n) {
    throw Error(ErrorCode::InvalidParameter, "cell range dimension differs from network dimension");
  }
  const long long count = cells.cell_count();
  if (count == 0) throw Error(ErrorCode::EmptyRange, "cell range is empty");

  std::vector<Segment> out;
  out.reserve(static_cast<std::size_t>(count * net.graph().edge_count()));
  Eigen::VectorXi cell = cells.lo;
  for (long long c = 0; c < count; ++c) {
    const Eigen::VectorXd offset = net.lattice().point(cell);
    for (int e = 0; e < net.graph().edge_count(); ++e) {
      const auto& edge = net.graph().edge(e);
      Eigen::VectorXd from = net.position(edge.tail) + offset;
      Eigen::VectorXd to = from + net.edge_vector(e);
      out.push_back({std::move(from), std::move(to), e, cell});
    }
    for (int axis = n - 1; axis >= 0; --axis) {
      if (++cell[axis] < cells.hi[axis]) break;
      cell[axis] = cells.lo[axis];
    }
  }
  return out;
}

}  // namespace steinernet
