#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "steinernet/errors.hpp"
#include "steinernet/optimizer.hpp"

namespace steinernet {

namespace {

constexpr double kFinalSmoothing = 1e-8;
constexpr double kSmoothingFactor = 1e-2;

struct EdgeData {
  int tail;
  int head;
  Eigen::VectorXd offset;  // Lambda * shift
};

std::vector<EdgeData> edge_data(const QuotientGraph& graph, const Lattice& lattice) {
  std::vector<EdgeData> out;
  out.reserve(static_cast<std::size_t>(graph.edge_count()));
  for (const auto& e : graph.edges()) out.push_back({e.tail, e.head, lattice.point(e.shift)});
  return out;
}

Eigen::VectorXd edge_vec(const EdgeData& e, const Eigen::MatrixXd& x) {
  return x.col(e.head) + e.offset - x.col(e.tail);
}

double smoothed_length(const std::vector<EdgeData>& edges, const Eigen::MatrixXd& x, double eps) {
  double total = 0.0;
  for (const auto& e : edges) total += std::sqrt(edge_vec(e, x).squaredNorm() + eps * eps);
  return total;
}

/// Minimizer of the weighted quadratic majorizer with vertex 0 held fixed.
Eigen::MatrixXd reweighted_step(const std::vector<EdgeData>& edges, const Eigen::MatrixXd& x,
                                double eps) {
  const auto n = x.rows();
  const auto vcount = x.cols();
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(vcount, vcount);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(vcount, n);
  for (const auto& e : edges) {
    if (e.tail == e.head) continue;  // loop length does not depend on positions
    const double w = 1.0 / std::sqrt(edge_vec(e, x).squaredNorm() + eps * eps);
    laplacian(e.tail, e.tail) += w;
    laplacian(e.head, e.head) += w;
    laplacian(e.tail, e.head) -= w;
    laplacian(e.head, e.tail) -= w;
    rhs.row(e.head) -= w * e.offset.transpose();
    rhs.row(e.tail) += w * e.offset.transpose();
  }
  Eigen::MatrixXd next = x;
  if (vcount == 1) return next;
  const auto free = vcount - 1;
  const Eigen::MatrixXd reduced = laplacian.bottomRightCorner(free, free);
  const Eigen::MatrixXd b =
      rhs.bottomRows(free) - laplacian.bottomLeftCorner(free, 1) * x.col(0).transpose();
  const Eigen::MatrixXd solved = reduced.ldlt().solve(b);
  next.rightCols(free) = solved.transpose();
  return next;
}

int count_flat_directions(const std::vector<EdgeData>& edges, const Eigen::MatrixXd& x,
                          double min_length) {
  const auto n = x.rows();
  const auto vcount = x.cols();
  if (vcount < 2) return 0;
  const auto dim = n * (vcount - 1);
  Eigen::MatrixXd hessian = Eigen::MatrixXd::Zero(dim, dim);
  auto block = [&](Eigen::Index v) { return (v - 1) * n; };
  for (const auto& e : edges) {
    if (e.tail == e.head) continue;
    const Eigen::VectorXd d = edge_vec(e, x);
    const double len = d.norm();
    if (len < min_length) continue;
    const Eigen::VectorXd u = d / len;
    const Eigen::MatrixXd h = (Eigen::MatrixXd::Identity(n, n) - u * u.transpose()) / len;
    for (int a : {e.tail, e.head}) {
      for (int b : {e.tail, e.head}) {
        if (a == 0 || b == 0) continue;
        const double sign = (a == b) ? 1.0 : -1.0;
        hessian.block(block(a), block(b), n, n) += sign * h;
      }
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hessian, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = solver.eigenvalues();
  const double top = ev.cwiseAbs().maxCoeff();
  int flat = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) <= 1e-6 * top) ++flat;
  }
  return flat;
}

}  // namespace

Eigen::MatrixXd argpoint_positions(const OptimizationReport& report, int dimension) {
  if (dimension <= 0 || report.argpoint.size() % dimension != 0) {
    throw Error(ErrorCode::InvalidParameter, "argpoint size is not a multiple of the dimension");
  }
  return Eigen::Map<const Eigen::MatrixXd>(report.argpoint.data(), dimension,
                                           report.argpoint.size() / dimension);
}

OptimizationReport minimize_embedding(const EmbeddingProblem& problem) {
  const auto& graph = problem.graph;
  const auto& lattice = problem.lattice;
  const int n = graph.dimension();
  if (lattice.dimension() != n) {
    throw Error(ErrorCode::InvalidParameter, "lattice and graph dimensions differ");
  }
  const auto validation = validate_quotient(graph, false);
  if (!validation.passed) {
    throw Error(ErrorCode::InvalidParameter, "embedding problem graph must be connected with shift rank n");
  }
  if (!(problem.smoothing > 0.0) || !(problem.tolerance > 0.0) || problem.max_iterations <= 0) {
    throw Error(ErrorCode::InvalidParameter, "smoothing, tolerance and max_iterations must be positive");
  }

  Eigen::MatrixXd x;
  if (problem.initial_positions) {
    x = *problem.initial_positions;
    if (x.rows() != n || x.cols() != graph.vertex_count() || !x.allFinite()) {
      throw Error(ErrorCode::InvalidParameter, "initial positions must be a finite n x V matrix");
    }
  } else {
    std::mt19937_64 rng(derive_seed(problem.seed, 0));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::MatrixXd cell(n, graph.vertex_count());
    for (Eigen::Index j = 0; j < cell.cols(); ++j) {
      for (Eigen::Index i = 0; i < n; ++i) cell(i, j) = unit(rng);
    }
    x = lattice.generators() * cell;
    x.colwise() -= Eigen::VectorXd(x.col(0));
  }

  const auto edges = edge_data(graph, lattice);
  OptimizationReport report;
  double eps = problem.smoothing;
  int iterations = 0;
  bool stage_converged = false;
  double value = smoothed_length(edges, x, eps);
  report.trace.push_back(value);

  while (true) {
    stage_converged = false;
    while (iterations < problem.max_iterations) {
      const Eigen::MatrixXd next = reweighted_step(edges, x, eps);
      const double next_value = smoothed_length(edges, next, eps);
      ++iterations;
      if (!(next_value <= value)) {  // rounding noise at the fixed point
        stage_converged = true;
        break;
      }
      const double decrease = value - next_value;
      const double moved = (next - x).cwiseAbs().maxCoeff();
      x = next;
      value = next_value;
      report.trace.push_back(value);
      if (decrease <= problem.tolerance * value && moved <= 1e-10 * (1.0 + x.cwiseAbs().maxCoeff())) {
        stage_converged = true;
        break;
      }
    }
    if (!stage_converged || eps <= kFinalSmoothing) break;
    eps = std::max(eps * kSmoothingFactor, kFinalSmoothing);
    value = smoothed_length(edges, x, eps);
    report.trace.push_back(value);
  }

  double length = 0.0;
  for (int i = 0; i < graph.edge_count(); ++i) {
    const double len = edge_vec(edges[static_cast<std::size_t>(i)], x).norm();
    length += len;
    // Measured against the configured smoothing: a collapsed edge settles at
    // a length of order the final epsilon, never below it.
    if (len < problem.smoothing * 1e-3) report.collided_edges.push_back(i);
  }

  // Balancing residual over vertices whose incident edges are all long enough.
  double residual = 0.0;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(n);
    bool measurable = true;
    for (const auto& end : graph.ends(v)) {
      const Eigen::VectorXd d = x.col(end.other) + lattice.point(end.shift) - x.col(v);
      const double len = d.norm();
      if (len <= 10.0 * eps) {
        measurable = false;
        break;
      }
      sum += d / len;
    }
    if (measurable) residual = std::max(residual, sum.norm());
  }

  report.argpoint = Eigen::Map<const Eigen::VectorXd>(x.data(), x.size());
  report.objective = length;
  report.ratio = std::pow(length, n) / lattice_volume(lattice);
  report.lagrange_residual = residual;
  report.iterations = iterations;
  report.converged = stage_converged && eps <= kFinalSmoothing;
  report.flat_directions = count_flat_directions(edges, x, 10.0 * eps);
  if (!report.collided_edges.empty()) {
    report.status = SolverStatus::VertexCollision;
  } else {
    report.status = report.converged ? SolverStatus::Converged : SolverStatus::NotConverged;
  }
  return report;
}

}  // namespace steinernet
