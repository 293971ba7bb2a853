#include "steinernet/quotient_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "steinernet/errors.hpp"

namespace steinernet {

QuotientGraph::QuotientGraph(int dimension, int vertex_count, std::vector<QuotientEdge> edges)
    : dimension_(dimension), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (dimension <= 0) {
    throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
  }
  if (vertex_count <= 0) {
    throw Error(ErrorCode::InvalidParameter, "vertex_count must be positive");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.tail < 0 || e.tail >= vertex_count || e.head < 0 || e.head >= vertex_count) {
      throw Error(ErrorCode::InvalidParameter, "edge " + std::to_string(i) + " has a vertex out of range");
    }
    if (e.shift.size() != dimension) {
      throw Error(ErrorCode::InvalidParameter,
                  "edge " + std::to_string(i) + " shift has wrong dimension");
    }
  }
}

int QuotientGraph::degree(int vertex) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.tail == vertex) ++d;
    if (e.head == vertex) ++d;
  }
  return d;
}

std::vector<EdgeEnd> QuotientGraph::ends(int vertex) const {
  std::vector<EdgeEnd> out;
  for (int i = 0; i < edge_count(); ++i) {
    const auto& e = edges_[static_cast<std::size_t>(i)];
    if (e.tail == vertex) out.push_back({i, vertex, e.head, e.shift});
    if (e.head == vertex) out.push_back({i, vertex, e.tail, -e.shift});
  }
  return out;
}

int QuotientGraph::component_count() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  int components = vertex_count_;
  for (const auto& e : edges_) {
    const int a = find(e.tail);
    const int b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components;
}

bool QuotientGraph::is_connected() const { return component_count() == 1; }

int QuotientGraph::circuit_rank() const {
  return component_count() - vertex_count_ + edge_count();
}

std::vector<Eigen::VectorXi> QuotientGraph::cycle_shifts() const {
  const auto n = static_cast<std::size_t>(vertex_count_);
  std::vector<Eigen::VectorXi> potential(n);
  std::vector<bool> tree_edge(edges_.size(), false);
  std::vector<std::vector<EdgeEnd>> adjacency(n);
  for (int v = 0; v < vertex_count_; ++v) adjacency[static_cast<std::size_t>(v)] = ends(v);

  for (int root = 0; root < vertex_count_; ++root) {
    if (potential[static_cast<std::size_t>(root)].size() != 0) continue;
    potential[static_cast<std::size_t>(root)] = Eigen::VectorXi::Zero(dimension_);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop_front();
      for (const auto& end : adjacency[static_cast<std::size_t>(v)]) {
        auto& pot = potential[static_cast<std::size_t>(end.other)];
        if (pot.size() != 0) continue;
        pot = potential[static_cast<std::size_t>(v)] + end.shift;
        tree_edge[static_cast<std::size_t>(end.edge)] = true;
        queue.push_back(end.other);
      }
    }
  }

  std::vector<Eigen::VectorXi> cycles;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (tree_edge[i]) continue;
    const auto& e = edges_[i];
    cycles.push_back(potential[static_cast<std::size_t>(e.tail)] + e.shift -
                     potential[static_cast<std::size_t>(e.head)]);
  }
  return cycles;
}

int QuotientGraph::shift_rank() const { return integer_rank(cycle_shifts(), dimension_); }

std::vector<int> QuotientGraph::loop_edges() const {
  std::vector<int> out;
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[static_cast<std::size_t>(i)].is_loop()) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> QuotientGraph::multi_edge_pairs() const {
  std::map<std::pair<int, int>, int> counts;
  for (const auto& e : edges_) {
    if (e.is_loop()) continue;
    ++counts[{std::min(e.tail, e.head), std::max(e.tail, e.head)}];
  }
  std::vector<std::pair<int, int>> out;
  for (const auto& [pair, count] : counts) {
    if (count >= 2) out.push_back(pair);
  }
  return out;
}

int QuotientGraph::multiplicity(int a, int b) const {
  int count = 0;
  for (const auto& e : edges_) {
    if ((e.tail == a && e.head == b) || (e.tail == b && e.head == a)) ++count;
  }
  return count;
}

int integer_rank(const std::vector<Eigen::VectorXi>& vectors, int dimension) {
  std::vector<std::vector<std::int64_t>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    rows.emplace_back(v.data(), v.data() + v.size());
  }
  int rank = 0;
  for (int col = 0; col < dimension && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                              [col](const auto& r) { return r[static_cast<std::size_t>(col)] != 0; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    const auto& p = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      const std::int64_t a = p[static_cast<std::size_t>(col)];
      const std::int64_t b = row[static_cast<std::size_t>(col)];
      if (b == 0) continue;
      std::int64_t g = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        row[k] = a * row[k] - b * p[k];
        g = std::gcd(g, std::abs(row[k]));
      }
      if (g > 1) {
        for (auto& x : row) x /= g;
      }
    }
    ++rank;
  }
  return rank;
}

QuotientValidation validate_quotient(const QuotientGraph& graph, bool require_steiner_topology) {
  QuotientValidation report;
  report.dimension = graph.dimension();
  report.connected = graph.is_connected();
  report.circuit_rank = graph.circuit_rank();
  report.shift_rank = graph.shift_rank();
  report.loop_edges = graph.loop_edges();
  report.multi_edge_pairs = graph.multi_edge_pairs();
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) != 3) report.irregular_vertices.push_back(v);
  }
  report.simple = report.loop_edges.empty() && report.multi_edge_pairs.empty();

  bool ok = true;
  if (!report.connected) {
    ok = false;
    report.issues.emplace_back("graph is not connected");
  }
  if (report.shift_rank != graph.dimension()) {
    ok = false;
    report.issues.push_back("shift rank " + std::to_string(report.shift_rank) +
                            " differs from dimension " + std::to_string(graph.dimension()));
  }
  if (!report.loop_edges.empty()) {
    report.issues.push_back("contains " + std::to_string(report.loop_edges.size()) + " loop(s)");
    if (require_steiner_topology) ok = false;
  }
  if (!report.irregular_vertices.empty()) {
    report.issues.push_back(std::to_string(report.irregular_vertices.size()) +
                            " vertex/vertices not of degree 3");
    if (require_steiner_topology) ok = false;
  }
  if (!report.multi_edge_pairs.empty()) {
    report.issues.push_back("contains " + std::to_string(report.multi_edge_pairs.size()) +
                            " multiply connected vertex pair(s)");
  }
  report.passed = ok;
  return report;
}

}  // namespace steinernet
