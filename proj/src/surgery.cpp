#include "steinernet/surgery.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steinernet/errors.hpp"
#include "steinernet/tolerances.hpp"

namespace steinernet {

namespace {

struct Draft {
  Eigen::MatrixXd positions;  // n x V, columns may be dropped later
  std::vector<bool> alive;
  std::vector<QuotientEdge> edges;
};

Draft draft_of(const PeriodicNetwork& net) {
  return {net.positions(), std::vector<bool>(static_cast<std::size_t>(net.graph().vertex_count()), true),
          net.graph().edges()};
}

/// Drops dead vertices and renumbers the rest in their original order.
PeriodicNetwork rebuild(const Draft& d, const PeriodicNetwork& original) {
  std::vector<int> index(d.alive.size(), -1);
  int count = 0;
  for (std::size_t v = 0; v < d.alive.size(); ++v) {
    if (d.alive[v]) index[v] = count++;
  }
  if (count == 0) throw Error(ErrorCode::SurgeryDegenerate, "surgery removed every vertex");
  Eigen::MatrixXd positions(d.positions.rows(), count);
  for (std::size_t v = 0; v < d.alive.size(); ++v) {
    if (d.alive[v]) positions.col(index[v]) = d.positions.col(static_cast<Eigen::Index>(v));
  }
  std::vector<QuotientEdge> edges;
  edges.reserve(d.edges.size());
  for (const auto& e : d.edges) {
    edges.push_back({index[static_cast<std::size_t>(e.tail)], index[static_cast<std::size_t>(e.head)],
                     e.shift, e.label});
  }
  QuotientGraph graph(original.dimension(), count, std::move(edges));
  return PeriodicNetwork(std::move(graph), std::move(positions), original.lattice());
}

int draft_degree(const Draft& d, int v) {
  int deg = 0;
  for (const auto& e : d.edges) deg += (e.tail == v) + (e.head == v);
  return deg;
}

std::string join_labels(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "+" + b;
}

}  // namespace

SurgeryOutcome remove_leaves(const PeriodicNetwork& net) {
  Draft d = draft_of(net);
  int removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < static_cast<int>(d.alive.size()); ++v) {
      if (!d.alive[static_cast<std::size_t>(v)] || draft_degree(d, v) != 1) continue;
      std::erase_if(d.edges, [v](const QuotientEdge& e) { return e.tail == v || e.head == v; });
      d.alive[static_cast<std::size_t>(v)] = false;
      ++removed;
      changed = true;
    }
  }
  for (std::size_t v = 0; v < d.alive.size(); ++v) {
    if (d.alive[v] && draft_degree(d, static_cast<int>(v)) == 0) {
      throw Error(ErrorCode::SurgeryDegenerate, "leaf removal left an isolated vertex");
    }
  }
  PeriodicNetwork out = rebuild(d, net);
  if (!out.graph().is_connected()) {
    throw Error(ErrorCode::SurgeryDegenerate, "leaf removal disconnected the graph");
  }
  return {std::move(out), removed, {}};
}

SurgeryOutcome merge_degree_two(const PeriodicNetwork& net, bool opposite_only) {
  Draft d = draft_of(net);
  std::vector<std::string> skipped;
  int merged = 0;
  const auto& lattice = net.lattice();

  for (int v = 0; v < static_cast<int>(d.alive.size()); ++v) {
    if (!d.alive[static_cast<std::size_t>(v)] || draft_degree(d, v) != 2) continue;

    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      if (d.edges[i].tail == v || d.edges[i].head == v) incident.push_back(i);
    }
    if (incident.size() != 2) {
      skipped.push_back("vertex " + std::to_string(v) + ": only a loop is incident");
      continue;
    }
    // Orient both edges away from v: far point = x_other + Lambda * shift.
    auto away = [&](const QuotientEdge& e) {
      return e.tail == v ? std::pair{e.head, Eigen::VectorXi(e.shift)}
                         : std::pair{e.tail, Eigen::VectorXi(-e.shift)};
    };
    const auto& e1 = d.edges[incident[0]];
    const auto& e2 = d.edges[incident[1]];
    const auto [a, s1] = away(e1);
    const auto [b, s2] = away(e2);
    const Eigen::VectorXi shift = s2 - s1;
    if (a == b && shift.isZero()) {
      skipped.push_back("vertex " + std::to_string(v) + ": merge would create a zero-shift loop");
      continue;
    }
    const Eigen::VectorXd xv = d.positions.col(v);
    const Eigen::VectorXd da = d.positions.col(a) + lattice.point(s1) - xv;
    const Eigen::VectorXd db = d.positions.col(b) + lattice.point(s2) - xv;
    const bool opposite = (da.normalized() + db.normalized()).norm() < tol::kSteiner;
    if (opposite_only && !opposite) continue;

    Draft trial = d;
    QuotientEdge replacement{a, b, shift, join_labels(e1.label, e2.label)};
    trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(incident[1]));
    trial.edges.erase(trial.edges.begin() + static_cast<std::ptrdiff_t>(incident[0]));
    trial.edges.insert(trial.edges.begin() + static_cast<std::ptrdiff_t>(incident[0]), replacement);
    trial.alive[static_cast<std::size_t>(v)] = false;

    // Star embedding can only change at a and b.
    QuotientGraph probe(net.dimension(), static_cast<int>(trial.alive.size()), trial.edges);
    if (!is_immersed(probe, trial.positions, lattice)) {
      skipped.push_back("vertex " + std::to_string(v) + ": merge would overlap two edges");
      continue;
    }
    d = std::move(trial);
    ++merged;
  }
  return {rebuild(d, net), merged, std::move(skipped)};
}

PeriodicNetwork canonicalize(const PeriodicNetwork& net) {
  return merge_degree_two(net, true).network;
}

Eigen::VectorXd fermat_point(const Eigen::VectorXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const double la = (b - c).norm();
  const double lb = (a - c).norm();
  const double lc = (a - b).norm();
  auto angle = [](const Eigen::VectorXd& at, const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    const Eigen::VectorXd u = (p - at).normalized();
    const Eigen::VectorXd w = (q - at).normalized();
    return std::acos(std::clamp(u.dot(w), -1.0, 1.0));
  };
  const double A = angle(a, b, c);
  const double B = angle(b, a, c);
  const double C = angle(c, a, b);
  constexpr double kLimit = 2.0 * std::numbers::pi / 3.0;
  if (!(la > 0 && lb > 0 && lc > 0) || !(A < kLimit && B < kLimit && C < kLimit)) {
    throw Error(ErrorCode::NumericalDegeneracy, "Fermat point needs a triangle with all angles below 120 degrees");
  }
  // First isogonic centre: barycentric weights a / sin(A + pi/3).
  const double third = std::numbers::pi / 3.0;
  const double wa = la / std::sin(A + third);
  const double wb = lb / std::sin(B + third);
  const double wc = lc / std::sin(C + third);
  return (wa * a + wb * b + wc * c) / (wa + wb + wc);
}

PeriodicNetwork split_high_degree(const PeriodicNetwork& net, int vertex) {
  const auto& graph = net.graph();
  if (vertex < 0 || vertex >= graph.vertex_count()) {
    throw Error(ErrorCode::InvalidParameter, "vertex out of range");
  }
  if (graph.degree(vertex) < 4) {
    throw Error(ErrorCode::InvalidParameter,
                "split_high_degree needs degree >= 4, vertex " + std::to_string(vertex) +
                    " has degree " + std::to_string(graph.degree(vertex)));
  }
  const auto ends = graph.ends(vertex);
  const Eigen::VectorXd p = net.position(vertex);
  std::vector<Eigen::VectorXd> dirs;
  for (const auto& end : ends) dirs.push_back((net.far_point(end) - p).normalized());

  // Smallest angle = largest cosine; ends are ordered by edge index so the
  // first strict maximum wins ties.
  constexpr double kCos120 = -0.5;
  std::size_t best_i = 0, best_j = 0;
  double best_cos = kCos120;
  bool found = false;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      if (ends[i].edge == ends[j].edge) continue;  // both ends of one loop
      const double c = dirs[i].dot(dirs[j]);
      if (c > best_cos + tol::kDirection) {
        best_cos = c;
        best_i = i;
        best_j = j;
        found = true;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::NumericalDegeneracy,
                "no pair of incident edges meets at less than 120 degrees at vertex " + std::to_string(vertex));
  }

  const auto& end_i = ends[best_i];
  const auto& end_j = ends[best_j];
  const Eigen::VectorXd qi = net.far_point(end_i);
  const Eigen::VectorXd qj = net.far_point(end_j);
  // Near 120 degrees at q_i or q_j the Fermat point drifts onto that vertex;
  // the isosceles sub-triangle at p keeps the tripod legs clear of it.
  auto far_angle_ok = [](const Eigen::VectorXd& at, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return (a - at).normalized().dot((b - at).normalized()) > -0.5 + 1e-3;
  };
  Eigen::VectorXd steiner;
  if (far_angle_ok(qi, p, qj) && far_angle_ok(qj, p, qi)) {
    steiner = fermat_point(p, qi, qj);
  } else {
    const double r = 0.5 * std::min((qi - p).norm(), (qj - p).norm());
    steiner = fermat_point(p, p + r * dirs[best_i], p + r * dirs[best_j]);
  }

  Draft d = draft_of(net);
  const int fresh = static_cast<int>(d.alive.size());
  d.positions.conservativeResize(Eigen::NoChange, fresh + 1);
  d.positions.col(fresh) = steiner;
  d.alive.push_back(true);
  const std::string label_i = graph.edge(end_i.edge).label;
  const std::string label_j = graph.edge(end_j.edge).label;
  const auto first = static_cast<std::ptrdiff_t>(std::min(end_i.edge, end_j.edge));
  const auto second = static_cast<std::ptrdiff_t>(std::max(end_i.edge, end_j.edge));
  d.edges.erase(d.edges.begin() + second);
  d.edges.erase(d.edges.begin() + first);
  d.edges.push_back({vertex, fresh, Eigen::VectorXi::Zero(net.dimension()), "split"});
  d.edges.push_back({fresh, end_i.other, end_i.shift, label_i});
  d.edges.push_back({fresh, end_j.other, end_j.shift, label_j});
  return rebuild(d, net);
}

SurgeryOutcome split_all_high_degree(const PeriodicNetwork& net) {
  PeriodicNetwork current = net;
  int applied = 0;
  for (;;) {
    int target = -1;
    for (int v = 0; v < current.graph().vertex_count(); ++v) {
      if (current.graph().degree(v) >= 4) {
        target = v;
        break;
      }
    }
    if (target < 0) break;
    current = split_high_degree(current, target);
    ++applied;
  }
  return {std::move(current), applied, {}};
}

PeriodicNetwork slide_double_edge(const PeriodicNetwork& net, int p, int q) {
  const auto& graph = net.graph();
  const int vcount = graph.vertex_count();
  if (p < 0 || q < 0 || p >= vcount || q >= vcount || p == q) {
    throw Error(ErrorCode::NotApplicable, "p and q must be distinct vertices");
  }
  if (graph.multiplicity(p, q) != 2 || graph.degree(p) != 3 || graph.degree(q) != 3) {
    throw Error(ErrorCode::NotApplicable, "p and q must be degree-3 vertices joined by a double edge");
  }
  auto outer_end = [&](int v, int partner) {
    for (const auto& end : graph.ends(v)) {
      if (end.other != partner) {
        if (end.other == v) throw Error(ErrorCode::NotApplicable, "outer edge is a loop");
        return end;
      }
    }
    throw Error(ErrorCode::NotApplicable, "no outer edge");
  };
  const EdgeEnd r_end = outer_end(p, q);
  const EdgeEnd s_end = outer_end(q, p);
  const Eigen::VectorXd dr = net.far_point(r_end) - net.position(p);
  const Eigen::VectorXd ds = net.far_point(s_end) - net.position(q);
  if ((dr.normalized() + ds.normalized()).norm() > tol::kSteiner) {
    throw Error(ErrorCode::NotApplicable, "outer edges are not antiparallel");
  }

  const int r = r_end.other;
  Draft d = draft_of(net);
  d.positions.col(q) += dr;
  // p now sits at x_r + Lambda * s_pr; re-attach its double edges to r.
  std::vector<QuotientEdge> edges;
  for (int i = 0; i < graph.edge_count(); ++i) {
    if (i == r_end.edge) continue;
    QuotientEdge e = graph.edge(i);
    if (e.tail == p) {
      e.tail = r;
      e.shift -= r_end.shift;
    }
    if (e.head == p) {
      e.head = r;
      e.shift += r_end.shift;
    }
    edges.push_back(std::move(e));
  }
  d.edges = std::move(edges);
  d.alive[static_cast<std::size_t>(p)] = false;
  return rebuild(d, net);
}

}  // namespace steinernet
