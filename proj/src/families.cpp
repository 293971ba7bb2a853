#include "steinernet/families.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "steinernet/errors.hpp"

namespace steinernet {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

template <int N>
void require_positive(const Eigen::Matrix<double, N, 1>& x, const char* family) {
  for (int i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !(x[i] > 0.0)) {
      throw Error(ErrorCode::InvalidParameter, std::string(family) + " edge length x" +
                                                   std::to_string(i + 1) + " must be positive");
    }
  }
}

QuotientEdge make_edge(int tail, int head, Eigen::VectorXi shift, int label) {
  return {tail, head, std::move(shift), "e" + std::to_string(label)};
}

Eigen::VectorXi shift2(int a, int b) { return Eigen::Vector2i(a, b); }
Eigen::VectorXi shift3(int a, int b, int c) { return Eigen::Vector3i(a, b, c); }

struct HexPoints {
  Eigen::Vector2d p0, p1, p2, p3;
};

HexPoints hex_points(const HexParams& p) {
  require_positive<3>(p.lengths, "hexagonal");
  const auto& x = p.lengths;
  return {Eigen::Vector2d::Zero(), x[0] * Eigen::Vector2d(1.0, 0.0),
          x[1] * Eigen::Vector2d(-0.5, kSqrt3 / 2), x[2] * Eigen::Vector2d(-0.5, -kSqrt3 / 2)};
}

struct ThsPoints {
  Eigen::Vector3d p0, p1, p2, p3, p4, p5, p6;
};

ThsPoints ths_points(const ThsParams& p) {
  require_positive<6>(p.lengths, "ths");
  if (!std::isfinite(p.alpha) || !(p.alpha > 0.0) || !(p.alpha < std::numbers::pi)) {
    throw Error(ErrorCode::InvalidParameter, "ths angle alpha must lie in (0, pi)");
  }
  const auto& x = p.lengths;
  const double c = std::cos(p.alpha);
  const double s = std::sin(p.alpha);
  ThsPoints t;
  t.p0 = x[0] * Eigen::Vector3d(-0.5, -kSqrt3 / 2, 0.0);
  t.p1 = Eigen::Vector3d::Zero();
  t.p2 = x[4] * Eigen::Vector3d(1.0, 0.0, 0.0);
  t.p4 = x[1] * Eigen::Vector3d(-0.5, kSqrt3 / 2, 0.0);
  t.p3 = 0.5 * Eigen::Vector3d(x[2] + 2 * x[4], x[2] * kSqrt3 * c, x[2] * kSqrt3 * s);
  t.p5 = 0.5 * Eigen::Vector3d(x[3] + 2 * x[4], -x[3] * kSqrt3 * c, -x[3] * kSqrt3 * s);
  t.p6 = t.p3 + x[5] * Eigen::Vector3d(1.0, 0.0, 0.0);
  return t;
}

struct SrsPoints {
  Eigen::Vector3d p0, p1, p2, p3, p4, p5, p6;
};

SrsPoints srs_points(const SrsParams& p) {
  require_positive<6>(p.lengths, "srs");
  const auto& x = p.lengths;
  const double r23 = std::sqrt(2.0 / 3.0);
  SrsPoints s;
  s.p0 = Eigen::Vector3d::Zero();
  s.p1 = x[0] * Eigen::Vector3d(1.0, 0.0, 0.0);
  s.p2 = x[1] * Eigen::Vector3d(-0.5, kSqrt3 / 2, 0.0);
  s.p3 = x[2] * Eigen::Vector3d(-0.5, -kSqrt3 / 2, 0.0);
  s.p4 = s.p2 + x[3] * Eigen::Vector3d(0.0, 1.0 / kSqrt3, -r23);
  s.p5 = s.p3 + x[4] * Eigen::Vector3d(-0.5, -1.0 / (2 * kSqrt3), -r23);
  s.p6 = s.p1 + x[5] * Eigen::Vector3d(0.5, -1.0 / (2 * kSqrt3), -r23);
  if (p.chirality == Chirality::Left) {
    for (auto* q : {&s.p0, &s.p1, &s.p2, &s.p3, &s.p4, &s.p5, &s.p6}) (*q)[2] = -(*q)[2];
  }
  return s;
}

Eigen::MatrixXd columns(std::initializer_list<Eigen::VectorXd> cols) {
  Eigen::MatrixXd m(cols.begin()->size(), static_cast<Eigen::Index>(cols.size()));
  Eigen::Index j = 0;
  for (const auto& c : cols) m.col(j++) = c;
  return m;
}

}  // namespace

QuotientGraph hex_quotient_graph() {
  return QuotientGraph(2, 2,
                       {make_edge(0, 1, shift2(0, 0), 1), make_edge(0, 1, shift2(-1, 1), 2),
                        make_edge(0, 1, shift2(-1, 0), 3)});
}

QuotientGraph ths_quotient_graph() {
  return QuotientGraph(3, 4,
                       {make_edge(0, 1, shift3(0, 0, 0), 1), make_edge(1, 0, shift3(1, 0, 0), 2),
                        make_edge(2, 3, shift3(0, 0, 0), 3), make_edge(2, 3, shift3(0, 1, 0), 4),
                        make_edge(1, 2, shift3(0, 0, 0), 5), make_edge(3, 0, shift3(0, 0, 1), 6)});
}

QuotientGraph srs_quotient_graph() {
  return QuotientGraph(3, 4,
                       {make_edge(0, 1, shift3(0, 0, 0), 1), make_edge(0, 2, shift3(0, 0, 0), 2),
                        make_edge(0, 3, shift3(0, 0, 0), 3), make_edge(2, 3, shift3(0, 1, 0), 4),
                        make_edge(3, 1, shift3(0, 0, 1), 5), make_edge(1, 2, shift3(1, 0, 0), 6)});
}

Lattice hex_lattice(const HexParams& p) {
  const auto h = hex_points(p);
  return Lattice(columns({h.p1 - h.p3, h.p2 - h.p3}));
}

Lattice ths_lattice(const ThsParams& p) {
  const auto t = ths_points(p);
  return Lattice(columns({t.p4 - t.p0, t.p5 - t.p3, t.p6 - t.p0}));
}

Lattice srs_lattice(const SrsParams& p) {
  const auto s = srs_points(p);
  return Lattice(columns({s.p6 - s.p2, s.p4 - s.p3, s.p5 - s.p1}));
}

PeriodicNetwork construct_hexagonal(const HexParams& p) {
  const auto h = hex_points(p);
  return PeriodicNetwork(hex_quotient_graph(), columns({h.p0, h.p1}), hex_lattice(p));
}

PeriodicNetwork construct_ths(const ThsParams& p) {
  const auto t = ths_points(p);
  return PeriodicNetwork(ths_quotient_graph(), columns({t.p0, t.p1, t.p2, t.p3}), ths_lattice(p));
}

PeriodicNetwork construct_srs(const SrsParams& p) {
  const auto s = srs_points(p);
  return PeriodicNetwork(srs_quotient_graph(), columns({s.p0, s.p1, s.p2, s.p3}), srs_lattice(p));
}

const char* to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Hexagonal: return "hex";
    case FamilyKind::Ths: return "ths";
    case FamilyKind::Srs: return "srs";
    case FamilyKind::Unknown: return "unknown";
  }
  return "unknown";
}

FamilyKind classify_quotient(const QuotientGraph& graph) {
  if (!graph.loop_edges().empty() || !graph.is_connected()) return FamilyKind::Unknown;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    if (graph.degree(v) != 3) return FamilyKind::Unknown;
  }
  const auto multi = graph.multi_edge_pairs();
  if (graph.dimension() == 2 && graph.vertex_count() == 2) return FamilyKind::Hexagonal;
  if (graph.dimension() == 3 && graph.vertex_count() == 4) {
    if (multi.empty()) return FamilyKind::Srs;
    if (multi.size() == 2 && multi[0].first != multi[1].first && multi[0].first != multi[1].second &&
        multi[0].second != multi[1].first && multi[0].second != multi[1].second) {
      return FamilyKind::Ths;
    }
  }
  return FamilyKind::Unknown;
}

std::optional<Eigen::VectorXd> labelled_lengths(const PeriodicNetwork& net) {
  const int m = net.graph().edge_count();
  Eigen::VectorXd x = Eigen::VectorXd::Constant(m, -1.0);
  for (int i = 0; i < m; ++i) {
    const auto& label = net.graph().edge(i).label;
    if (label.size() < 2 || label[0] != 'e') return std::nullopt;
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(label.substr(1), &used);
      if (used != label.size() - 1) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (k < 1 || k > m || x[k - 1] >= 0.0) return std::nullopt;
    x[k - 1] = net.edge_length(i);
  }
  return x;
}

std::vector<Eigen::Vector3d> tangent_normals(const PeriodicNetwork& net) {
  if (net.dimension() != 3) {
    throw Error(ErrorCode::InvalidParameter, "tangent planes are defined for n = 3 only");
  }
  std::vector<Eigen::Vector3d> normals;
  for (int v = 0; v < net.graph().vertex_count(); ++v) {
    const auto ends = net.graph().ends(v);
    if (ends.size() < 2) throw Error(ErrorCode::InvalidParameter, "vertex of degree < 2 has no tangent plane");
    const Eigen::Vector3d a = net.far_point(ends[0]) - net.position(v);
    const Eigen::Vector3d b = net.far_point(ends[1]) - net.position(v);
    normals.push_back(a.cross(b).normalized());
  }
  return normals;
}

}  // namespace steinernet
