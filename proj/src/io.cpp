#include "steinernet/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "steinernet/errors.hpp"
#include "steinernet/surgery.hpp"
#include "steinernet/symmetric.hpp"

namespace steinernet {

using nlohmann::json;

namespace {

void check_digits(int digits) {
  if (digits < 6 || digits > 17) {
    throw Error(ErrorCode::InvalidParameter, "precision must lie in [6, 17]");
  }
}

json vector_json(const Eigen::VectorXd& v, int digits) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(round_significant(v[i], digits));
  return arr;
}

Eigen::VectorXd parse_vector(const json& arr, int expected, const char* what) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != expected) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array of length " +
                                           std::to_string(expected));
  }
  Eigen::VectorXd v(expected);
  for (int i = 0; i < expected; ++i) {
    if (!arr[static_cast<std::size_t>(i)].is_number()) {
      throw Error(ErrorCode::ParseError, std::string(what) + " entries must be numbers");
    }
    v[i] = arr[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

int parse_dimension(const json& doc) {
  if (!doc.is_object() || !doc.contains("dimension") || !doc["dimension"].is_number_integer()) {
    throw Error(ErrorCode::ParseError, "document needs an integer 'dimension'");
  }
  const int n = doc["dimension"].get<int>();
  if (n <= 0) throw Error(ErrorCode::ParseError, "dimension must be positive");
  return n;
}

Eigen::MatrixXd parse_generators(const json& doc, int n) {
  if (!doc.contains("generators") || !doc["generators"].is_array() ||
      static_cast<int>(doc["generators"].size()) != n) {
    throw Error(ErrorCode::ParseError, "'generators' must list n vectors");
  }
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i) g.col(i) = parse_vector(doc["generators"][static_cast<std::size_t>(i)], n, "generator");
  return g;
}

}  // namespace

double round_significant(double value, int digits) {
  check_digits(digits);
  if (digits == 17 || !std::isfinite(value)) return value;
  return std::strtod(format_significant(value, digits).c_str(), nullptr);
}

std::string format_significant(double value, int digits) {
  check_digits(digits);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

json lattice_to_json(const Lattice& lattice, int digits) {
  json gens = json::array();
  for (int i = 0; i < lattice.dimension(); ++i) gens.push_back(vector_json(lattice.generator(i), digits));
  return {{"dimension", lattice.dimension()}, {"generators", gens}};
}

Lattice lattice_from_json(const json& doc) {
  const int n = parse_dimension(doc);
  return Lattice(parse_generators(doc, n));
}

json network_to_json(const PeriodicNetwork& net, int digits) {
  json doc = lattice_to_json(net.lattice(), digits);
  json vertices = json::array();
  for (int v = 0; v < net.graph().vertex_count(); ++v) vertices.push_back(vector_json(net.position(v), digits));
  json edges = json::array();
  for (const auto& e : net.graph().edges()) {
    json shift = json::array();
    for (Eigen::Index i = 0; i < e.shift.size(); ++i) shift.push_back(e.shift[i]);
    json item = {{"tail", e.tail}, {"head", e.head}, {"shift", shift}};
    if (!e.label.empty()) item["label"] = e.label;
    edges.push_back(std::move(item));
  }
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

PeriodicNetwork network_from_json(const json& doc, bool canonical) {
  const int n = parse_dimension(doc);
  Lattice lattice(parse_generators(doc, n));
  if (!doc.contains("vertices") || !doc["vertices"].is_array() || doc["vertices"].empty()) {
    throw Error(ErrorCode::ParseError, "'vertices' must be a non-empty array");
  }
  const auto& verts = doc["vertices"];
  Eigen::MatrixXd positions(n, static_cast<Eigen::Index>(verts.size()));
  for (std::size_t v = 0; v < verts.size(); ++v) {
    positions.col(static_cast<Eigen::Index>(v)) = parse_vector(verts[v], n, "vertex");
  }
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorCode::ParseError, "'edges' must be an array");
  }
  std::vector<QuotientEdge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_object() || !item.contains("tail") || !item.contains("head") || !item.contains("shift") ||
        !item["tail"].is_number_integer() || !item["head"].is_number_integer() || !item["shift"].is_array() ||
        static_cast<int>(item["shift"].size()) != n) {
      throw Error(ErrorCode::ParseError, "each edge needs integer 'tail', 'head' and an n-vector 'shift'");
    }
    QuotientEdge e;
    e.tail = item["tail"].get<int>();
    e.head = item["head"].get<int>();
    e.shift.resize(n);
    for (int i = 0; i < n; ++i) {
      const auto& s = item["shift"][static_cast<std::size_t>(i)];
      if (!s.is_number_integer()) throw Error(ErrorCode::ParseError, "shift entries must be integers");
      e.shift[i] = s.get<int>();
    }
    if (item.contains("label")) {
      if (!item["label"].is_string()) throw Error(ErrorCode::ParseError, "label must be a string");
      e.label = item["label"].get<std::string>();
    }
    edges.push_back(std::move(e));
  }
  QuotientGraph graph(n, static_cast<int>(verts.size()), std::move(edges));
  PeriodicNetwork net(std::move(graph), std::move(positions), std::move(lattice));
  return canonical ? canonicalize(net) : net;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

json validation_to_json(const QuotientValidation& r) {
  json pairs = json::array();
  for (const auto& [a, b] : r.multi_edge_pairs) pairs.push_back({a, b});
  return {{"dimension", r.dimension},
          {"connected", r.connected},
          {"circuit_rank", r.circuit_rank},
          {"shift_rank", r.shift_rank},
          {"loop_edges", r.loop_edges},
          {"multi_edge_pairs", pairs},
          {"irregular_vertices", r.irregular_vertices},
          {"simple", r.simple},
          {"passed", r.passed},
          {"issues", r.issues}};
}

json optimization_to_json(const OptimizationReport& r, int digits) {
  json trace = json::array();
  for (double v : r.trace) trace.push_back(round_significant(v, digits));
  return {{"argpoint", vector_json(r.argpoint, digits)},
          {"objective", round_significant(r.objective, digits)},
          {"ratio", round_significant(r.ratio, digits)},
          {"lagrange_residual", round_significant(r.lagrange_residual, digits)},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"status", to_string(r.status)},
          {"start_index", r.start_index},
          {"collided_edges", r.collided_edges},
          {"flat_directions", r.flat_directions},
          {"trace", trace}};
}

RatioReport report_ratio(const PeriodicNetwork& net) {
  RatioReport r;
  r.dimension = net.dimension();
  r.length = network_length(net);
  r.volume = lattice_volume(net.lattice());
  r.ratio = std::pow(r.length, r.dimension) / r.volume;
  r.hex_bound = kHexRatioBound;
  r.ths_bound = kThsRatioBound;
  r.srs_bound = kSrsRatioBound;
  if (r.dimension == 2) {
    r.applicable_bound = kHexRatioBound;
  } else if (r.dimension == 3) {
    r.applicable_bound = kSrsRatioBound;
  } else {
    throw Error(ErrorCode::InvalidParameter, "ratio bounds are known for n = 2 and n = 3 only");
  }
  r.margin = r.ratio - r.applicable_bound;
  r.margin_to_ths = r.ratio - kThsRatioBound;
  r.margin_to_srs = r.ratio - kSrsRatioBound;
  return r;
}

json ratio_to_json(const RatioReport& r, int digits) {
  auto f = [digits](double v) { return round_significant(v, digits); };
  return {{"dimension", r.dimension},
          {"length", f(r.length)},
          {"volume", f(r.volume)},
          {"ratio", f(r.ratio)},
          {"bounds", {{"hex", f(r.hex_bound)}, {"ths", f(r.ths_bound)}, {"srs", f(r.srs_bound)}}},
          {"applicable_bound", f(r.applicable_bound)},
          {"margin", f(r.margin)},
          {"margin_to_ths", f(r.margin_to_ths)},
          {"margin_to_srs", f(r.margin_to_srs)}};
}

std::string export_obj(const PeriodicNetwork& net, const CellRange& cells, int digits) {
  check_digits(digits);
  if (net.dimension() != 2 && net.dimension() != 3) {
    throw Error(ErrorCode::InvalidParameter, "OBJ export supports n = 2 or n = 3");
  }
  const auto segments = lift_tile(net, cells);
  std::ostringstream out;
  auto write_point = [&](const Eigen::VectorXd& p) {
    out << "v " << format_significant(p[0], digits) << ' ' << format_significant(p[1], digits) << ' '
        << format_significant(net.dimension() == 3 ? p[2] : 0.0, digits) << '\n';
  };
  for (const auto& s : segments) {
    write_point(s.from);
    write_point(s.to);
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    out << "l " << 2 * i + 1 << ' ' << 2 * i + 2 << '\n';
  }
  return out.str();
}

}  // namespace steinernet
