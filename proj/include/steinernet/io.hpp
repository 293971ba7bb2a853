#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "steinernet/optimizer.hpp"
#include "steinernet/periodic_network.hpp"
#include "steinernet/quotient_graph.hpp"

namespace steinernet {

/// Significant digits used for floats unless configured otherwise.
inline constexpr int kDefaultPrecision = 17;

/// Rounds to `digits` significant decimal digits (6..17); 17 is lossless.
double round_significant(double value, int digits);
/// printf-style %.{digits}g.
std::string format_significant(double value, int digits);

// Network interchange format:
// {"dimension": n, "generators": [[...], ...], "vertices": [[...], ...],
//  "edges": [{"tail": i, "head": j, "shift": [...], "label": "e1"}, ...]}
// generators[i] is g_{i+1}; vertices[v] the representative position of v.

nlohmann::json network_to_json(const PeriodicNetwork& net, int digits = kDefaultPrecision);
/// Throws ParseError for malformed documents; geometric invariants surface as
/// the usual library errors. With `canonical`, degree-2 vertices with opposite
/// edges are merged after parsing.
PeriodicNetwork network_from_json(const nlohmann::json& doc, bool canonical = false);

/// {"dimension": n, "generators": [[...], ...]}; a network document also parses.
nlohmann::json lattice_to_json(const Lattice& lattice, int digits = kDefaultPrecision);
Lattice lattice_from_json(const nlohmann::json& doc);

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

nlohmann::json validation_to_json(const QuotientValidation& report);
nlohmann::json optimization_to_json(const OptimizationReport& report, int digits = kDefaultPrecision);

struct RatioReport {
  int dimension = 0;
  double length = 0.0;
  double volume = 0.0;
  double ratio = 0.0;
  double hex_bound = 0.0;
  double ths_bound = 0.0;
  double srs_bound = 0.0;
  /// 2 sqrt3 for n = 2, 27 / sqrt2 for n = 3.
  double applicable_bound = 0.0;
  double margin = 0.0;          // ratio - applicable_bound
  double margin_to_ths = 0.0;   // ratio - 81/4
  double margin_to_srs = 0.0;   // ratio - 27/sqrt2
};

/// Compares L^n / V against the reference bounds. Throws DegenerateLattice on zero volume.
RatioReport report_ratio(const PeriodicNetwork& net);
nlohmann::json ratio_to_json(const RatioReport& report, int digits = kDefaultPrecision);

/// Wavefront-style line geometry: two `v x y z` records per segment (no
/// deduplication) then one `l i j` record per segment, 1-based. Vertices
/// are ordered cell-major, then by edge index. 2D networks are written at z = 0.
std::string export_obj(const PeriodicNetwork& net, const CellRange& cells,
                       int digits = kDefaultPrecision);

}  // namespace steinernet
