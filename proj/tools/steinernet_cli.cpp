// steinernet command-line tool. Every subcommand writes JSON (or OBJ for
// `export`) to --out, or to stdout when --out is absent.
//
// exit codes: 0 ok, 2 validation failure, 3 no convergence, 4 I/O or parse error

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinernet/config.hpp"
#include "steinernet/errors.hpp"
#include "steinernet/families.hpp"
#include "steinernet/homotopy.hpp"
#include "steinernet/io.hpp"
#include "steinernet/optimizer.hpp"
#include "steinernet/symmetric.hpp"
#include "steinernet/tolerances.hpp"

namespace sn = steinernet;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNoConvergence = 3;
constexpr int kExitIo = 4;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::string config_path;
  std::optional<int> precision;
  sn::ToolConfig config;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    sn::write_text_file(out, text);
  }
}

void emit_json(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

sn::PeriodicNetwork load_network(const std::string& path) {
  return sn::network_from_json(sn::read_json_file(path));
}

// Lagrange residual of the recognized family, evaluated at lengths scaled to L = 1.
std::optional<json> lagrange_json(const sn::PeriodicNetwork& net, sn::FamilyKind kind, int digits) {
  const auto lengths = sn::labelled_lengths(net);
  if (!lengths || kind == sn::FamilyKind::Unknown) return std::nullopt;
  const Eigen::VectorXd x = *lengths / lengths->sum();
  sn::LagrangeReport report;
  if (kind == sn::FamilyKind::Hexagonal && x.size() == 3) {
    report = sn::hex_lagrange_residual(Eigen::Vector3d(x));
  } else if (kind == sn::FamilyKind::Srs && x.size() == 6) {
    report = sn::srs_lagrange_residual(sn::Vector6d(x));
  } else if (kind == sn::FamilyKind::Ths && x.size() == 6) {
    Eigen::Matrix<double, 5, 1> z;
    z << x[0], x[1], x[2], x[3], x[4] + x[5];
    report = sn::ths_lagrange_residual(z);
  } else {
    return std::nullopt;
  }
  json gradient = json::array();
  for (Eigen::Index i = 0; i < report.gradient.size(); ++i) {
    gradient.push_back(sn::round_significant(report.gradient[i], digits));
  }
  return json{{"gradient", gradient},
              {"multiplier", sn::round_significant(report.multiplier, digits)},
              {"residual", sn::round_significant(report.residual, digits)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and optimize lattice-periodic Steiner networks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "steinernet 1.0.0");

  Globals g;
  app.add_option("--seed", g.seed, "master seed for randomized starts");
  app.add_option("--config", g.config_path, "key = value configuration file");
  app.add_option("--precision", g.precision, "significant digits in output (6..17)")->check(CLI::Range(6, 17));

  // construct
  auto* construct = app.add_subcommand("construct", "build a family network from edge lengths");
  std::string family;
  std::vector<double> lengths;
  double alpha = std::numbers::pi / 2;
  int chirality = 1;
  std::string out;
  construct->add_option("--family", family, "hex, ths or srs")->required()->check(CLI::IsMember({"hex", "ths", "srs"}));
  construct->add_option("--lengths", lengths, "edge lengths x1 x2 ...")->required();
  construct->add_option("--alpha", alpha, "ths tangent-plane angle in (0, pi)");
  construct->add_option("--chirality", chirality, "srs handedness")->check(CLI::IsMember({1, -1}));
  construct->add_option("--out", out, "output network JSON");

  // verify
  auto* verify = app.add_subcommand("verify", "check topology, balancing and ratio of a network");
  std::string net_path;
  bool require_steiner = false;
  verify->add_option("--net", net_path, "network JSON")->required();
  verify->add_flag("--require-steiner", require_steiner, "fail unless the network is a Steiner network");
  verify->add_option("--out", out, "output report JSON");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "maximize family volume or minimize embedding length");
  std::string mode;
  std::string lattice_path;
  std::optional<double> tol;
  std::optional<int> max_iter;
  int starts = 32;
  optimize->add_option("--mode", mode, "simplex or embedding")->required()->check(CLI::IsMember({"simplex", "embedding"}));
  optimize->add_option("--family", family, "hex, ths-reduced or srs (simplex mode)");
  optimize->add_option("--net", net_path, "network JSON (embedding mode)");
  optimize->add_option("--lattice", lattice_path, "lattice JSON overriding the network's lattice");
  optimize->add_option("--seed", g.seed, "master seed");
  optimize->add_option("--tol", tol, "convergence tolerance")->check(CLI::PositiveNumber);
  optimize->add_option("--max-iter", max_iter, "iteration cap")->check(CLI::PositiveNumber);
  optimize->add_option("--starts", starts, "multi-start count (simplex mode)")->check(CLI::PositiveNumber);
  optimize->add_option("--out", out, "output report JSON");

  // homotopy
  auto* homotopy = app.add_subcommand("homotopy", "length profile of the ths to K4 deformation");
  double xi = 0.25;
  int samples = 101;
  std::string frames_dir;
  homotopy->add_option("--xi", xi, "x5 of the starting ths network, in (0, 1/2)");
  homotopy->add_option("--samples", samples, "odd sample count >= 3");
  homotopy->add_option("--out", out, "output profile JSON");
  homotopy->add_option("--export-frames", frames_dir, "directory for one network JSON per sample");

  // ratio
  auto* ratio = app.add_subcommand("ratio", "compare L^n/V with the reference bounds");
  ratio->add_option("--net", net_path, "network JSON")->required();
  ratio->add_option("--out", out, "output report JSON");

  // export
  auto* exporter = app.add_subcommand("export", "write lifted segments as OBJ lines");
  std::vector<int> cells{1};
  exporter->add_option("--net", net_path, "network JSON")->required();
  exporter->add_option("--cells", cells, "cells per axis: one count for a cube or one per axis");
  exporter->add_option("--out", out, "output OBJ file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (!g.config_path.empty()) g.config = sn::load_config(g.config_path);
    const std::uint64_t seed = g.seed.value_or(g.config.seed);
    const int digits = g.precision.value_or(g.config.output_precision);

    if (*construct) {
      const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(lengths.data(), static_cast<Eigen::Index>(lengths.size()));
      const Eigen::Index need = family == "hex" ? 3 : 6;
      if (x.size() != need) {
        std::cerr << "error: " << family << " needs " << need << " lengths\n";
        return kExitValidation;
      }
      std::optional<sn::PeriodicNetwork> net;
      if (family == "hex") {
        net = sn::construct_hexagonal({Eigen::Vector3d(x)});
      } else if (family == "ths") {
        net = sn::construct_ths({sn::Vector6d(x), alpha});
      } else {
        net = sn::construct_srs({sn::Vector6d(x), static_cast<sn::Chirality>(chirality)});
      }
      emit_json(sn::network_to_json(*net, digits), out);
      return kExitOk;
    }

    if (*verify) {
      const auto net = load_network(net_path);
      const auto validation = sn::validate_quotient(net.graph(), require_steiner);
      const auto metrics = sn::network_metrics(net);
      const auto& residuals = metrics.balancing_residual;
      double max_residual = 0.0;
      for (double r : residuals) max_residual = std::max(max_residual, r);
      const double steiner_tol = g.config.tolerance("steiner", sn::tol::kSteiner);
      const bool steiner = sn::is_steiner(net, steiner_tol);
      const auto kind = sn::classify_quotient(net.graph());
      json res = json::array();
      for (double r : residuals) res.push_back(sn::round_significant(r, digits));
      json report = {{"validation", sn::validation_to_json(validation)},
                     {"length", sn::round_significant(metrics.length, digits)},
                     {"volume", sn::round_significant(metrics.volume, digits)},
                     {"ratio", sn::round_significant(metrics.ratio, digits)},
                     {"balancing_residual", sn::round_significant(max_residual, digits)},
                     {"vertex_residuals", res},
                     {"steiner", steiner},
                     {"family", sn::to_string(kind)}};
      if (auto lagrange = lagrange_json(net, kind, digits)) report["lagrange"] = *lagrange;
      emit_json(report, out);
      const bool ok = validation.passed && (!require_steiner || steiner);
      return ok ? kExitOk : kExitValidation;
    }

    if (*optimize) {
      sn::OptimizationReport report;
      if (mode == "simplex") {
        if (family.empty()) {
          std::cerr << "error: simplex mode needs --family\n";
          return kExitValidation;
        }
        sn::SimplexProblem problem;
        problem.family = sn::parse_simplex_family(family);
        problem.seed = seed;
        problem.starts = starts;
        problem.tolerance = tol.value_or(g.config.tolerance("simplex", problem.tolerance));
        if (max_iter) problem.max_iterations = *max_iter;
        report = sn::maximize_volume_on_simplex(problem);
      } else {
        if (net_path.empty()) {
          std::cerr << "error: embedding mode needs --net\n";
          return kExitValidation;
        }
        const auto net = load_network(net_path);
        sn::EmbeddingProblem problem{net.graph(),
                                     lattice_path.empty() ? net.lattice() : sn::lattice_from_json(sn::read_json_file(lattice_path))};
        problem.initial_positions = net.positions();
        problem.seed = seed;
        problem.tolerance = tol.value_or(g.config.tolerance("embedding", problem.tolerance));
        if (max_iter) problem.max_iterations = *max_iter;
        report = sn::minimize_embedding(problem);
      }
      json doc = sn::optimization_to_json(report, digits);
      doc["mode"] = mode;
      doc["seed"] = seed;
      emit_json(doc, out);
      return report.converged ? kExitOk : kExitNoConvergence;
    }

    if (*homotopy) {
      const auto profile = sn::homotopy_length_profile(xi, samples);
      json rows = json::array();
      for (std::size_t i = 0; i < profile.size(); ++i) {
        const auto& s = profile[i];
        rows.push_back({{"t", sn::round_significant(s.t, digits)},
                        {"length", sn::round_significant(s.length, digits)},
                        {"volume", sn::round_significant(s.volume, digits)}});
        if (!frames_dir.empty()) {
          char name[32];
          std::snprintf(name, sizeof name, "frame_%04zu.json", i);
          const auto net = sn::homotopy_network({xi, s.t});
          sn::write_text_file(std::filesystem::path(frames_dir) / name,
                              sn::network_to_json(net, digits).dump(2) + "\n");
        }
      }
      emit_json({{"xi", sn::round_significant(xi, digits)}, {"samples", samples}, {"profile", rows}}, out);
      return kExitOk;
    }

    if (*ratio) {
      emit_json(sn::ratio_to_json(sn::report_ratio(load_network(net_path)), digits), out);
      return kExitOk;
    }

    if (*exporter) {
      const auto net = load_network(net_path);
      const int n = net.dimension();
      sn::CellRange range;
      if (cells.size() == 1) {
        range = sn::CellRange::cube(n, cells[0]);
      } else if (static_cast<int>(cells.size()) == n) {
        range.lo = Eigen::VectorXi::Zero(n);
        range.hi = Eigen::Map<const Eigen::VectorXi>(cells.data(), n);
      } else {
        std::cerr << "error: --cells takes 1 or " << n << " values\n";
        return kExitValidation;
      }
      emit(sn::export_obj(net, range, digits), out);
      return kExitOk;
    }
  } catch (const sn::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case sn::ErrorCode::ParseError:
      case sn::ErrorCode::IoError:
        return kExitIo;
      default:
        return kExitValidation;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
