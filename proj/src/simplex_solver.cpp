#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "steinernet/errors.hpp"
#include "steinernet/families.hpp"
#include "steinernet/optimizer.hpp"
#include "steinernet/symmetric.hpp"

namespace steinernet {

namespace {

struct Objective {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

Objective objective_for(SimplexFamily family) {
  switch (family) {
    case SimplexFamily::Hexagonal:
      return {[](const Eigen::VectorXd& x) { return hex_area_formula(x); },
              [](const Eigen::VectorXd& x) -> Eigen::VectorXd { return hex_area_gradient(x); }};
    case SimplexFamily::ThsReduced:
      return {[](const Eigen::VectorXd& x) { return ths_reduced_volume(x); },
              [](const Eigen::VectorXd& x) -> Eigen::VectorXd { return ths_reduced_gradient(x); }};
    case SimplexFamily::Srs:
      return {[](const Eigen::VectorXd& x) { return srs_volume_formula(x); },
              [](const Eigen::VectorXd& x) -> Eigen::VectorXd { return srs_volume_gradient(x); }};
  }
  throw Error(ErrorCode::InvalidParameter, "unknown simplex family");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

Eigen::VectorXd random_simplex_point(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> exp1(1.0);
  Eigen::VectorXd x(m);
  for (int i = 0; i < m; ++i) x[i] = exp1(rng);
  return x / x.sum();
}

// The family gradients are quadratic, so central differences give the
// Hessian up to rounding.
Eigen::MatrixXd hessian(const Objective& f, const Eigen::VectorXd& x) {
  constexpr double h = 1e-3;
  const auto m = x.size();
  Eigen::MatrixXd H(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    Eigen::VectorXd up = x, down = x;
    up[j] += h;
    down[j] -= h;
    H.col(j) = (f.gradient(up) - f.gradient(down)) / (2.0 * h);
  }
  return 0.5 * (H + H.transpose());
}

// Newton iteration on grad V = lambda 1, sum x = 1 restricted to the support
// of x. Once the objective is flat to rounding, projected ascent can no
// longer see progress but the gradient still can.
void newton_polish(const Objective& f, Eigen::VectorXd& x, double& value, double& residual,
                   std::vector<double>& trace, int& it, double tolerance, int max_iterations) {
  std::vector<Eigen::Index> support;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x[i] > 1e-10) support.push_back(i);
  }
  const auto k = static_cast<Eigen::Index>(support.size());
  if (k < 2) return;
  auto support_residual = [&](const Eigen::VectorXd& point) {
    const Eigen::VectorXd g = f.gradient(point);
    double lo = g[support[0]], hi = lo;
    for (auto i : support) {
      lo = std::min(lo, g[i]);
      hi = std::max(hi, g[i]);
    }
    return hi - lo;
  };
  double current = support_residual(x);
  for (int round = 0; round < 30 && residual >= tolerance && it < max_iterations; ++round) {
    const Eigen::VectorXd g = f.gradient(x);
    const Eigen::MatrixXd H = hessian(f, x);
    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(k + 1, k + 1);
    Eigen::VectorXd rhs(k + 1);
    double lambda = 0.0;
    for (auto i : support) lambda += g[i];
    lambda /= static_cast<double>(k);
    for (Eigen::Index a = 0; a < k; ++a) {
      for (Eigen::Index b = 0; b < k; ++b) K(a, b) = H(support[a], support[b]);
      K(a, k) = -1.0;
      K(k, a) = 1.0;
      rhs[a] = lambda - g[support[a]];
    }
    rhs[k] = 1.0 - x.sum();
    const Eigen::VectorXd delta = K.fullPivLu().solve(rhs);
    if (!delta.allFinite()) return;
    Eigen::VectorXd trial = x;
    for (Eigen::Index a = 0; a < k; ++a) trial[support[a]] += delta[a];
    if ((trial.array() < 0.0).any()) return;
    trial /= trial.sum();
    const double trial_residual = support_residual(trial);
    const double trial_value = f.value(trial);
    // Rounding-level drops in the objective are tolerated; the trace slack covers them.
    if (!(trial_residual < current) || trial_value < value - 1e-14 * std::abs(value)) return;
    x = trial;
    value = trial_value;
    current = trial_residual;
    const Eigen::VectorXd full = f.gradient(x);
    residual = full.maxCoeff() - full.minCoeff();
    trace.push_back(value);
    ++it;
  }
}

}  // namespace

const char* to_string(SimplexFamily family) {
  switch (family) {
    case SimplexFamily::Hexagonal: return "hex";
    case SimplexFamily::ThsReduced: return "ths-reduced";
    case SimplexFamily::Srs: return "srs";
  }
  return "unknown";
}

SimplexFamily parse_simplex_family(const std::string& name) {
  if (name == "hex") return SimplexFamily::Hexagonal;
  if (name == "ths" || name == "ths-reduced") return SimplexFamily::ThsReduced;
  if (name == "srs") return SimplexFamily::Srs;
  throw Error(ErrorCode::InvalidParameter, "unknown family '" + name + "'");
}

int simplex_dimension(SimplexFamily family) {
  switch (family) {
    case SimplexFamily::Hexagonal: return 3;
    case SimplexFamily::ThsReduced: return 5;
    case SimplexFamily::Srs: return 6;
  }
  return 0;
}

const char* to_string(SolverStatus status) {
  switch (status) {
    case SolverStatus::Converged: return "converged";
    case SolverStatus::NotConverged: return "not_converged";
    case SolverStatus::VertexCollision: return "vertex_collision";
  }
  return "unknown";
}

std::uint64_t derive_seed(std::uint64_t master, int index) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

Eigen::VectorXd project_to_simplex(const Eigen::VectorXd& v) {
  const auto m = v.size();
  if (m == 0) throw Error(ErrorCode::InvalidParameter, "cannot project an empty vector");
  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  // Descending by value, ties by index.
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return v[a] > v[b]; });
  double cumulative = 0.0;
  double theta = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    cumulative += v[order[static_cast<std::size_t>(k)]];
    const double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (v[order[static_cast<std::size_t>(k)]] - candidate > 0.0) theta = candidate;
  }
  return (v.array() - theta).max(0.0).matrix();
}

OptimizationReport maximize_volume_from(SimplexFamily family, const Eigen::VectorXd& start,
                                        double tolerance, int max_iterations) {
  if (start.size() != simplex_dimension(family)) {
    throw Error(ErrorCode::InvalidParameter, "start point has the wrong dimension");
  }
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidParameter, "tolerance must be positive");

  const Objective f = objective_for(family);
  constexpr double kArmijo = 1e-4;

  OptimizationReport report;
  Eigen::VectorXd x = project_to_simplex(start);
  double value = f.value(x);
  report.trace.push_back(value);
  double step = 1.0;

  auto residual_at = [&](const Eigen::VectorXd& point) {
    const Eigen::VectorXd g = f.gradient(point);
    return g.maxCoeff() - g.minCoeff();
  };

  double residual = residual_at(x);
  int it = 0;
  while (residual >= tolerance && it < max_iterations) {
    const Eigen::VectorXd g = f.gradient(x);
    bool accepted = false;
    for (int halvings = 0; halvings < 80; ++halvings) {
      const Eigen::VectorXd trial = project_to_simplex(x + step * g);
      const double trial_value = f.value(trial);
      if (trial_value >= value + kArmijo * g.dot(trial - x) && trial_value >= value) {
        accepted = (trial - x).norm() > 0.0;
        x = trial;
        value = trial_value;
        break;
      }
      step *= 0.5;
    }
    ++it;
    if (!accepted) break;  // stagnated at floating-point resolution
    report.trace.push_back(value);
    residual = residual_at(x);
    step *= 2.0;
    if (residual < 1e-6) break;  // close enough for Newton
  }
  newton_polish(f, x, value, residual, report.trace, it, tolerance, max_iterations);

  report.argpoint = x;
  report.objective = value;
  report.ratio = std::pow(x.sum(), family == SimplexFamily::Hexagonal ? 2 : 3) / value;
  report.lagrange_residual = residual;
  report.iterations = it;
  report.converged = residual < tolerance;
  report.status = report.converged ? SolverStatus::Converged : SolverStatus::NotConverged;
  return report;
}

std::vector<OptimizationReport> maximize_volume_runs(const SimplexProblem& problem) {
  if (problem.starts <= 0) throw Error(ErrorCode::InvalidParameter, "starts must be positive");
  if (problem.max_iterations <= 0) {
    throw Error(ErrorCode::InvalidParameter, "max_iterations must be positive");
  }
  const int m = simplex_dimension(problem.family);
  std::vector<OptimizationReport> runs;
  runs.reserve(static_cast<std::size_t>(problem.starts));
  for (int i = 0; i < problem.starts; ++i) {
    const Eigen::VectorXd start = random_simplex_point(m, derive_seed(problem.seed, i));
    auto run = maximize_volume_from(problem.family, start, problem.tolerance, problem.max_iterations);
    run.start_index = i;
    runs.push_back(std::move(run));
  }
  return runs;
}

OptimizationReport maximize_volume_on_simplex(const SimplexProblem& problem) {
  auto runs = maximize_volume_runs(problem);
  auto best = std::min_element(runs.begin(), runs.end(), [](const auto& a, const auto& b) {
    if (a.objective != b.objective) return a.objective > b.objective;
    return a.start_index < b.start_index;
  });
  return std::move(*best);
}

}  // namespace steinernet
