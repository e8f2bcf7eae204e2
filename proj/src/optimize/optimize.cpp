#include "energylab/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <optional>
#include <random>
#include <thread>

#include "energylab/specfun.hpp"

namespace energylab::optimize {

namespace {

constexpr int kMaxBacktracks = 60;
// Stop early when the objective has not moved beyond rounding for this many
// consecutive accepted steps.
constexpr int kStallWindow = 200;

struct Iterate {
  std::vector<double> x;
  double objective;  // sign * energy
  double energy;
  std::vector<double> grad;  // gradient of the objective, tangential
  double grad_norm;
};

double max_point_norm(const std::vector<double>& g, int dim) {
  double best = 0.0;
  for (std::size_t i = 0; i < g.size(); i += dim) {
    double n2 = 0.0;
    for (int a = 0; a < dim; ++a) n2 += g[i + a] * g[i + a];
    best = std::max(best, n2);
  }
  return std::sqrt(best);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

void normalize_points(std::vector<double>& x, int dim) {
  for (std::size_t i = 0; i < x.size(); i += dim) {
    double n2 = 0.0;
    for (int a = 0; a < dim; ++a) n2 += x[i + a] * x[i + a];
    const double inv = 1.0 / std::sqrt(n2);
    for (int a = 0; a < dim; ++a) x[i + a] *= inv;
  }
}

Iterate evaluate(int d, std::vector<double> x, const EnergyKind& kind, double sign) {
  const Configuration c(d, x);
  auto eg = energy::energy_and_gradient(c, kind);
  for (double& v : eg.gradient) v *= sign;
  const double gn = max_point_norm(eg.gradient, d + 1);
  return {std::move(x), sign * eg.energy, eg.energy, std::move(eg.gradient), gn};
}

// Nudges points that sit within 1e-9 of an earlier point by 1e-6 of tangential
// noise so the first kernel evaluation is finite.
void separate_near_coincident(std::vector<double>& x, int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5eedc0ffeeULL);
  std::normal_distribution<double> normal;
  const std::size_t n = x.size() / dim;
  for (int pass = 0; pass < 8; ++pass) {
    bool moved = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a) {
          const double t = x[j * dim + a] - x[k * dim + a];
          r2 += t * t;
        }
        if (r2 >= 1e-18) continue;
        double* p = x.data() + k * dim;
        std::vector<double> v(dim);
        double radial = 0.0;
        for (int a = 0; a < dim; ++a) {
          v[a] = normal(rng);
          radial += v[a] * p[a];
        }
        double vn = 0.0;
        for (int a = 0; a < dim; ++a) {
          v[a] -= radial * p[a];
          vn += v[a] * v[a];
        }
        vn = std::sqrt(vn);
        for (int a = 0; a < dim; ++a) p[a] += 1e-6 * v[a] / vn;
        double pn = 0.0;
        for (int a = 0; a < dim; ++a) pn += p[a] * p[a];
        for (int a = 0; a < dim; ++a) p[a] /= std::sqrt(pn);
        moved = true;
      }
    }
    if (!moved) return;
  }
}

OptimizationResult to_result(int d, const Iterate& it, int iterations, bool converged,
                             std::vector<TraceRow> trace) {
  return {Configuration(d, it.x), it.energy, iterations, it.grad_norm, 0, converged,
          std::move(trace)};
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t restart_seed(std::uint64_t master, int index) noexcept {
  return splitmix64(master + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index + 1));
}

Configuration init_random(int n, int d, std::uint64_t seed) {
  if (n < 2) throw DomainError("need N >= 2 points", "random initial configuration");
  if (d < 1) throw DomainError("sphere dimension must be >= 1", "random initial configuration");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  const int dim = d + 1;
  std::vector<double> x(static_cast<std::size_t>(n) * dim);
  for (int i = 0; i < n; ++i) {
    double n2 = 0.0;
    do {
      n2 = 0.0;
      for (int a = 0; a < dim; ++a) {
        x[i * dim + a] = normal(rng);
        n2 += x[i * dim + a] * x[i * dim + a];
      }
    } while (n2 < 1e-20);
  }
  normalize_points(x, dim);
  return Configuration(d, std::move(x));
}

Configuration init_spiral(int n, int d) {
  if (d != 2) throw UnsupportedError("spiral start exists only on S^2", "spiral initial configuration");
  if (n < 2) throw DomainError("need N >= 2 points", "spiral initial configuration");
  const double golden = specfun::kPi * (3.0 - std::sqrt(5.0));
  std::vector<double> x(3 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * k + 1.0) / n;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * k;
    x[3 * k] = r * std::cos(phi);
    x[3 * k + 1] = r * std::sin(phi);
    x[3 * k + 2] = z;
  }
  normalize_points(x, 3);
  return Configuration(2, std::move(x));
}

OptimizationResult minimize(const Configuration& start, const EnergyKind& kind,
                            const OptimizerSettings& st) {
  if (!(st.grad_tol > 0.0)) throw DomainError("grad_tol must be > 0", "optimizer settings");
  if (st.max_iters < 0) throw DomainError("max_iters must be >= 0", "optimizer settings");
  if (!(st.armijo_c1 > 0.0 && st.armijo_c1 < 1.0) || !(st.backtrack > 0.0 && st.backtrack < 1.0)) {
    throw DomainError("Armijo parameters must lie in (0, 1)", "optimizer settings");
  }
  const int d = start.d();
  const int dim = d + 1;
  const double sign = kind.maximizes() ? -1.0 : 1.0;
  const double n = static_cast<double>(start.size());

  std::vector<double> x0 = start.coords();
  separate_near_coincident(x0, dim, st.seed);
  Iterate cur = evaluate(d, std::move(x0), kind, sign);

  std::vector<TraceRow> trace;
  if (st.record_trace) trace.push_back({0, cur.energy, cur.grad_norm});

  // Cap on how far a single step may move any point.
  const double max_move = 0.5 * std::pow(n, -1.0 / d);
  double alpha = cur.grad_norm > 0.0 ? 0.2 * max_move / cur.grad_norm : 1.0;
  int stalled = 0;
  int iter = 0;
  bool use_bb1 = true;

  while (iter < st.max_iters && cur.grad_norm > st.grad_tol && stalled < kStallWindow) {
    const double g2 = dot(cur.grad, cur.grad);
    const double roundoff = 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(cur.objective) + 1.0);
    alpha = std::min(alpha, max_move / cur.grad_norm);

    std::optional<Iterate> next;
    // If even the first trial asks for less decrease than the energy can
    // resolve, a failed search means we sit at the rounding floor.
    const bool at_resolution = st.armijo_c1 * alpha * g2 <= roundoff;
    for (int bt = 0; bt <= kMaxBacktracks; ++bt, alpha *= st.backtrack) {
      std::vector<double> xn(cur.x.size());
      for (std::size_t i = 0; i < xn.size(); ++i) xn[i] = cur.x[i] - alpha * cur.grad[i];
      normalize_points(xn, dim);
      Iterate trial;
      try {
        trial = evaluate(d, std::move(xn), kind, sign);
      } catch (const SingularConfigurationError&) {
        continue;
      }
      if (!std::isfinite(trial.objective)) continue;
      const double wanted = st.armijo_c1 * alpha * g2;
      if (trial.objective <= cur.objective - wanted ||
          (wanted <= roundoff && trial.objective <= cur.objective)) {
        next = std::move(trial);
        break;
      }
    }
    if (!next) {
      if (at_resolution) break;
      throw StagnationError("no acceptable step after " + std::to_string(kMaxBacktracks) +
                                " backtracks",
                            to_result(d, cur, iter, false, std::move(trace)));
    }

    // Barzilai-Borwein trial step for the next iteration, alternating the two
    // classical quotients.
    double ss = 0.0, sy = 0.0, yy = 0.0;
    for (std::size_t i = 0; i < cur.x.size(); ++i) {
      const double sx = next->x[i] - cur.x[i];
      const double yg = next->grad[i] - cur.grad[i];
      ss += sx * sx;
      sy += sx * yg;
      yy += yg * yg;
    }
    if (sy > 0.0) {
      alpha = use_bb1 ? ss / sy : sy / yy;
      use_bb1 = !use_bb1;
    } else {
      alpha = 2.0 * alpha;
    }

    stalled = (cur.objective - next->objective > roundoff) ? 0 : stalled + 1;
    cur = std::move(*next);
    ++iter;
    if (st.record_trace) trace.push_back({iter, cur.energy, cur.grad_norm});
  }

  const bool converged = cur.grad_norm <= st.grad_tol;
  return to_result(d, cur, iter, converged, std::move(trace));
}

int default_restarts(int n) { return n <= 100 ? 16 : 4; }

OptimizationResult multistart(int n, int d, const EnergyKind& kind, const OptimizerSettings& st) {
  const int restarts = st.restarts > 0 ? st.restarts : default_restarts(n);
  std::vector<std::optional<OptimizationResult>> results(restarts);
  std::vector<std::exception_ptr> errors(restarts);

  auto run = [&](int r) {
    try {
      OptimizerSettings local = st;
      local.seed = restart_seed(st.seed, r);
      const Configuration start =
          (r == 0 && d == 2) ? init_spiral(n, d) : init_random(n, d, local.seed);
      auto res = minimize(start, kind, local);
      res.restart_index = r;
      results[r] = std::move(res);
    } catch (...) {
      errors[r] = std::current_exception();
    }
  };

  const int workers = std::clamp(st.threads, 1, restarts);
  if (workers == 1) {
    for (int r = 0; r < restarts; ++r) run(r);
  } else {
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int r = next++; r < restarts; r = next++) run(r);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::optional<OptimizationResult> best;
  for (int r = 0; r < restarts; ++r) {
    if (!results[r]) continue;
    const bool better = !best || (kind.maximizes() ? results[r]->energy > best->energy
                                                   : results[r]->energy < best->energy);
    if (better) best = std::move(results[r]);
  }
  if (!best) std::rethrow_exception(errors[0]);
  return std::move(*best);
}

}  // namespace energylab::optimize
