#pragma once

#include <cstdint>
#include <vector>

#include "energylab/energy.hpp"

// Projected-gradient search for low-energy (for -2 < s < 0: high-energy)
// configurations on S^d, with multistart.

namespace energylab::optimize {

using energy::Configuration;
using energy::EnergyKind;

struct OptimizerSettings {
  int max_iters = 20000;
  /// Stop once the largest per-point tangential gradient norm is <= grad_tol.
  /// The run also ends, unconverged, when the energy can no longer resolve
  /// the remaining decrease.
  double grad_tol = 1e-7;
  /// Number of multistart runs; 0 picks 16 for N <= 100 and 4 above.
  int restarts = 0;
  std::uint64_t seed = 0;
  double armijo_c1 = 1e-4;
  double backtrack = 0.5;
  /// Worker threads for multistart (restarts run concurrently).
  int threads = 1;
  /// Keep the per-iteration trace.
  bool record_trace = false;
};

struct TraceRow {
  int iteration;
  double energy;
  double grad_norm;
};

struct OptimizationResult {
  Configuration config;
  double energy;
  int iterations;
  double grad_norm;
  int restart_index;
  /// True when grad_norm <= grad_tol was reached before max_iters.
  bool converged;
  std::vector<TraceRow> trace;
};

/// The line search failed to make progress; carries the best iterate.
class StagnationError : public Error {
 public:
  StagnationError(const std::string& message, OptimizationResult best)
      : Error(message, "projected gradient line search"), best_(std::move(best)) {}
  const OptimizationResult& best() const noexcept { return best_; }

 private:
  OptimizationResult best_;
};

/// splitmix64 output for the given state.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed of restart `index` derived from a master seed.
std::uint64_t restart_seed(std::uint64_t master, int index) noexcept;

/// N i.i.d. uniform points on S^d (normalized Gaussian vectors).
Configuration init_random(int n, int d, std::uint64_t seed);

/// Generalized spiral on S^2: heights evenly spaced, azimuth advanced by the
/// golden angle. Throws UnsupportedError for d != 2.
Configuration init_spiral(int n, int d = 2);

/// Projected gradient descent with Barzilai-Borwein trial steps and Armijo
/// backtracking; every iterate is renormalized onto the sphere. For -2 < s < 0
/// the energy is maximized. Objective values along accepted steps are
/// monotone.
OptimizationResult minimize(const Configuration& start, const EnergyKind& kind,
                            const OptimizerSettings& st);

/// Default restart count for N points.
int default_restarts(int n);

/// Best of several minimize runs. Restart 0 starts from the spiral when
/// d = 2; the others from random points seeded by restart_seed. The winner
/// is the lowest energy (highest for s < 0), ties broken by restart index.
OptimizationResult multistart(int n, int d, const EnergyKind& kind, const OptimizerSettings& st);

}  // namespace energylab::optimize
