#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "energylab/error.hpp"

// Discrete logarithmic and Riesz s-energies of point sets on S^d, their
// tangential gradients, exact circle energies and the large-N expansion of
// the optimal circle energy.

namespace energylab::energy {

/// N unit vectors in R^{d+1}, stored row-major as N * (d+1) doubles.
class Configuration {
 public:
  /// Validates d >= 1, N >= 2 and |x_i| = 1 within 1e-12.
  Configuration(int d, std::vector<double> coords);

  static Configuration from_points(int d, const std::vector<std::vector<double>>& points);

  int d() const noexcept { return d_; }
  /// Ambient dimension d + 1.
  int ambient() const noexcept { return d_ + 1; }
  std::size_t size() const noexcept { return coords_.size() / static_cast<std::size_t>(d_ + 1); }

  const double* point(std::size_t i) const noexcept { return coords_.data() + i * ambient(); }
  const std::vector<double>& coords() const noexcept { return coords_; }

  /// Smallest pairwise Euclidean distance.
  double min_distance() const;

 private:
  int d_;
  std::vector<double> coords_;
};

/// Which interaction kernel is being summed.
struct EnergyKind {
  enum class Tag { log, riesz };

  Tag tag = Tag::log;
  double s = 0.0;

  static EnergyKind log() { return {Tag::log, 0.0}; }
  /// Riesz kernel |x - y|^{-s}; requires s > -2. s = 0 is answered by the
  /// closed form N^2 - N.
  static EnergyKind riesz(double s);

  bool is_log() const noexcept { return tag == Tag::log; }
  /// True for -2 < s < 0, where the optimal configuration maximizes energy.
  bool maximizes() const noexcept { return tag == Tag::riesz && s < 0.0; }
  std::string label() const;
};

/// Sum over ordered pairs j != k of |x_j - x_k|^{-s}.
///
/// Pairs are visited lexicographically with compensated accumulation, so the
/// result is bitwise reproducible for a fixed thread count. With several
/// threads the pair blocks are reduced in a fixed order; results then agree
/// with the single-thread value to about 1e-12 relative.
double riesz_energy(const Configuration& c, double s, int threads = 1);

/// Sum over ordered pairs j != k of log(1 / |x_j - x_k|).
double log_energy(const Configuration& c, int threads = 1);

/// Dispatches to log_energy or riesz_energy.
double energy(const Configuration& c, const EnergyKind& kind, int threads = 1);

/// Energy and its tangential gradient (N * (d+1) values, one tangent vector
/// per point) in a single pass over the pairs.
struct EnergyAndGradient {
  double energy;
  std::vector<double> gradient;
};
EnergyAndGradient energy_and_gradient(const Configuration& c, const EnergyKind& kind,
                                      int threads = 1);

/// Tangential gradient of the full symmetric energy sum, flattened like the
/// coordinates.
std::vector<double> energy_gradient(const Configuration& c, const EnergyKind& kind,
                                    int threads = 1);

/// The N-th roots of unity on S^1.
Configuration roots_of_unity(int n);

/// Riesz s-energy of the N-th roots of unity,
/// N * sum_{k=1}^{N-1} (2 sin(pi k / N))^{-s}. Requires s > -2, s != 0.
double circle_exact(double s, int n);

/// Logarithmic energy of the N-th roots of unity, -N log N.
double circle_exact_log(int n);

/// Large-N expansion of the optimal Riesz s-energy of S^1 truncated after p
/// correction terms:
///   V_s(S^1) N^2 + 2 zeta(s) (2 pi)^{-s} N^{1+s}
///     + 2 (2 pi)^{-s} sum_{n=1}^p alpha_n(s) zeta(s - 2n) N^{1+s-2n}.
/// Excluded: s = 0 and the odd positive integers.
double circle_expansion(double s, int n, int p);

/// Counts of unordered pairwise distances in equal-width bins over [0, dmax].
/// Distances above dmax are not counted; dmax itself falls in the last bin.
struct DistanceHistogram {
  double dmax;
  std::vector<double> edges;  // bins + 1 values
  std::vector<long long> counts;
  /// Hexagonal-lattice distances 1, sqrt3, 2, sqrt7, ... scaled so the first
  /// equals the configuration's minimal distance, up to dmax.
  std::vector<double> hex_reference;
};
DistanceHistogram distance_histogram(const Configuration& c, int bins, double dmax = 2.0);

/// Plain-text configuration format: first line "d N", then N lines of d+1
/// reals printed with 17 significant digits.
Configuration read_configuration(std::istream& in);
Configuration read_configuration_file(const std::string& path);
void write_configuration(std::ostream& out, const Configuration& c);
void write_configuration_file(const std::string& path, const Configuration& c);

/// CSV with header "bin_lo,bin_hi,count".
void write_histogram_csv(std::ostream& out, const DistanceHistogram& h);

}  // namespace energylab::energy
