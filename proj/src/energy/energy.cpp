#include "energylab/energy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <thread>

#include "energylab/detail/summation.hpp"

namespace energylab::energy {

namespace {

constexpr const char* kAnchor = "discrete energy of a point configuration";

void check_unit_norms(int d, const std::vector<double>& coords) {
  const std::size_t dim = static_cast<std::size_t>(d) + 1;
  for (std::size_t i = 0; i * dim < coords.size(); ++i) {
    double norm2 = 0.0;
    for (std::size_t a = 0; a < dim; ++a) {
      const double v = coords[i * dim + a];
      if (!std::isfinite(v)) throw DomainError("non-finite coordinate", kAnchor);
      norm2 += v * v;
    }
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
      throw DomainError("point " + std::to_string(i) + " is not on the unit sphere", kAnchor);
    }
  }
}

// Partial result of one block of rows.
struct Partial {
  energylab::detail::CompensatedSum sum;
  std::vector<double> grad;
};

enum class Kernel { log, inverse, inverse_square, power };

Kernel pick_kernel(const EnergyKind& kind) {
  if (kind.is_log()) return Kernel::log;
  if (kind.s == 1.0) return Kernel::inverse;
  if (kind.s == 2.0) return Kernel::inverse_square;
  return Kernel::power;
}

// Accumulates f(|x_j - x_k|) over pairs j < k with j in [row_begin, row_end)
// and, optionally, the Euclidean (not yet projected) gradient of the ordered
// sum.
void accumulate_rows(const Configuration& c, const EnergyKind& kind, std::size_t row_begin,
                     std::size_t row_end, bool with_gradient, Partial& out) {
  const std::size_t n = c.size();
  const int dim = c.ambient();
  const double* x = c.coords().data();
  const Kernel kernel = pick_kernel(kind);
  const double s = kind.s;
  const double half_s = 0.5 * s;
  double* g = with_gradient ? out.grad.data() : nullptr;
  double diff[8];
  std::vector<double> diff_heap(dim > 8 ? dim : 0);
  double* dv = dim > 8 ? diff_heap.data() : diff;

  for (std::size_t j = row_begin; j < row_end; ++j) {
    const double* xj = x + j * dim;
    for (std::size_t k = j + 1; k < n; ++k) {
      const double* xk = x + k * dim;
      double r2 = 0.0;
      for (int a = 0; a < dim; ++a) {
        dv[a] = xj[a] - xk[a];
        r2 += dv[a] * dv[a];
      }
      if (r2 == 0.0) {
        if (kernel == Kernel::power && s < 0.0) continue;
        throw SingularConfigurationError(
            "points " + std::to_string(j) + " and " + std::to_string(k) + " coincide", kAnchor);
      }
      double value = 0.0;
      double weight = 0.0;  // d/d(x_j) of 2 f(|x_j - x_k|) is weight * (x_j - x_k)
      switch (kernel) {
        case Kernel::log:
          value = -0.5 * std::log(r2);
          weight = -2.0 / r2;
          break;
        case Kernel::inverse:
          value = 1.0 / std::sqrt(r2);
          weight = -2.0 * value / r2;
          break;
        case Kernel::inverse_square:
          value = 1.0 / r2;
          weight = -4.0 * value / r2;
          break;
        case Kernel::power:
          value = std::exp(-half_s * std::log(r2));
          weight = -2.0 * s * value / r2;
          break;
      }
      out.sum.add(value);
      if (g != nullptr) {
        double* gj = g + j * dim;
        double* gk = g + k * dim;
        for (int a = 0; a < dim; ++a) {
          const double t = weight * dv[a];
          gj[a] += t;
          gk[a] -= t;
        }
      }
    }
  }
}

// Row boundaries giving each block roughly the same number of pairs.
std::vector<std::size_t> row_blocks(std::size_t n, int blocks) {
  std::vector<std::size_t> bounds{0};
  const double total = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  double acc = 0.0;
  for (std::size_t j = 0; j < n && static_cast<int>(bounds.size()) < blocks; ++j) {
    acc += static_cast<double>(n - 1 - j);
    if (acc >= total * static_cast<double>(bounds.size()) / blocks) bounds.push_back(j + 1);
  }
  while (bounds.back() < n) bounds.push_back(n);
  return bounds;
}

EnergyAndGradient evaluate(const Configuration& c, const EnergyKind& kind, bool with_gradient,
                           int threads) {
  const std::size_t n = c.size();
  const std::size_t len = c.coords().size();
  if (!kind.is_log() && !(kind.s > -2.0)) {
    throw DomainError("Riesz exponent must satisfy s > -2", kAnchor);
  }
  if (!kind.is_log() && kind.s == 0.0) {
    const double nn = static_cast<double>(n);
    return {nn * nn - nn, with_gradient ? std::vector<double>(len, 0.0) : std::vector<double>{}};
  }

  const int blocks = std::clamp<int>(threads, 1, static_cast<int>(std::max<std::size_t>(1, n / 16)));
  const auto bounds = row_blocks(n, blocks);
  const std::size_t nblocks = bounds.size() - 1;
  std::vector<Partial> partials(nblocks);
  for (auto& p : partials) {
    if (with_gradient) p.grad.assign(len, 0.0);
  }

  if (nblocks == 1) {
    accumulate_rows(c, kind, 0, n, with_gradient, partials[0]);
  } else {
    std::vector<std::exception_ptr> errors(nblocks);
    std::vector<std::thread> pool;
    pool.reserve(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
      pool.emplace_back([&, b] {
        try {
          accumulate_rows(c, kind, bounds[b], bounds[b + 1], with_gradient, partials[b]);
        } catch (...) {
          errors[b] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  energylab::detail::CompensatedSum total;
  for (const auto& p : partials) total.add(p.sum.value());

  EnergyAndGradient result{2.0 * total.value(), {}};
  if (with_gradient) {
    result.gradient = std::move(partials[0].grad);
    for (std::size_t b = 1; b < nblocks; ++b) {
      for (std::size_t i = 0; i < len; ++i) result.gradient[i] += partials[b].grad[i];
    }
    const int dim = c.ambient();
    for (std::size_t i = 0; i < n; ++i) {
      const double* xi = c.point(i);
      double* gi = result.gradient.data() + i * dim;
      double radial = 0.0;
      for (int a = 0; a < dim; ++a) radial += gi[a] * xi[a];
      for (int a = 0; a < dim; ++a) gi[a] -= radial * xi[a];
    }
  }
  return result;
}

}  // namespace

Configuration::Configuration(int d, std::vector<double> coords) : d_(d), coords_(std::move(coords)) {
  if (d < 1) throw DomainError("sphere dimension must be >= 1", kAnchor);
  const std::size_t dim = static_cast<std::size_t>(d) + 1;
  if (coords_.size() % dim != 0) {
    throw DomainError("coordinate count is not a multiple of d+1", kAnchor);
  }
  if (coords_.size() / dim < 2) throw DomainError("a configuration needs N >= 2 points", kAnchor);
  check_unit_norms(d, coords_);
}

Configuration Configuration::from_points(int d, const std::vector<std::vector<double>>& points) {
  std::vector<double> flat;
  flat.reserve(points.size() * static_cast<std::size_t>(d + 1));
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != d + 1) {
      throw DomainError("point has the wrong number of coordinates", kAnchor);
    }
    flat.insert(flat.end(), p.begin(), p.end());
  }
  return Configuration(d, std::move(flat));
}

double Configuration::min_distance() const {
  const std::size_t n = size();
  const int dim = ambient();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double r2 = 0.0;
      for (int a = 0; a < dim; ++a) {
        const double t = point(j)[a] - point(k)[a];
        r2 += t * t;
      }
      best = std::min(best, r2);
    }
  }
  return std::sqrt(best);
}

EnergyKind EnergyKind::riesz(double s) {
  if (!(s > -2.0)) throw DomainError("Riesz exponent must satisfy s > -2", kAnchor);
  return {Tag::riesz, s};
}

std::string EnergyKind::label() const {
  if (is_log()) return "log";
  char buf[64];
  std::snprintf(buf, sizeof buf, "riesz(s=%.17g)", s);
  return buf;
}

double riesz_energy(const Configuration& c, double s, int threads) {
  return evaluate(c, EnergyKind::riesz(s), false, threads).energy;
}

double log_energy(const Configuration& c, int threads) {
  return evaluate(c, EnergyKind::log(), false, threads).energy;
}

double energy(const Configuration& c, const EnergyKind& kind, int threads) {
  return evaluate(c, kind, false, threads).energy;
}

EnergyAndGradient energy_and_gradient(const Configuration& c, const EnergyKind& kind, int threads) {
  return evaluate(c, kind, true, threads);
}

std::vector<double> energy_gradient(const Configuration& c, const EnergyKind& kind, int threads) {
  return evaluate(c, kind, true, threads).gradient;
}

}  // namespace energylab::energy
