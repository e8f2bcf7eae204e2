#include <cmath>

#include "energylab/detail/summation.hpp"
#include "energylab/energy.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"

namespace energylab::energy {

namespace {

constexpr const char* kAnchor = "optimal Riesz energy of the circle";

void require_n(int n) {
  if (n < 2) throw DomainError("need N >= 2 points", kAnchor);
}

}  // namespace

Configuration roots_of_unity(int n) {
  require_n(n);
  std::vector<double> coords(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double t = 2.0 * k / n;
    coords[2 * k] = specfun::cospi(t);
    coords[2 * k + 1] = specfun::sinpi(t);
  }
  return Configuration(1, std::move(coords));
}

double circle_exact(double s, int n) {
  require_n(n);
  if (!(s > -2.0) || s == 0.0) throw DomainError("circle energy needs s > -2, s != 0", kAnchor);
  // The chord lengths for k and N - k coincide, so sum the first half twice.
  energylab::detail::ExtendedSum sum;
  const int half = (n - 1) / 2;
  for (int k = 1; k <= half; ++k) {
    const long double chord = 2.0L * specfun::sinpi(static_cast<double>(k) / n);
    sum.add(2.0L * std::pow(chord, static_cast<long double>(-s)));
  }
  if (n % 2 == 0) sum.add(std::pow(2.0L, static_cast<long double>(-s)));
  return static_cast<double>(static_cast<long double>(n) * sum.value());
}

double circle_exact_log(int n) {
  require_n(n);
  // prod_{k=1}^{N-1} 2 sin(pi k / N) = N.
  const double nn = n;
  return -nn * std::log(nn);
}

double circle_expansion(double s, int n, int p) {
  require_n(n);
  if (p < 0) throw DomainError("expansion order p must be >= 0", kAnchor);
  if (s == 0.0) throw DomainError("expansion excludes s = 0", kAnchor);
  if (s > 0.0 && s == std::floor(s) && static_cast<long long>(s) % 2 == 1) {
    throw DomainError("expansion excludes odd positive integer s", kAnchor);
  }
  const double nn = n;
  const double scale = 2.0 * std::pow(2.0 * specfun::kPi, -s);
  const auto alpha = specfun::gen_bernoulli_alpha(s, p);

  energylab::detail::CompensatedSum sum;
  sum.add(theory::v_s_circle(s) * nn * nn);
  sum.add(scale * specfun::riemann_zeta(s) * std::pow(nn, 1.0 + s));
  for (int k = 1; k <= p; ++k) {
    sum.add(scale * alpha.values[k] * specfun::riemann_zeta(s - 2.0 * k) *
            std::pow(nn, 1.0 + s - 2.0 * k));
  }
  return sum.value();
}

}  // namespace energylab::energy
