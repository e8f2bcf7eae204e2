#include <cmath>
#include <string>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

using specfun::kPi;

SphereDim::SphereDim(int d) : d_(d) {
  if (d < 1) {
    throw DomainError("sphere dimension must be at least 1 (got " + std::to_string(d) + ")",
                      "sphere dimension");
  }
}

double sphere_area(SphereDim d) {
  const double h = 0.5 * (d + 1);
  return 2.0 * std::pow(kPi, h) * specfun::rgamma(h);
}

double ball_volume(SphereDim d) {
  const double h = 0.5 * d;
  return std::pow(kPi, h) * specfun::rgamma(h + 1.0);
}

double ball_to_sphere_ratio(SphereDim d) { return ball_volume(d) / sphere_area(d); }

namespace detail {

// omega_{d-1} / omega_d = Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2))
double area_ratio(int d) {
  return std::exp(specfun::lgamma_abs(0.5 * (d + 1)) - specfun::lgamma_abs(0.5 * d)) /
         std::sqrt(kPi);
}

}  // namespace detail

}  // namespace energylab::theory
