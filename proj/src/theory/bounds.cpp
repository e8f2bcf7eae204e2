#include <cmath>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

using specfun::kPi;

namespace {

constexpr const char* kLowerAnchor = "hypersingular lower bound";
constexpr const char* kUpperAnchor = "hypersingular upper bound";

void require_hypersingular(double s, int d, const char* anchor) {
  if (d < 2) throw DomainError("hypersingular bounds require d >= 2", anchor);
  if (!(s > d)) {
    throw DomainError("hypersingular bounds require s > d (got s = " + detail::num(s) + ")",
                      anchor);
  }
}

}  // namespace

double hypersing_lower_A(double s, SphereDim d) {
  require_hypersingular(s, d, kLowerAnchor);
  const double excess = 0.5 * (s - d);
  if (detail::near_integer(excess, 1e-12)) {
    throw UnsupportedError("(s - d)/2 is an integer; the lower bound excludes it", kLowerAnchor);
  }
  const double log_inner = std::log(0.5) + specfun::lgamma_abs(0.5 * (d + 1)) +
                           specfun::lgamma_abs(1.0 + excess) - 0.5 * std::log(kPi) -
                           specfun::lgamma_abs(1.0 + 0.5 * s);
  return d / (s - d) * std::exp(s / d * log_inner);
}

double hypersing_upper_U(double s, SphereDim d) {
  require_hypersingular(s, d, kUpperAnchor);
  return std::pow(ball_to_sphere_ratio(d) / (1.0 - d / s), s / d);
}

double boundary_c(SphereDim d) {
  const double f = ball_to_sphere_ratio(d);
  const double bracket = specfun::digamma(0.5 * d) - specfun::digamma(1.0) - specfun::kLn2;
  return f * (1.0 - std::log(f) + d * bracket);
}

LogRemainderBounds log_remainder_bounds() {
  const double r1 = std::sqrt(2.0 * kPi + std::sqrt(27.0));
  const double r2 = std::sqrt(2.0 * kPi);
  const double a = 2.0 * r2 / std::sqrt(27.0) * (r1 + r2);
  const double b = (r1 - r2) / (r1 + r2);
  const double lower = -0.5 * std::log(0.5 * kPi * std::pow(-std::expm1(-a), b));
  const double upper = -0.5 * std::log(0.5 * kPi * std::sqrt(3.0)) + kPi / (4.0 * std::sqrt(3.0));
  return {lower, upper};
}

double log_lower_bound_cprime(SphereDim d) {
  if (d < 2) throw DomainError("C'_d is defined for d >= 2", "log-energy lower bound constant");
  const int half_floor = d / 2;
  const double middle = specfun::gamma_function(d) *
                        specfun::gamma_function(1.0 + half_floor - 0.5 * d) /
                        (std::ldexp(1.0, d) * specfun::gamma_function(0.5 * d) *
                         specfun::gamma_function(1.0 + half_floor)) /
                        d;
  double harmonic = 0.0;
  for (int r = 1; r <= half_floor; ++r) harmonic += 1.0 / r;
  return v_log_sphere(d) + middle + 0.5 * harmonic;
}

}  // namespace energylab::theory
