#include <cmath>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

using specfun::kEulerGamma;
using specfun::kPi;

namespace {

constexpr const char* kHexAnchor = "conjectured Riesz coefficient on S^2 (hexagonal lattice)";
constexpr const char* kPackingAnchor = "best-packing constant";

const double kSqrt3 = std::sqrt(3.0);

void require_small_packing_dim(int d) {
  if (d < 1 || d > 3) {
    throw UnsupportedError("densest packing density is only known for d = 1, 2, 3", kPackingAnchor);
  }
}

}  // namespace

double csd_hex(double s, PoleGuard guard) {
  if (s == 0.0) return -1.0;
  const double dist = std::abs(s - 2.0);
  if (dist == 0.0 || (guard == PoleGuard::strict && dist <= kPoleGuard)) {
    throw PoleError("C_{s,2} has a simple pole at s = 2", kHexAnchor, 2.0, 2.0 * kPi);
  }
  return std::pow(0.5 * kSqrt3, 0.5 * s) * specfun::epstein_hex(s);
}

LatticeData hexagonal_lattice() { return {0.5 * kSqrt3, specfun::epstein_hex_deriv0()}; }

double c_log_2() {
  return 2.0 * specfun::kLn2 + 0.5 * std::log(2.0 / 3.0) +
         3.0 * (0.5 * std::log(kPi) - specfun::lgamma_abs(1.0 / 3.0));
}

double c_log_d_formula(SphereDim d, const LatticeData& lattice) {
  if (!(lattice.covolume > 0.0) || !std::isfinite(lattice.zeta_deriv0)) {
    throw DomainError("lattice data needs a positive covolume and a finite zeta'(0)",
                      "conjectured log-energy constant");
  }
  return std::log(sphere_area(d) / lattice.covolume) / d + lattice.zeta_deriv0;
}

double c_log_2_from_zeta_derivative() {
  return specfun::epstein_hex_deriv0() - 0.5 * std::log(kSqrt3 / (8.0 * kPi));
}

double a_minus1(SphereDim d) { return -static_cast<int>(d) * ball_to_sphere_ratio(d); }

double a_regular(SphereDim d) {
  return -0.5 * detail::area_ratio(d) *
         (kEulerGamma - 2.0 * specfun::kLn2 + specfun::digamma(0.5 * d));
}

double b2_regular() {
  const double g1_diff = specfun::stieltjes_gamma1(2.0 / 3.0) - specfun::stieltjes_gamma1(1.0 / 3.0);
  return 0.25 * (kEulerGamma - std::log(8.0 * kSqrt3 * kPi)) + kSqrt3 / (4.0 * kPi) * g1_diff;
}

double c_dd_2() { return a_regular(SphereDim(2)) + b2_regular(); }

double packing_density(SphereDim d) {
  require_small_packing_dim(d);
  switch (static_cast<int>(d)) {
    case 1:
      return 1.0;
    case 2:
      return kPi / std::sqrt(12.0);
    default:
      return kPi / std::sqrt(18.0);
  }
}

double best_packing_cinf(SphereDim d) {
  require_small_packing_dim(d);
  return 2.0 * std::pow(packing_density(d) / ball_volume(d), 1.0 / d);
}

}  // namespace energylab::theory
