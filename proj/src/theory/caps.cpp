#include <algorithm>
#include <cmath>

#include "energylab/detail/summation.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

namespace {

constexpr const char* kCapAnchor = "normalized measure of a spherical cap";
constexpr const char* kLogExteriorAnchor = "exterior integral of the d-kernel outside a cap";
constexpr const char* kRieszExteriorAnchor = "exterior integral of the s-kernel outside a cap";

void require_open_radius(double rho, const char* anchor) {
  if (!(rho > 0.0 && rho < 2.0)) {
    throw DomainError("chordal radius must satisfy 0 < rho < 2 (got " + detail::num(rho) + ")",
                      anchor);
  }
}

}  // namespace

double cap_measure(SphereDim d, double rho) {
  if (!(rho > 0.0 && rho <= 2.0)) {
    throw DomainError("chordal radius must satisfy 0 < rho <= 2 (got " + detail::num(rho) + ")",
                      kCapAnchor);
  }
  const double half = 0.5 * d;
  return detail::area_ratio(d) / d * std::pow(rho, d) *
         specfun::gauss_2f1(1.0 - half, half, 1.0 + half, 0.25 * rho * rho);
}

double exterior_integral_d(SphereDim d, double rho) {
  require_open_radius(rho, kLogExteriorAnchor);
  const double ratio = detail::area_ratio(d);
  const double x = 0.25 * rho * rho;

  // sum_{m>=1} (1-d/2)_m / (m! m) x^m; a polynomial for even d.
  energylab::detail::CompensatedSum series;
  double poch_over_fact = 1.0;
  double xm = 1.0;
  const double a = 1.0 - 0.5 * d;
  for (int m = 1; m < 10'000'000; ++m) {
    poch_over_fact *= (a + m - 1) / m;
    xm *= x;
    const double term = poch_over_fact * xm / m;
    if (term == 0.0) break;
    series.add(term);
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(series.value()))) break;
  }

  const double bracket = specfun::digamma(0.5 * d) - specfun::digamma(1.0) - 2.0 * specfun::kLn2;
  return ratio * (-std::log(rho)) - 0.5 * ratio * bracket - 0.5 * ratio * series.value();
}

double exterior_integral_s(double s, SphereDim d, double rho) {
  if (!(s > d)) {
    throw DomainError("the s-kernel exterior integral requires s > d", kRieszExteriorAnchor);
  }
  const double excess = 0.5 * (s - d);
  if (detail::near_integer(excess, 1e-12)) {
    throw UnsupportedError("(s - d)/2 is an integer; this case is excluded", kRieszExteriorAnchor);
  }
  require_open_radius(rho, kRieszExteriorAnchor);
  const double half = 0.5 * d;
  const double hyper =
      specfun::gauss_2f1(1.0 - half, -excess, 1.0 - excess, 0.25 * rho * rho);
  return v_s_sphere(s, d) + std::pow(2.0, d - s) / (s - d) * detail::area_ratio(d) *
                                std::pow(0.5 * rho, d - s) * hyper;
}

}  // namespace energylab::theory
