#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls into the library under test.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

/// Adaptive tanh-sinh quadrature on [a, b]; handles endpoint singularities.
inline double integrate(const std::function<double(double)>& f, double a, double b) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, 1e-14);
}

/// omega_{d-1} / omega_d from Boost's gamma function.
inline double area_ratio(int d) {
  return boost::math::tgamma_ratio(0.5 * (d + 1), 0.5 * d) / std::sqrt(pi);
}

/// Funk-Hecke reduction: average over S^d of g(<x, y>) restricted to
/// t = <x, y> in [t0, t1].
inline double zonal_integral(int d, const std::function<double(double)>& g, double t0, double t1) {
  const double ratio = area_ratio(d);
  return ratio * integrate([&](double t) { return g(t) * std::pow(1.0 - t * t, 0.5 * d - 1.0); },
                           t0, t1);
}

/// Same average with g written in u = 1 - t, so singularities at t = 1 sit at
/// u = 0 where doubles keep full resolution.
inline double zonal_integral_u(int d, const std::function<double(double)>& g) {
  const double ratio = area_ratio(d);
  return ratio * integrate([&](double u) { return g(u) * std::pow(u * (2.0 - u), 0.5 * d - 1.0); },
                           0.0, 2.0);
}

/// Left side of the digamma/Pochhammer convolution identity, summed term by
/// term with Boost's digamma.
inline double identity_lhs(int m, double z) {
  auto poch = [](double x, int k) {
    double p = 1.0;
    for (int i = 0; i < k; ++i) p *= x + i;
    return p;
  };
  auto fact = [](int k) { return std::tgamma(k + 1.0); };
  double sum = 0.0;
  for (int k = 0; k <= m; ++k) {
    sum += poch(z, k) * poch(-z, m - k) / (fact(k) * fact(m - k)) *
           (boost::math::digamma(k + z) - boost::math::digamma(k + 1.0));
  }
  return sum;
}

/// Hexagonal-lattice Epstein zeta by summing |x|^{-s} over the disk |x| <= R
/// and adding the continuum tail 2 pi R^{2-s} / ((s-2) covolume).
inline double hex_lattice_sum(double s, int radius) {
  const double covolume = std::sqrt(3.0) / 2.0;
  const double r2max = static_cast<double>(radius) * radius;
  const int span = static_cast<int>(2.0 * radius / std::sqrt(3.0)) + 2;
  long double sum = 0.0L;
  for (int m = -span; m <= span; ++m) {
    for (int n = -span; n <= span; ++n) {
      if (m == 0 && n == 0) continue;
      const double q = static_cast<double>(m) * m + static_cast<double>(m) * n +
                       static_cast<double>(n) * n;
      if (q > r2max) continue;
      sum += std::pow(static_cast<long double>(q), -0.5L * s);
    }
  }
  const double tail = 2.0 * pi * std::pow(static_cast<double>(radius), 2.0 - s) / ((s - 2.0) * covolume);
  return static_cast<double>(sum) + tail;
}

/// Taylor coefficient of z^{2n} in (sin(pi z)/(pi z))^{-s} by the Cauchy
/// integral over |z| = r with the trapezoidal rule.
inline double sinc_power_coefficient(double s, int n, double r = 0.5, int points = 512) {
  std::complex<double> acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const double theta = 2.0 * pi * j / points;
    const std::complex<double> z = std::polar(r, theta);
    const std::complex<double> sinc = std::sin(pi * z) / (pi * z);
    acc += std::pow(sinc, -s) * std::pow(z, -2 * n);
  }
  return (acc / static_cast<double>(points)).real();
}

}  // namespace oracle
