#include <array>
#include <cmath>

#include "energylab/error.hpp"
#include "energylab/specfun.hpp"

namespace energylab::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

double lanczos_series(double xm) {
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (xm + static_cast<double>(i));
  }
  return acc;
}

// Gamma(x) for x >= 1/2.
double gamma_right(double x) {
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  const double half = 0.5 * (xm + 0.5);
  const double p = std::pow(t, half);
  return 2.50662827463100050242 * p * (p * std::exp(-t)) * lanczos_series(xm);
}

double lgamma_right(double x) {
  const double xm = x - 1.0;
  const double t = xm + kLanczosG + 0.5;
  return kLnSqrt2Pi + (xm + 0.5) * std::log(t) - t + std::log(lanczos_series(xm));
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double sinpi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r < 0.25) return std::sin(kPi * r);
  if (r < 0.75) return std::cos(kPi * (r - 0.5));
  if (r < 1.25) return -std::sin(kPi * (r - 1.0));
  if (r < 1.75) return -std::cos(kPi * (r - 1.5));
  return std::sin(kPi * (r - 2.0));
}

double cospi(double x) {
  if (!std::isfinite(x)) return std::nan("");
  double r = std::fmod(std::abs(x), 2.0);
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r < 0.25) return std::cos(kPi * r);
  if (r < 0.75) return -std::sin(kPi * (r - 0.5));
  if (r < 1.25) return -std::cos(kPi * (r - 1.0));
  if (r < 1.75) return std::sin(kPi * (r - 1.5));
  return std::cos(kPi * (r - 2.0));
}

double gamma_function(double x) {
  if (is_nonpositive_integer(x)) {
    const int n = static_cast<int>(-x);
    throw PoleError("gamma function evaluated at a nonpositive integer", "gamma function", x,
                    ((n % 2 == 0) ? 1.0 : -1.0) / factorial(n));
  }
  if (x < 0.5) return kPi / (sinpi(x) * gamma_right(1.0 - x));
  return gamma_right(x);
}

double lgamma_abs(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("log-gamma evaluated at a nonpositive integer", "gamma function", x, 0.0);
  }
  if (x < 0.5) return std::log(kPi / std::abs(sinpi(x))) - lgamma_right(1.0 - x);
  return lgamma_right(x);
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x < 0.5) return sinpi(x) * gamma_right(1.0 - x) / kPi;
  if (x > 171.0) return std::exp(-lgamma_right(x));
  return 1.0 / gamma_right(x);
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("digamma evaluated at a nonpositive integer", "digamma function", x, -1.0);
  }
  if (x < 0.0) {
    return digamma(1.0 - x) - kPi * cospi(x) / sinpi(x);
  }
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  // sum_{k=1}^{7} B_{2k} / (2k x^{2k}), Horner in 1/x^2
  double series = 0.0;
  for (int k = 7; k >= 1; --k) {
    series = (series + bernoulli_b2n(k) / (2.0 * k)) * inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

double pochhammer(double z, int k) {
  if (k < 0) throw DomainError("Pochhammer symbol needs k >= 0", "Pochhammer symbol");
  double p = 1.0;
  for (int i = 0; i < k; ++i) p *= z + i;
  return p;
}

}  // namespace energylab::specfun
