#include <charconv>
#include <cmath>
#include <string>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

using specfun::kPi;

namespace {

constexpr const char* kVsAnchor = "continuous Riesz s-energy of the sphere";

bool is_pole(int d, int k) { return k >= 0 && (d % 2 == 1 || k <= d / 2 - 1); }

// Nearest pole index k with s = d + 2k, or -1 if none lies within tol.
int nearest_pole(double s, int d, double tol) {
  const double k_real = 0.5 * (s - d);
  const long k = std::lround(k_real);
  if (k < 0 || k > 1'000'000) return -1;
  if (!is_pole(d, static_cast<int>(k))) return -1;
  return std::abs(s - (d + 2.0 * k)) <= tol ? static_cast<int>(k) : -1;
}

}  // namespace

namespace detail {

bool near_integer(double x, double tol) { return std::abs(x - std::nearbyint(x)) < tol; }

std::string num(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace detail

double v_log_sphere(SphereDim d) {
  // psi(d) - psi(d/2) through harmonic sums; for odd d the log 2 from
  // psi(m + 1/2) cancels the leading -log 2 exactly (V = 0 on the circle).
  const int n = d;
  double harmonic = 0.0;  // H_{d-1}
  for (int k = 1; k < n; ++k) harmonic += 1.0 / k;
  if (n % 2 == 0) {
    double half = 0.0;  // H_{d/2-1}
    for (int k = 1; k < n / 2; ++k) half += 1.0 / k;
    return -specfun::kLn2 + 0.5 * (harmonic - half);
  }
  double odd = 0.0;  // sum_{k=1}^{(d-1)/2} 1/(2k-1)
  for (int k = 1; k <= (n - 1) / 2; ++k) odd += 1.0 / (2 * k - 1);
  return 0.5 * harmonic - odd;
}

double v_s_residue(SphereDim d, int k) {
  if (!is_pole(d, k)) {
    throw DomainError("s = " + std::to_string(d + 2 * k) + " is not a pole of V_s(S^" +
                          std::to_string(int(d)) + ")",
                      kVsAnchor);
  }
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;
  // Gamma((d-s)/2) near s = d + 2k behaves like (-1)^k / k! * (-2) / (s - d - 2k).
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * std::ldexp(1.0, -2 * k) * specfun::gamma_function(0.5 * (d + 1)) *
         specfun::rgamma(0.5 * d - k) / (std::sqrt(kPi) * kfact);
}

double v_s_sphere(double s, SphereDim d, PoleGuard guard) {
  if (!std::isfinite(s)) throw DomainError("s must be finite", kVsAnchor);
  if (s == 0.0) return 1.0;
  const int k = nearest_pole(s, d, guard == PoleGuard::strict ? kPoleGuard : 0.0);
  if (k >= 0) {
    const double pole = d + 2.0 * k;
    throw PoleError("V_s(S^" + std::to_string(int(d)) + ") has a simple pole at s = " +
                        detail::num(pole),
                    kVsAnchor, pole, v_s_residue(d, k));
  }
  const double a = 0.5 * (d - s);
  const double prefactor =
      std::pow(2.0, d - s - 1.0) * specfun::gamma_function(0.5 * (d + 1)) / std::sqrt(kPi);
  if (d % 2 == 0) {
    // Gamma(a) / Gamma(a + d/2) = 1 / (a)_{d/2}; this form stays finite past
    // the last pole.
    return prefactor / specfun::pochhammer(a, d / 2);
  }
  return prefactor * specfun::gamma_function(a) * specfun::rgamma(d - 0.5 * s);
}

double v_s_circle(double s, PoleGuard guard) { return v_s_sphere(s, SphereDim(1), guard); }

}  // namespace energylab::theory
