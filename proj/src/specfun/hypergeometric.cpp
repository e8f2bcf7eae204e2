#include <algorithm>
#include <cmath>
#include <limits>

#include "energylab/error.hpp"
#include "energylab/specfun.hpp"

namespace energylab::specfun {

namespace {

constexpr const char* kAnchor = "Gauss hypergeometric function";

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

bool is_integer(double x) { return x == std::floor(x); }

// Power series in z; caller guarantees convergence (|z| < 1 or termination).
double power_series(double a, double b, double c, double z, long max_terms) {
  double term = 1.0;
  double sum = 1.0;
  int small_in_a_row = 0;
  for (long k = 0; k < max_terms; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= std::numeric_limits<double>::epsilon() * 0.25 * std::abs(sum)) {
      if (++small_in_a_row >= 3) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw UnsupportedError("hypergeometric series did not converge", kAnchor);
}

double terminating(double a, double b, double c, double z) {
  const double n_a = is_nonpositive_integer(a) ? -a : std::numeric_limits<double>::infinity();
  const double n_b = is_nonpositive_integer(b) ? -b : std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(std::min(n_a, n_b));
  if (is_nonpositive_integer(c) && -c < static_cast<double>(n)) {
    throw DomainError("c is a nonpositive integer reached before the series terminates", kAnchor);
  }
  if (z == 1.0) {
    // Chu-Vandermonde: 2F1(-n, b; c; 1) = (c-b)_n / (c)_n
    const double other = (n_a <= n_b) ? b : a;
    return pochhammer(c - other, static_cast<int>(n)) / pochhammer(c, static_cast<int>(n));
  }
  double term = 1.0;
  double sum = 1.0;
  for (long k = 0; k < n; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
    sum += term;
  }
  return sum;
}

}  // namespace

double gauss_2f1(double a, double b, double c, double z) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(z)) {
    throw DomainError("non-finite hypergeometric argument", kAnchor);
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return terminating(a, b, c, z);
  if (is_nonpositive_integer(c)) {
    throw DomainError("c is a nonpositive integer and the series does not terminate", kAnchor);
  }
  if (z > 1.0) throw DomainError("z > 1 is outside the real domain", kAnchor);

  const double excess = c - a - b;
  if (z == 1.0) {
    if (!(excess > 0.0)) {
      throw DomainError("series diverges at z = 1 unless c - a - b > 0", kAnchor);
    }
    // Gauss's summation theorem.
    return gamma_function(c) * gamma_function(excess) * rgamma(c - a) * rgamma(c - b);
  }
  if (std::abs(z) <= 0.5) return power_series(a, b, c, z, 10000);
  if (z < 0.0) {
    // Pfaff: (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)), argument in (1/3, 1).
    return std::pow(1.0 - z, -a) * gauss_2f1(a, c - b, c, z / (z - 1.0));
  }
  if (is_integer(excess)) {
    // Logarithmic case of the 1-z connection; not needed by the closed
    // forms in this library, so fall back to the slowly converging series.
    return power_series(a, b, c, z, 50'000'000);
  }
  // 1 - z connection formula.
  const double w = 1.0 - z;
  const double first = gamma_function(c) * gamma_function(excess) * rgamma(c - a) * rgamma(c - b);
  const double second = gamma_function(c) * gamma_function(-excess) * rgamma(a) * rgamma(b);
  double result = 0.0;
  if (first != 0.0) result += first * gauss_2f1(a, b, 1.0 - excess, w);
  if (second != 0.0) result += second * std::pow(w, excess) * gauss_2f1(c - a, c - b, 1.0 + excess, w);
  return result;
}

}  // namespace energylab::specfun
