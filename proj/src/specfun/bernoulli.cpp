#include <algorithm>
#include <array>
#include <cmath>

#include "energylab/error.hpp"
#include "energylab/specfun.hpp"

namespace energylab::specfun {

namespace {

// B_0, B_2, ..., B_30 as exact rationals.
constexpr std::array<std::array<double, 2>, 16> kB2n = {{
    {1.0, 1.0},
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
}};

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

double bernoulli_b2n(int n) {
  if (n < 0) throw DomainError("Bernoulli index must be nonnegative", "Bernoulli numbers");
  if (n < static_cast<int>(kB2n.size())) return kB2n[n][0] / kB2n[n][1];
  // B_{2n} = (-1)^{n+1} 2 (2n)! zeta(2n) / (2 pi)^{2n}
  double zeta = 0.0;
  for (int k = 60; k >= 1; --k) zeta += std::pow(static_cast<double>(k), -2.0 * n);
  const double lg = std::lgamma(2.0 * n + 1.0) - 2.0 * n * std::log(2.0 * kPi);
  const double mag = 2.0 * std::exp(lg) * zeta;
  return (n % 2 == 1) ? mag : -mag;
}

std::vector<double> gen_bernoulli_central(double rho, int p) {
  if (p < 0) throw DomainError("order p must be nonnegative", "generalized Bernoulli recurrence");
  std::vector<double> b(static_cast<std::size_t>(p) + 1, 0.0);
  b[0] = 1.0;
  for (int n = 1; n <= p; ++n) {
    double acc = 0.0;
    for (int m = 0; m < n; ++m) {
      acc += binomial(2 * n - 1, 2 * m + 1) * bernoulli_b2n(m + 1) / (2.0 * m + 2.0) *
             b[static_cast<std::size_t>(n - 1 - m)];
    }
    b[static_cast<std::size_t>(n)] = -2.0 * rho * acc;
  }
  return b;
}

AlphaCoefficients gen_bernoulli_alpha(double s, int p) {
  const auto central = gen_bernoulli_central(0.5 * s, p);
  AlphaCoefficients out{s, std::vector<double>(central.size())};
  // (2 pi)^{2n} / (2n)!
  double scale = 1.0;
  const double two_pi_sq = 4.0 * kPi * kPi;
  for (std::size_t n = 0; n < central.size(); ++n) {
    if (n > 0) scale *= two_pi_sq / ((2.0 * n - 1.0) * (2.0 * n));
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    out.values[n] = sign * central[n] * scale;
  }
  return out;
}

double lemma_identity_rhs(int m, double z) {
  if (m < 1) throw DomainError("m must be a positive integer", "digamma convolution identity");
  if (z < 0.0 && z == std::floor(z)) {
    throw DomainError("z must not be a negative integer", "digamma convolution identity");
  }
  double fact = 1.0;
  for (int i = 2; i <= m; ++i) fact *= i;
  return pochhammer(1.0 - z, m) / (fact * m);
}

}  // namespace energylab::specfun
