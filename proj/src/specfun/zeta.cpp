#include <algorithm>
#include <cmath>

#include "energylab/detail/summation.hpp"
#include "energylab/error.hpp"
#include "energylab/specfun.hpp"

namespace energylab::specfun {

namespace {

// Euler-Maclaurin tail corrections through B_12.
constexpr int kTailTerms = 6;

// B_{2j} / (2j)!
long double tail_coefficient(int j) {
  static const long double table[] = {
      1.0L,
      1.0L / 12.0L,
      -1.0L / 720.0L,
      1.0L / 30240.0L,
      -1.0L / 1209600.0L,
      1.0L / 47900160.0L,
      -691.0L / 1307674368000.0L,
  };
  return table[j];
}

// Number of leading terms summed explicitly: a + M > |s| + 10 and M >= 10.
int shift_for(double s, double a) {
  const double need = std::abs(s) + 10.0 - a;
  return std::max(10, static_cast<int>(std::ceil(need)) + 1);
}

void check_hurwitz_args(double s, double a) {
  if (!(a > 0.0)) throw DomainError("Hurwitz zeta requires a > 0", "Hurwitz zeta function");
  if (s == 1.0) throw PoleError("Hurwitz zeta at s = 1", "Hurwitz zeta function", 1.0, 1.0);
}

}  // namespace

// Terms are formed in extended precision: for s < 0 the leading sum and the
// pole term cancel to a much smaller result.
double hurwitz_zeta(double s, double a) {
  check_hurwitz_args(s, a);
  using LD = long double;
  const LD sl = s;
  const int shift = shift_for(s, a);
  detail::ExtendedSum sum;
  for (int k = shift - 1; k >= 0; --k) sum.add(std::pow(static_cast<LD>(a) + k, -sl));
  const LD x = static_cast<LD>(a) + shift;
  sum.add(std::pow(x, 1.0L - sl) / (sl - 1.0L));
  sum.add(0.5L * std::pow(x, -sl));

  // c_j (s)_{2j-1} x^{-s-2j+1}
  LD rising = sl;
  LD xpow = std::pow(x, -sl - 1.0L);
  const LD inv_x2 = 1.0L / (x * x);
  for (int j = 1; j <= kTailTerms; ++j) {
    sum.add(tail_coefficient(j) * rising * xpow);
    rising *= (sl + 2.0L * j - 1.0L) * (sl + 2.0L * j);
    xpow *= inv_x2;
  }
  return static_cast<double>(sum.value());
}

double hurwitz_zeta_s_derivative(double s0, double a) {
  if (!(a > 0.0)) throw DomainError("Hurwitz zeta requires a > 0", "Hurwitz zeta function");
  if (s0 == 1.0) {
    throw DomainError("s-derivative of Hurwitz zeta is undefined at the pole s = 1",
                      "Hurwitz zeta function");
  }
  using LD = long double;
  const LD s = s0;
  const int shift = shift_for(s0, a);
  detail::ExtendedSum sum;
  for (int k = shift - 1; k >= 0; --k) {
    const LD base = static_cast<LD>(a) + k;
    sum.add(-std::log(base) * std::pow(base, -s));
  }
  const LD x = static_cast<LD>(a) + shift;
  const LD lx = std::log(x);
  const LD pole_term = std::pow(x, 1.0L - s) / (s - 1.0L);
  sum.add(-lx * pole_term - pole_term / (s - 1.0L));
  sum.add(-0.5L * lx * std::pow(x, -s));

  // Product P_j(s) = s (s+1) ... (s+2j-2) and its derivative.
  LD prod = s;
  LD dprod = 1.0L;
  LD xpow = std::pow(x, -s - 1.0L);
  const LD inv_x2 = 1.0L / (x * x);
  for (int j = 1; j <= kTailTerms; ++j) {
    sum.add(tail_coefficient(j) * (dprod - lx * prod) * xpow);
    for (int i = 2 * j - 1; i <= 2 * j; ++i) {
      dprod = dprod * (s + i) + prod;
      prod *= s + i;
    }
    xpow *= inv_x2;
  }
  return static_cast<double>(sum.value());
}

LaurentAtOne hurwitz_laurent_at_one(double a) {
  if (!(a > 0.0)) throw DomainError("Stieltjes constants require a > 0", "Stieltjes constants");
  // Regular part zeta(s,a) - 1/(s-1) of the Euler-Maclaurin form, with the
  // pole term expanded exactly:
  //   (x^{1-s} - 1)/(s-1) = -L + L^2 (s-1)/2 - ...,  L = log x.
  using LD = long double;
  const int shift = shift_for(1.0, a) + 10;
  detail::ExtendedSum value;
  detail::ExtendedSum slope;
  for (int k = shift - 1; k >= 0; --k) {
    const LD base = static_cast<LD>(a) + k;
    value.add(1.0L / base);
    slope.add(-std::log(base) / base);
  }
  const LD x = static_cast<LD>(a) + shift;
  const LD lx = std::log(x);
  value.add(-lx);
  slope.add(0.5L * lx * lx);
  value.add(0.5L / x);
  slope.add(-0.5L * lx / x);

  LD prod = 1.0L;
  LD dprod = 1.0L;
  LD xpow = 1.0L / (x * x);
  const LD inv_x2 = xpow;
  for (int j = 1; j <= kTailTerms; ++j) {
    const LD c = tail_coefficient(j);
    value.add(c * prod * xpow);
    slope.add(c * (dprod - lx * prod) * xpow);
    for (int i = 2 * j - 1; i <= 2 * j; ++i) {
      dprod = dprod * (1.0L + i) + prod;
      prod *= 1.0L + i;
    }
    xpow *= inv_x2;
  }
  return LaurentAtOne{a, static_cast<double>(value.value()), -static_cast<double>(slope.value())};
}

double stieltjes_gamma1(double a) { return hurwitz_laurent_at_one(a).gamma1; }

double riemann_zeta(double s) {
  if (s == 1.0) throw PoleError("Riemann zeta at s = 1", "Riemann zeta function", 1.0, 1.0);
  if (s == 0.0) return -0.5;
  if (s < 0.0) {
    // Trivial zeros at the negative even integers.
    if (std::fmod(s, 2.0) == 0.0) return 0.0;
    // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
    const double one_minus = 1.0 - s;
    return std::pow(2.0, s) * std::pow(kPi, s - 1.0) * sinpi(0.5 * s) * gamma_function(one_minus) *
           riemann_zeta(one_minus);
  }
  return hurwitz_zeta(s, 1.0);
}

double dirichlet_l3(double s) {
  if (s == 1.0) {
    throw DomainError("L_{-3}(s) evaluated at s = 1 through the Hurwitz representation",
                      "Dirichlet L-series mod 3");
  }
  return std::pow(3.0, -s) * (hurwitz_zeta(s, 1.0 / 3.0) - hurwitz_zeta(s, 2.0 / 3.0));
}

double dirichlet_l3_deriv0() {
  const double l0 = hurwitz_zeta(0.0, 1.0 / 3.0) - hurwitz_zeta(0.0, 2.0 / 3.0);
  return -std::log(3.0) * l0 + hurwitz_zeta_s_derivative(0.0, 1.0 / 3.0) -
         hurwitz_zeta_s_derivative(0.0, 2.0 / 3.0);
}

double epstein_hex(double s) {
  if (s == 2.0) {
    // residue 2 * 6 L_{-3}(1) = 4 pi / sqrt(3)
    throw PoleError("hexagonal Epstein zeta at s = 2", "hexagonal lattice zeta function", 2.0,
                    4.0 * kPi / std::sqrt(3.0));
  }
  return 6.0 * riemann_zeta(0.5 * s) * dirichlet_l3(0.5 * s);
}

double epstein_hex_deriv0() {
  // d/ds [6 zeta(s/2) L(s/2)] at 0 = 3 zeta'(0) L(0) + 3 zeta(0) L'(0)
  const double l0 = hurwitz_zeta(0.0, 1.0 / 3.0) - hurwitz_zeta(0.0, 2.0 / 3.0);
  const double zeta_prime0 = hurwitz_zeta_s_derivative(0.0, 1.0);
  return 3.0 * zeta_prime0 * l0 + 3.0 * riemann_zeta(0.0) * dirichlet_l3_deriv0();
}

}  // namespace energylab::specfun
