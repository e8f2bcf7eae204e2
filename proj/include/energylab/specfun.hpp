#pragma once

#include <vector>

// Real-argument special functions needed by the asymptotic constants:
// gamma/digamma, Pochhammer symbols, Gauss 2F1, Riemann/Hurwitz zeta and
// their s-derivatives, Stieltjes constants, the Dirichlet L-series of the
// character mod 3, the hexagonal-lattice Epstein zeta function and the
// generalized Bernoulli coefficients of the circle expansion.
//
// All functions are pure and reentrant.

namespace energylab::specfun {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
inline constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640561764;

/// sin(pi x) with exact zeros at the integers.
double sinpi(double x);
/// cos(pi x) with exact zeros at the half-integers.
double cospi(double x);

/// Gamma function (Lanczos approximation, reflection for x < 1/2).
/// Throws PoleError at the nonpositive integers.
double gamma_function(double x);
/// log|Gamma(x)|.
double lgamma_abs(double x);
/// 1/Gamma(x); an entire function, zero at the nonpositive integers.
double rgamma(double x);

/// psi(x) = Gamma'(x)/Gamma(x). Throws PoleError at 0, -1, -2, ...
double digamma(double x);

/// Rising factorial (z)_k = z (z+1) ... (z+k-1), (z)_0 = 1.
double pochhammer(double z, int k);

/// Bernoulli number B_{2n} (B_0 = 1, B_2 = 1/6, ...).
double bernoulli_b2n(int n);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real z <= 1.
///
/// Terminating series when a or b is a nonpositive integer, direct series
/// for |z| <= 1/2, Pfaff transformation for z < -1/2 and the 1-z connection
/// formula for 1/2 < z < 1. At z = 1 Gauss's summation theorem is used.
double gauss_2f1(double a, double b, double c, double z);

/// Riemann zeta function, s != 1.
double riemann_zeta(double s);

/// Hurwitz zeta function zeta(s, a) = sum_{k>=0} (k+a)^{-s}, continued
/// meromorphically in s. Euler-Maclaurin with an explicit shift.
double hurwitz_zeta(double s, double a);

/// d/ds zeta(s, a) at s = s0 (s0 != 1), by term-wise differentiation of the
/// Euler-Maclaurin representation.
double hurwitz_zeta_s_derivative(double s0, double a);

/// Laurent data of zeta(s, a) about s = 1:
///   zeta(s, a) = 1/(s-1) + gamma0 - gamma1 (s-1) + O((s-1)^2).
struct LaurentAtOne {
  double a;
  double gamma0;
  double gamma1;
};

LaurentAtOne hurwitz_laurent_at_one(double a);

/// Generalized Stieltjes constant gamma_1(a).
double stieltjes_gamma1(double a);

/// L_{-3}(s) = 1 - 2^{-s} + 4^{-s} - 5^{-s} + ..., continued through the
/// Hurwitz representation 3^{-s}[zeta(s,1/3) - zeta(s,2/3)].
double dirichlet_l3(double s);
/// L_{-3}'(0).
double dirichlet_l3_deriv0();

/// Epstein zeta function of the hexagonal lattice with unit minimal
/// distance, zeta(s) = 6 zeta(s/2) L_{-3}(s/2). Pole at s = 2.
double epstein_hex(double s);
/// Derivative of epstein_hex at s = 0.
double epstein_hex_deriv0();

/// Coefficients alpha_0(s)..alpha_p(s) of
///   (sin(pi z)/(pi z))^{-s} = sum_n alpha_n(s) z^{2n}.
struct AlphaCoefficients {
  double s;
  std::vector<double> values;
};

AlphaCoefficients gen_bernoulli_alpha(double s, int p);

/// Generalized Bernoulli values B_{2n}^{(2 rho)}(rho), n = 0..p.
std::vector<double> gen_bernoulli_central(double rho, int p);

/// Closed-form right side (1-z)_m / (m! m) of the digamma/Pochhammer
/// convolution identity
///   sum_{k=0}^m (z)_k (-z)_{m-k} / (k!(m-k)!) [psi(k+z) - psi(k+1)].
double lemma_identity_rhs(int m, double z);

}  // namespace energylab::specfun
