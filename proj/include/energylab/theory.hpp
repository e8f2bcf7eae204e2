#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "energylab/error.hpp"

// Closed-form constants, bounds and conjectured coefficients for the
// asymptotics of optimal logarithmic and Riesz s-energies on S^d.
//
// Every evaluation checks its validity domain. Requests within kPoleGuard of
// a simple pole raise PoleError carrying the residue instead of returning a
// huge number.

namespace energylab::theory {

inline constexpr double kPoleGuard = 1e-6;

/// Dimension of the sphere S^d embedded in R^{d+1}.
class SphereDim {
 public:
  explicit SphereDim(int d);
  int value() const noexcept { return d_; }
  operator int() const noexcept { return d_; }

 private:
  int d_;
};

/// A named constant with its validity condition and the formula it comes from.
struct TheoryConstant {
  std::string name;
  double value;
  std::string domain;
  std::string anchor;
};

enum class PoleGuard { strict, off };

// ---- geometry ------------------------------------------------------------

/// Surface area of S^d, 2 pi^{(d+1)/2} / Gamma((d+1)/2).
double sphere_area(SphereDim d);
/// Volume of the unit ball in R^d.
double ball_volume(SphereDim d);
/// F_d = vol(B^d) / area(S^d) = omega_{d-1} / (d omega_d).
double ball_to_sphere_ratio(SphereDim d);

// ---- continuous energies -------------------------------------------------

/// log(1/2) + (psi(d) - psi(d/2)) / 2.
double v_log_sphere(SphereDim d);

/// Continuous Riesz s-energy of S^d and its meromorphic continuation.
/// Poles at s = d + 2k (all k >= 0 for odd d, k < d/2 for even d).
double v_s_sphere(double s, SphereDim d, PoleGuard guard = PoleGuard::strict);

/// Residue of v_s_sphere at s = d + 2k. Throws DomainError if that point is
/// not a pole.
double v_s_residue(SphereDim d, int k);

/// Continuous Riesz s-energy of the unit circle (d = 1), V_0 = 1.
double v_s_circle(double s, PoleGuard guard = PoleGuard::strict);

// ---- caps and exterior integrals -----------------------------------------

/// Normalized surface measure of a spherical cap of chordal radius rho.
double cap_measure(SphereDim d, double rho);

/// Integral of |x-y|^{-d} d sigma_d(y) over the complement of a cap of
/// chordal radius rho, 0 < rho < 2.
double exterior_integral_d(SphereDim d, double rho);

/// Integral of |x-y|^{-s} d sigma_d(y) over the complement of a cap, for
/// s > d with (s-d)/2 not an integer.
double exterior_integral_s(double s, SphereDim d, double rho);

// ---- bounds ----------------------------------------------------------------

/// Lower-bound constant A_{s,d} for the hypersingular leading coefficient.
double hypersing_lower_A(double s, SphereDim d);
/// Upper-bound constant [F_d / (1 - d/s)]^{s/d}.
double hypersing_upper_U(double s, SphereDim d);

/// Constant c(d) of the lower bound for the second term at s = d.
double boundary_c(SphereDim d);

/// Lower and upper bounds for liminf/limsup of the log-energy remainder on S^2.
struct LogRemainderBounds {
  double lower;
  double upper;
};
LogRemainderBounds log_remainder_bounds();

/// C'_d of the lower bound for the minimal log energy.
double log_lower_bound_cprime(SphereDim d);

// ---- conjectured coefficients --------------------------------------------

/// Conjectured C_{s,2} = (sqrt(3)/2)^{s/2} zeta_hex(s); pole at s = 2.
double csd_hex(double s, PoleGuard guard = PoleGuard::strict);

/// Lattice data entering the log-energy constant for general d.
struct LatticeData {
  double covolume;
  double zeta_deriv0;
};

/// Hexagonal lattice with unit minimal distance.
LatticeData hexagonal_lattice();

/// C_log,2 = 2 log 2 + log(2/3)/2 + 3 log(sqrt(pi)/Gamma(1/3)).
double c_log_2();
/// (1/d) log(area(S^d)/|Lambda|) + zeta_Lambda'(0).
double c_log_d_formula(SphereDim d, const LatticeData& lattice);
/// zeta_hex'(0) - (1/2) log(sqrt(3)/(8 pi)).
double c_log_2_from_zeta_derivative();

/// Residue a_{-1,d} of V_s(S^d) at s = d, equal to -d F_d.
double a_minus1(SphereDim d);
/// Regular part A_d of V_s(S^d) at s = d.
double a_regular(SphereDim d);
/// Regular part B_2 of C_{s,2}/(4 pi)^{s/2} at s = 2.
double b2_regular();
/// C_{2,2} = A_2 + B_2 from the closed forms.
double c_dd_2();

/// Best-packing constant C_{infinity,d} for d in {1, 2, 3}.
double best_packing_cinf(SphereDim d);
/// Densest packing density Delta_d for d in {1, 2, 3}.
double packing_density(SphereDim d);

// ---- limits ----------------------------------------------------------------

/// Result of a Richardson-extrapolated limit.
struct LimitEstimate {
  double value;
  double error_estimate;
};

/// lim_{h->0} [f(s0+h) + f(s0-h)]/2, i.e. the regular part of f at a simple
/// pole (or the value at a removable singularity), by Richardson
/// extrapolation in h^2 over h = h0, h0/2, ...
LimitEstimate regular_part_limit(const std::function<double(double)>& f, double s0,
                                 double h0 = 1e-2, int levels = 6);

/// Residue lim (s - s0) f(s) by two-sided sampling and Richardson
/// extrapolation.
LimitEstimate residue_limit(const std::function<double(double)>& f, double s0,
                            double h0 = 1e-2, int levels = 6);

/// C_{d,d} = lim_{s->d} [V_s(S^d) + C_{s,d}/area(S^d)^{s/d}] evaluated
/// numerically. Supported for d = 1 (C_{s,1} = 2 zeta(s)) and d = 2
/// (hexagonal conjecture).
LimitEstimate c_dd_limit(SphereDim d);

// ---- registry ----------------------------------------------------------------

/// Parameters for named-constant lookup.
struct ConstantQuery {
  std::string name;
  std::optional<double> s;
  std::optional<int> d;
  std::optional<int> k;
  std::optional<double> rho;
  std::optional<double> a;
};

/// Evaluates a named constant; throws DomainError for unknown names or
/// missing parameters.
TheoryConstant evaluate_constant(const ConstantQuery& query);

/// Names accepted by evaluate_constant, with a short description each.
std::vector<std::pair<std::string, std::string>> constant_catalog();

}  // namespace energylab::theory
