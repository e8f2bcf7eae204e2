#include <cmath>
#include <functional>
#include <map>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "internal.hpp"

namespace energylab::theory {

namespace {

struct Entry {
  std::string description;
  std::string domain;
  std::string anchor;
  std::function<double(const ConstantQuery&)> eval;
};

double need_s(const ConstantQuery& q) {
  if (!q.s) throw DomainError("constant '" + q.name + "' needs parameter s", "constant lookup");
  return *q.s;
}

SphereDim need_d(const ConstantQuery& q) {
  if (!q.d) throw DomainError("constant '" + q.name + "' needs parameter d", "constant lookup");
  return SphereDim(*q.d);
}

int need_k(const ConstantQuery& q) {
  if (!q.k) throw DomainError("constant '" + q.name + "' needs parameter k", "constant lookup");
  return *q.k;
}

double need_rho(const ConstantQuery& q) {
  if (!q.rho) throw DomainError("constant '" + q.name + "' needs parameter rho", "constant lookup");
  return *q.rho;
}

double need_a(const ConstantQuery& q) {
  if (!q.a) throw DomainError("constant '" + q.name + "' needs parameter a", "constant lookup");
  return *q.a;
}

const std::map<std::string, Entry>& registry() {
  static const std::map<std::string, Entry> table = {
      {"V_log",
       {"continuous log energy of S^d", "d >= 1", "continuous logarithmic energy of the sphere",
        [](const ConstantQuery& q) { return v_log_sphere(need_d(q)); }}},
      {"V_s",
       {"continuous Riesz s-energy of S^d (meromorphic in s)", "s != d + 2k (poles)",
        "continuous Riesz s-energy of the sphere",
        [](const ConstantQuery& q) { return v_s_sphere(need_s(q), need_d(q)); }}},
      {"V_s_residue",
       {"residue of V_s(S^d) at s = d + 2k", "k >= 0; k <= d/2 - 1 for even d",
        "residues of the continuous Riesz energy",
        [](const ConstantQuery& q) { return v_s_residue(need_d(q), need_k(q)); }}},
      {"V_s_circle",
       {"continuous Riesz s-energy of the unit circle", "s not an odd positive integer",
        "continuous Riesz s-energy of the circle",
        [](const ConstantQuery& q) { return v_s_circle(need_s(q)); }}},
      {"sphere_area",
       {"surface area omega_d of S^d", "d >= 1", "surface area of the sphere",
        [](const ConstantQuery& q) { return sphere_area(need_d(q)); }}},
      {"ball_volume",
       {"volume of the unit ball in R^d", "d >= 1", "volume of the unit ball",
        [](const ConstantQuery& q) { return ball_volume(need_d(q)); }}},
      {"F_d",
       {"ball volume over sphere area (leading coefficient at s = d)", "d >= 1",
        "leading coefficient in the boundary case s = d",
        [](const ConstantQuery& q) { return ball_to_sphere_ratio(need_d(q)); }}},
      {"cap_measure",
       {"normalized measure of a cap of chordal radius rho", "0 < rho <= 2",
        "normalized measure of a spherical cap",
        [](const ConstantQuery& q) { return cap_measure(need_d(q), need_rho(q)); }}},
      {"exterior_integral_d",
       {"integral of |x-y|^-d outside a cap", "0 < rho < 2",
        "exterior integral of the d-kernel outside a cap",
        [](const ConstantQuery& q) { return exterior_integral_d(need_d(q), need_rho(q)); }}},
      {"exterior_integral_s",
       {"integral of |x-y|^-s outside a cap", "s > d, (s-d)/2 not an integer, 0 < rho < 2",
        "exterior integral of the s-kernel outside a cap",
        [](const ConstantQuery& q) {
          return exterior_integral_s(need_s(q), need_d(q), need_rho(q));
        }}},
      {"A_sd",
       {"lower bound A_{s,d} for C_{s,d}/omega_d^{s/d}", "d >= 2, s > d, (s-d)/2 not an integer",
        "hypersingular lower bound",
        [](const ConstantQuery& q) { return hypersing_lower_A(need_s(q), need_d(q)); }}},
      {"U_sd",
       {"upper bound for C_{s,d}/omega_d^{s/d}", "d >= 2, s > d", "hypersingular upper bound",
        [](const ConstantQuery& q) { return hypersing_upper_U(need_s(q), need_d(q)); }}},
      {"c_boundary",
       {"constant c(d) of the second-term lower bound at s = d", "d >= 1",
        "second-term lower bound in the boundary case",
        [](const ConstantQuery& q) { return boundary_c(need_d(q)); }}},
      {"log_remainder_lower",
       {"lower bound for liminf of the log remainder on S^2", "d = 2",
        "liminf bound for the log-energy remainder",
        [](const ConstantQuery&) { return log_remainder_bounds().lower; }}},
      {"log_remainder_upper",
       {"upper bound for limsup of the log remainder on S^2", "d = 2",
        "limsup bound for the log-energy remainder",
        [](const ConstantQuery&) { return log_remainder_bounds().upper; }}},
      {"C_prime",
       {"constant C'_d of the log-energy lower bound", "d >= 2",
        "log-energy lower bound constant",
        [](const ConstantQuery& q) { return log_lower_bound_cprime(need_d(q)); }}},
      {"C_s2",
       {"conjectured C_{s,2} from the hexagonal lattice", "s != 2",
        "conjectured Riesz coefficient on S^2 (hexagonal lattice)",
        [](const ConstantQuery& q) { return csd_hex(need_s(q)); }}},
      {"C_log_2",
       {"conjectured N-coefficient of the minimal log energy on S^2", "d = 2",
        "conjectured log-energy constant on S^2",
        [](const ConstantQuery&) { return c_log_2(); }}},
      {"C_log_2_zeta",
       {"C_log,2 assembled from zeta_hex'(0)", "d = 2",
        "log-energy constant from the lattice zeta derivative",
        [](const ConstantQuery&) { return c_log_2_from_zeta_derivative(); }}},
      {"a_minus1",
       {"residue of V_s(S^d) at s = d", "d >= 1", "boundary-case Laurent data",
        [](const ConstantQuery& q) { return a_minus1(need_d(q)); }}},
      {"A_d",
       {"regular part of V_s(S^d) at s = d", "d >= 1", "boundary-case Laurent data",
        [](const ConstantQuery& q) { return a_regular(need_d(q)); }}},
      {"B_2",
       {"regular part of C_{s,2}/(4 pi)^{s/2} at s = 2", "d = 2", "boundary-case Laurent data",
        [](const ConstantQuery&) { return b2_regular(); }}},
      {"C_22",
       {"conjectured N^2 coefficient at s = d = 2", "d = 2",
        "conjectured boundary-case coefficient on S^2",
        [](const ConstantQuery&) { return c_dd_2(); }}},
      {"C_dd_limit",
       {"C_{d,d} by numerical two-sided limit", "d in {1, 2}", "boundary-case coefficient",
        [](const ConstantQuery& q) { return c_dd_limit(need_d(q)).value; }}},
      {"C_inf",
       {"best-packing constant C_{infinity,d}", "d in {1, 2, 3}", "best-packing constant",
        [](const ConstantQuery& q) { return best_packing_cinf(need_d(q)); }}},
      {"Delta",
       {"densest packing density in R^d", "d in {1, 2, 3}", "best-packing constant",
        [](const ConstantQuery& q) { return packing_density(need_d(q)); }}},
      {"zeta",
       {"Riemann zeta function", "s != 1", "Riemann zeta function",
        [](const ConstantQuery& q) { return specfun::riemann_zeta(need_s(q)); }}},
      {"hurwitz_zeta",
       {"Hurwitz zeta function zeta(s, a)", "s != 1, a > 0", "Hurwitz zeta function",
        [](const ConstantQuery& q) { return specfun::hurwitz_zeta(need_s(q), need_a(q)); }}},
      {"stieltjes_gamma1",
       {"generalized Stieltjes constant gamma_1(a)", "a > 0", "Stieltjes constants",
        [](const ConstantQuery& q) { return specfun::stieltjes_gamma1(need_a(q)); }}},
      {"L_m3",
       {"Dirichlet L-series of the character mod 3", "s != 1", "Dirichlet L-series mod 3",
        [](const ConstantQuery& q) { return specfun::dirichlet_l3(need_s(q)); }}},
      {"L_m3_deriv0",
       {"derivative of L_{-3} at 0", "s = 0", "Dirichlet L-series mod 3",
        [](const ConstantQuery&) { return specfun::dirichlet_l3_deriv0(); }}},
      {"zeta_hex",
       {"Epstein zeta function of the hexagonal lattice", "s != 2",
        "hexagonal lattice zeta function",
        [](const ConstantQuery& q) { return specfun::epstein_hex(need_s(q)); }}},
      {"zeta_hex_deriv0",
       {"derivative of zeta_hex at 0", "s = 0", "hexagonal lattice zeta function",
        [](const ConstantQuery&) { return specfun::epstein_hex_deriv0(); }}},
  };
  return table;
}

}  // namespace

TheoryConstant evaluate_constant(const ConstantQuery& query) {
  const auto& table = registry();
  const auto it = table.find(query.name);
  if (it == table.end()) {
    throw DomainError("unknown constant '" + query.name + "'", "constant lookup");
  }
  const double value = it->second.eval(query);
  if (!std::isfinite(value)) {
    throw DomainError("constant '" + query.name + "' is not finite for these parameters",
                      it->second.anchor);
  }
  return {query.name, value, it->second.domain, it->second.anchor};
}

std::vector<std::pair<std::string, std::string>> constant_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, entry] : registry()) out.emplace_back(name, entry.description);
  return out;
}

}  // namespace energylab::theory
