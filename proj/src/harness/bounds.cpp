#include <cmath>

#include "energylab/harness.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"

namespace energylab::harness {

namespace {

BoundCheck make_check(long long n, std::string name, BoundSide side, double value, double limit,
                      bool hard, double tol = 0.0) {
  double slack = 0.0;
  switch (side) {
    case BoundSide::lower:
      slack = value - limit;
      break;
    case BoundSide::upper:
      slack = limit - value;
      break;
    case BoundSide::equal:
      slack = tol - std::abs(value - limit);
      break;
  }
  const double guard = side == BoundSide::equal ? 0.0 : 1e-12 * std::max(1.0, std::abs(limit));
  return {n, std::move(name), side, value, limit, hard, slack >= -guard, slack};
}

}  // namespace

BoundReport verify_bounds(const EnergyTable& t, long long asymptotic_from) {
  t.validate();
  BoundReport rep;
  const theory::SphereDim dim(t.d);
  const EnergyKind& kind = t.kind;
  const bool boundary = !kind.is_log() && kind.s == static_cast<double>(t.d);

  // Mean energy of independent uniform points, V N(N-1): the optimum is at
  // most this (at least, when maximizing).
  std::optional<double> v_mean;
  if (kind.is_log()) {
    v_mean = theory::v_log_sphere(dim);
  } else if (kind.s < t.d) {
    v_mean = kind.s == 0.0 ? 1.0 : theory::v_s_sphere(kind.s, dim);
  }

  const auto rem = boundary || kind.is_log() ? remainders(t) : std::vector<RemainderRow>{};

  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    const double n = static_cast<double>(row.n);
    const bool asymptotic = row.n >= asymptotic_from;

    if (v_mean) {
      const double mean = *v_mean * n * (n - 1.0);
      rep.checks.push_back(make_check(row.n, "uniform_mean", kind.maximizes() ? BoundSide::lower : BoundSide::upper,
                                      row.energy, mean, true));
    }

    if (t.d == 1) {
      const int ni = static_cast<int>(row.n);
      const double exact = kind.is_log() ? energy::circle_exact_log(ni)
                           : kind.s == 0.0 ? n * n - n
                                           : energy::circle_exact(kind.s, ni);
      rep.checks.push_back(make_check(row.n, "circle_optimum", BoundSide::equal, row.energy, exact, true,
                                      1e-10 * std::max(1.0, std::abs(exact))));
      continue;
    }
    if (!asymptotic) continue;

    if (kind.is_log()) {
      rep.checks.push_back(make_check(row.n, "log_lower_Cprime", BoundSide::lower, rem[i].value,
                                      -theory::log_lower_bound_cprime(dim), false));
      if (t.d == 2) {
        const auto b = theory::log_remainder_bounds();
        rep.checks.push_back(make_check(row.n, "log_liminf", BoundSide::lower, rem[i].value, b.lower, false));
        rep.checks.push_back(make_check(row.n, "log_limsup", BoundSide::upper, rem[i].value, b.upper, true));
      }
    } else if (boundary) {
      rep.checks.push_back(make_check(row.n, "boundary_lower_c", BoundSide::lower, rem[i].value,
                                      -theory::boundary_c(dim), false));
    } else if (kind.s > t.d) {
      const double q = row.energy / std::pow(n, 1.0 + kind.s / t.d);
      try {
        rep.checks.push_back(make_check(row.n, "hypersingular_lower_A", BoundSide::lower, q,
                                        theory::hypersing_lower_A(kind.s, dim), false));
      } catch (const UnsupportedError&) {
      }
      rep.checks.push_back(make_check(row.n, "hypersingular_upper_U", BoundSide::upper, q,
                                      theory::hypersing_upper_U(kind.s, dim), true));
    }
  }

  for (const auto& c : rep.checks) {
    if (!c.satisfied) ++(c.hard ? rep.hard_violations : rep.soft_violations);
  }
  return rep;
}

const std::vector<HexShell>& hex_shells() {
  static const std::vector<HexShell> shells{{1, 6}, {3, 6}, {4, 6}, {7, 12}, {9, 6}, {12, 6}, {13, 12}};
  return shells;
}

double berezin_estimate(double s, long long n, int shells) {
  constexpr const char* anchor = "semicontinuum energy estimate";
  if (!(s > 0.0) || s == 2.0) throw DomainError("estimate needs s > 0, s != 2", anchor);
  if (shells < 1 || shells > static_cast<int>(hex_shells().size())) {
    throw DomainError("shells must be between 1 and 7", anchor);
  }
  if (n < 2) throw DomainError("need N >= 2", anchor);

  const double nn = static_cast<double>(n);
  double neighbours = 0.0;
  double bracket = 0.0;
  for (int i = 0; i < shells; ++i) {
    const auto& sh = hex_shells()[static_cast<std::size_t>(i)];
    neighbours += sh.multiplicity;
    bracket += sh.multiplicity * std::pow(static_cast<double>(sh.norm), -0.5 * s);
  }
  const double v = theory::v_s_sphere(s, theory::SphereDim(2));
  const double inner = 1.0 + neighbours;
  const double continuum = nn * nn * v * (1.0 - std::pow(inner / nn, 1.0 - 0.5 * s));
  const double local = nn * std::pow(nn * std::sqrt(3.0) / (8.0 * specfun::kPi), 0.5 * s) * bracket;
  return continuum + local;
}

}  // namespace energylab::harness
