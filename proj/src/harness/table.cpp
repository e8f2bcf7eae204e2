#include <cmath>

#include "energylab/harness.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"

namespace energylab::harness {

namespace {

constexpr const char* kAnchor = "energy table";

}  // namespace

void EnergyTable::validate() const {
  if (d < 1) throw DomainError("table dimension must be >= 1", kAnchor);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].n < 2) throw DomainError("table rows need N >= 2", kAnchor);
    if (!std::isfinite(rows[i].energy)) throw DomainError("table energies must be finite", kAnchor);
    if (i > 0 && rows[i].n <= rows[i - 1].n) {
      throw DomainError("table N values must be strictly increasing", kAnchor);
    }
  }
}

EnergyTable slice(const EnergyTable& t, long long nmin, long long nmax) {
  EnergyTable out{t.kind, t.d, {}};
  for (const auto& r : t.rows) {
    if (r.n >= nmin && r.n <= nmax) out.rows.push_back(r);
  }
  return out;
}

EnergyTable build_table(int d, const EnergyKind& kind, const std::vector<long long>& ns,
                        const optimize::OptimizerSettings& st) {
  EnergyTable t{kind, d, {}};
  for (long long n : ns) {
    const auto res = optimize::multistart(static_cast<int>(n), d, kind, st);
    t.rows.push_back({n, res.energy, Source::computed});
  }
  t.validate();
  return t;
}

EnergyTable circle_table(const EnergyKind& kind, const std::vector<long long>& ns) {
  EnergyTable t{kind, 1, {}};
  for (long long n : ns) {
    const int ni = static_cast<int>(n);
    const double e = kind.is_log() ? energy::circle_exact_log(ni) : energy::circle_exact(kind.s, ni);
    t.rows.push_back({n, e, Source::computed});
  }
  t.validate();
  return t;
}

std::vector<RemainderRow> remainder_log(const EnergyTable& t) {
  if (!t.kind.is_log()) throw DomainError("log remainder needs a log-energy table", kAnchor);
  t.validate();
  const double v = theory::v_log_sphere(theory::SphereDim(t.d));
  std::vector<RemainderRow> out;
  out.reserve(t.rows.size());
  for (const auto& r : t.rows) {
    const double n = static_cast<double>(r.n);
    const double shifted = r.energy + n * std::log(n) / t.d;
    out.push_back({r.n, (shifted - v * n * n) / n});
  }
  return out;
}

std::vector<RemainderRow> remainder_riesz(const EnergyTable& t, double s) {
  if (t.kind.is_log() || t.kind.s != s) {
    throw DomainError("Riesz remainder needs a Riesz table with matching s", kAnchor);
  }
  t.validate();
  const theory::SphereDim dim(t.d);
  std::vector<RemainderRow> out;
  out.reserve(t.rows.size());
  if (s == static_cast<double>(t.d)) {
    const double f = theory::ball_to_sphere_ratio(dim);
    for (const auto& r : t.rows) {
      const double n = static_cast<double>(r.n);
      out.push_back({r.n, (r.energy - f * n * n * std::log(n)) / (n * n)});
    }
    return out;
  }
  const double v = theory::v_s_sphere(s, dim);
  const double p = 1.0 + s / t.d;
  for (const auto& r : t.rows) {
    const double n = static_cast<double>(r.n);
    out.push_back({r.n, (r.energy - v * n * n) / std::pow(n, p)});
  }
  return out;
}

std::vector<RemainderRow> remainders(const EnergyTable& t) {
  return t.kind.is_log() ? remainder_log(t) : remainder_riesz(t, t.kind.s);
}

std::optional<ConjecturedLimit> conjectured_limit(const EnergyKind& kind, int d) {
  try {
    if (kind.is_log()) {
      if (d == 1) {
        // Integer lattice: covolume 1, zeta_Z'(0) = 2 zeta'(0).
        const theory::LatticeData integers{1.0, 2.0 * specfun::hurwitz_zeta_s_derivative(0.0, 1.0)};
        return ConjecturedLimit{"C_log_1", theory::c_log_d_formula(theory::SphereDim(1), integers)};
      }
      if (d == 2) return ConjecturedLimit{"C_log_2", theory::c_log_2()};
      return std::nullopt;
    }
    const double s = kind.s;
    if (s == static_cast<double>(d)) {
      if (d == 1) return ConjecturedLimit{"C_1_1", theory::c_dd_limit(theory::SphereDim(1)).value};
      if (d == 2) return ConjecturedLimit{"C_2_2", theory::c_dd_2()};
      return std::nullopt;
    }
    if (s == 0.0) return std::nullopt;
    const double area = theory::sphere_area(theory::SphereDim(d));
    if (d == 1) {
      return ConjecturedLimit{"C_s_1/area^s", 2.0 * specfun::riemann_zeta(s) / std::pow(area, s)};
    }
    if (d == 2) {
      return ConjecturedLimit{"C_s_2/area^(s/2)", theory::csd_hex(s) / std::pow(area, 0.5 * s)};
    }
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

}  // namespace energylab::harness
