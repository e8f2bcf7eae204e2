#include <cmath>
#include <vector>

#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"

namespace energylab::theory {

namespace {

// Richardson extrapolation of samples T(h0 / 2^j) whose error expands in
// even powers of h.
LimitEstimate richardson_even(std::vector<double> row) {
  double err = row.size() > 1 ? std::abs(row.back() - row[row.size() - 2]) : 0.0;
  double factor = 1.0;
  while (row.size() > 1) {
    factor *= 4.0;
    const double previous_best = row.back();
    std::vector<double> next;
    for (std::size_t j = 1; j < row.size(); ++j) {
      next.push_back(row[j] + (row[j] - row[j - 1]) / (factor - 1.0));
    }
    err = std::abs(next.back() - previous_best);
    row = std::move(next);
  }
  return {row.back(), err};
}

void check_levels(double h0, int levels) {
  if (!(h0 > 0.0) || levels < 1) {
    throw DomainError("Richardson limit needs h0 > 0 and at least one level", "limit extrapolation");
  }
}

}  // namespace

LimitEstimate regular_part_limit(const std::function<double(double)>& f, double s0, double h0,
                                 int levels) {
  check_levels(h0, levels);
  std::vector<double> samples;
  double h = h0;
  for (int j = 0; j < levels; ++j, h *= 0.5) {
    samples.push_back(0.5 * (f(s0 + h) + f(s0 - h)));
  }
  return richardson_even(samples);
}

LimitEstimate residue_limit(const std::function<double(double)>& f, double s0, double h0,
                            int levels) {
  check_levels(h0, levels);
  std::vector<double> samples;
  double h = h0;
  for (int j = 0; j < levels; ++j, h *= 0.5) {
    samples.push_back(0.5 * h * (f(s0 + h) - f(s0 - h)));
  }
  return richardson_even(samples);
}

LimitEstimate c_dd_limit(SphereDim d) {
  const int dim = d;
  if (dim == 1) {
    return regular_part_limit(
        [](double s) {
          return v_s_circle(s, PoleGuard::off) +
                 2.0 * specfun::riemann_zeta(s) / std::pow(2.0 * specfun::kPi, s);
        },
        1.0);
  }
  if (dim == 2) {
    return regular_part_limit(
        [](double s) {
          return v_s_sphere(s, SphereDim(2), PoleGuard::off) +
                 csd_hex(s, PoleGuard::off) / std::pow(4.0 * specfun::kPi, 0.5 * s);
        },
        2.0);
  }
  throw UnsupportedError("C_{d,d} needs C_{s,d}, known only for d = 1 and conjectured for d = 2",
                         "boundary-case coefficient");
}

}  // namespace energylab::theory
