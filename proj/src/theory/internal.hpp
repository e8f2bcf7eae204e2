#pragma once

#include <string>

namespace energylab::theory::detail {

/// omega_{d-1} / omega_d.
double area_ratio(int d);

/// True if x lies within `tol` of an integer.
bool near_integer(double x, double tol);

/// Shortest round-trip decimal form of x.
std::string num(double x);

}  // namespace energylab::theory::detail
