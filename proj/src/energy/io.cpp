#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "energylab/energy.hpp"

namespace energylab::energy {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Norms q = m^2 + mn + n^2 of nonzero hexagonal-lattice vectors up to qmax.
std::vector<long long> hex_norms(long long qmax) {
  std::vector<bool> hit(static_cast<std::size_t>(qmax) + 1, false);
  for (long long m = 0; m * m <= qmax; ++m) {
    for (long long n = 0; m * m + m * n + n * n <= qmax; ++n) {
      if (m != 0 || n != 0) hit[static_cast<std::size_t>(m * m + m * n + n * n)] = true;
    }
  }
  std::vector<long long> out;
  for (long long q = 1; q <= qmax; ++q) {
    if (hit[static_cast<std::size_t>(q)]) out.push_back(q);
  }
  return out;
}

}  // namespace

DistanceHistogram distance_histogram(const Configuration& c, int bins, double dmax) {
  if (bins < 1) throw DomainError("histogram needs bins >= 1", "pair-distance histogram");
  if (!(dmax > 0.0)) throw DomainError("histogram needs dmax > 0", "pair-distance histogram");

  DistanceHistogram h;
  h.dmax = dmax;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (int b = 0; b <= bins; ++b) h.edges.push_back(dmax * b / bins);

  const std::size_t n = c.size();
  const int dim = c.ambient();
  double closest = INFINITY;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) {
      double r2 = 0.0;
      for (int a = 0; a < dim; ++a) {
        const double t = c.point(j)[a] - c.point(k)[a];
        r2 += t * t;
      }
      const double r = std::sqrt(r2);
      closest = std::min(closest, r);
      if (r > dmax) continue;
      const int bin = std::min(bins - 1, static_cast<int>(r / dmax * bins));
      ++h.counts[static_cast<std::size_t>(bin)];
    }
  }

  if (closest > 0.0) {
    const double ratio = dmax / closest;
    const auto qmax = static_cast<long long>(std::floor(ratio * ratio + 1e-9));
    for (long long q : hex_norms(std::min<long long>(qmax, 1000000))) {
      h.hex_reference.push_back(closest * std::sqrt(static_cast<double>(q)));
    }
  }
  return h;
}

Configuration read_configuration(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty configuration file", lineno);
  int d = 0;
  long long n = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> d >> n) || (header >> extra)) {
      throw ParseError("header must be \"d N\"", lineno);
    }
    if (d < 1 || n < 2) throw ParseError("header needs d >= 1 and N >= 2", lineno);
  }

  std::vector<double> coords;
  coords.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d + 1));
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError("expected " + std::to_string(n) + " points", lineno + 1);
    std::istringstream row(line);
    double norm2 = 0.0;
    for (int a = 0; a <= d; ++a) {
      double v = 0.0;
      if (!(row >> v) || !std::isfinite(v)) {
        throw ParseError("expected " + std::to_string(d + 1) + " finite reals", lineno);
      }
      coords.push_back(v);
      norm2 += v * v;
    }
    std::string extra;
    if (row >> extra) throw ParseError("too many values on point line", lineno);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12) {
      throw ParseError("point is not on the unit sphere", lineno);
    }
  }
  if (next_line()) throw ParseError("trailing content after the last point", lineno);
  return Configuration(d, std::move(coords));
}

Configuration read_configuration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return read_configuration(in);
}

void write_configuration(std::ostream& out, const Configuration& c) {
  out << c.d() << ' ' << c.size() << '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (int a = 0; a < c.ambient(); ++a) {
      if (a > 0) out << ' ';
      out << format17(c.point(i)[a]);
    }
    out << '\n';
  }
}

void write_configuration_file(const std::string& path, const Configuration& c) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path, 0);
  write_configuration(out, c);
}

void write_histogram_csv(std::ostream& out, const DistanceHistogram& h) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    out << format17(h.edges[b]) << ',' << format17(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
  }
}

}  // namespace energylab::energy
