#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "energylab/energy.hpp"
#include "energylab/optimize.hpp"

// Numerical verification pipeline: energy tables, remainder sequences,
// conjectured limits, bound checks, coefficient fits, the semicontinuum
// estimate and CSV/JSON emission.

namespace energylab::harness {

using energy::EnergyKind;

enum class Source { computed, ingested };

struct TableRow {
  long long n;
  double energy;
  Source source;
};

/// Energies E(N) of one kernel on S^d, N strictly increasing.
struct EnergyTable {
  EnergyKind kind;
  int d;
  std::vector<TableRow> rows;

  /// Throws DomainError unless N is strictly increasing, N >= 2 and all
  /// energies are finite.
  void validate() const;
};

/// Rows with nmin <= N <= nmax.
EnergyTable slice(const EnergyTable& t, long long nmin, long long nmax);

/// Table of multistart optimizer energies for each N.
EnergyTable build_table(int d, const EnergyKind& kind, const std::vector<long long>& ns,
                        const optimize::OptimizerSettings& st);

/// Exact table of the N-th roots of unity on S^1.
EnergyTable circle_table(const EnergyKind& kind, const std::vector<long long>& ns);

struct RemainderRow {
  long long n;
  double value;
};

/// [E - (V_log N^2 - (1/d) N log N)] / N.
std::vector<RemainderRow> remainder_log(const EnergyTable& t);

/// s != d: [E - V_s N^2] / N^{1+s/d};  s = d: [E - F_d N^2 log N] / N^2.
std::vector<RemainderRow> remainder_riesz(const EnergyTable& t, double s);

/// Remainder matching the table's kind.
std::vector<RemainderRow> remainders(const EnergyTable& t);

/// The value the remainder sequence is expected to approach, when the
/// theory module knows it for this (kind, d).
struct ConjecturedLimit {
  std::string name;
  double value;
};
std::optional<ConjecturedLimit> conjectured_limit(const EnergyKind& kind, int d);

// ---- fitting -----------------------------------------------------------------

/// Free terms fitted on top of the pinned leading terms. The pinned part is
/// V_log N^2 - (1/d) N log N (log), V_s N^2 (Riesz s != d) or F_d N^2 log N
/// (s = d); the main free column is N, N^{1+s/d} or N^2 respectively.
enum class FitModel { C, C_and_Dlog, C_and_const };
enum class FitNorm { l1, l2 };

std::string to_string(FitModel m);
std::string to_string(FitNorm n);
FitModel parse_fit_model(const std::string& s);
FitNorm parse_fit_norm(const std::string& s);

struct FitResult {
  FitModel model;
  FitNorm norm;
  /// Keys "C", "D" (log N coefficient) and "const".
  std::map<std::string, double> coefficients;
  double residual_l1;
  double residual_l2;
  std::size_t rows_used;
};

/// l2: least squares on the small design matrix. l1: iteratively reweighted
/// least squares, weights 1/max(|r|, 1e-12), at most 100 rounds. Needs at
/// least three more rows than fitted parameters.
FitResult fit_constants(const EnergyTable& t, FitModel model, FitNorm norm);

// ---- bounds ----------------------------------------------------------------

enum class BoundSide { lower, upper, equal };

struct BoundCheck {
  long long n;
  std::string bound;
  BoundSide side;
  /// The compared quantity (already normalized as the bound states it).
  double value;
  double limit;
  /// Hard checks are theorems the table must satisfy; soft ones are
  /// asymptotic statements reported with their slack.
  bool hard;
  bool satisfied;
  /// Signed margin, positive when satisfied.
  double slack;
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  int hard_violations = 0;
  int soft_violations = 0;
};

/// Evaluates every applicable bound for every row. Asymptotic bounds are
/// checked only for N >= asymptotic_from.
BoundReport verify_bounds(const EnergyTable& t, long long asymptotic_from = 100);

// ---- semicontinuum estimate ----------------------------------------------------

/// Hexagonal shells (squared distance, multiplicity) used by berezin_estimate.
struct HexShell {
  int norm;
  int multiplicity;
};
const std::vector<HexShell>& hex_shells();

/// Semicontinuum estimate of the optimal Riesz s-energy of N points on S^2:
/// the nearest `shells` hexagonal shells are summed exactly and the rest is
/// replaced by the continuum. s > 0, s != 2, 1 <= shells <= 7.
double berezin_estimate(double s, long long n, int shells = 7);

// ---- I/O -------------------------------------------------------------------------

/// Reads CSV with header "N,energy" (extra trailing columns are ignored).
EnergyTable ingest_table(std::istream& in, const EnergyKind& kind, int d);
EnergyTable ingest_table(const std::string& path, const EnergyKind& kind, int d);

/// CSV "N,energy,remainder,conjectured_limit" at 17 significant digits.
void write_report_csv(std::ostream& out, const EnergyTable& t);

/// JSON summary: metadata, constants used, conjectured limit, per-row
/// remainders and, if given, the fit.
std::string report_json(const EnergyTable& t, const std::optional<FitResult>& fit = std::nullopt,
                        const std::optional<BoundReport>& bounds = std::nullopt);

/// Writes `path` (CSV) and `path` with its extension replaced by ".json".
void report(const EnergyTable& t, const std::string& path,
            const std::optional<FitResult>& fit = std::nullopt);

}  // namespace energylab::harness
