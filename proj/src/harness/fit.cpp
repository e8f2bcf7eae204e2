#include <Eigen/Dense>
#include <cmath>

#include "energylab/harness.hpp"
#include "energylab/theory.hpp"

namespace energylab::harness {

namespace {

constexpr const char* kAnchor = "asymptotic coefficient fit";
constexpr double kIrlsFloor = 1e-12;
constexpr int kIrlsRounds = 100;

struct Design {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  std::vector<std::string> names;
};

Design build_design(const EnergyTable& t, FitModel model) {
  const theory::SphereDim dim(t.d);
  const std::size_t m = t.rows.size();
  std::vector<std::string> names{"C"};
  if (model == FitModel::C_and_Dlog) names.push_back("D");
  if (model == FitModel::C_and_const) names.push_back("const");

  Design out{Eigen::MatrixXd(m, names.size()), Eigen::VectorXd(m), names};
  const bool hypersingular_boundary = !t.kind.is_log() && t.kind.s == static_cast<double>(t.d);
  const double v = t.kind.is_log() ? theory::v_log_sphere(dim)
                   : hypersingular_boundary ? theory::ball_to_sphere_ratio(dim)
                                            : theory::v_s_sphere(t.kind.s, dim);
  for (std::size_t i = 0; i < m; ++i) {
    const double n = static_cast<double>(t.rows[i].n);
    const double e = t.rows[i].energy;
    double pinned = 0.0;
    double lead = 0.0;
    if (t.kind.is_log()) {
      pinned = v * n * n - n * std::log(n) / t.d;
      lead = n;
    } else if (hypersingular_boundary) {
      pinned = v * n * n * std::log(n);
      lead = n * n;
    } else {
      pinned = v * n * n;
      lead = std::pow(n, 1.0 + t.kind.s / t.d);
    }
    out.y(i) = e - pinned;
    out.x(i, 0) = lead;
    if (names.size() > 1) out.x(i, 1) = (model == FitModel::C_and_Dlog) ? std::log(n) : 1.0;
  }
  return out;
}

// Weighted least squares with column equilibration; throws on rank loss.
Eigen::VectorXd weighted_solve(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& sqrt_w) {
  Eigen::VectorXd scale = x.colwise().norm().transpose();
  for (Eigen::Index j = 0; j < scale.size(); ++j) {
    if (scale(j) == 0.0) scale(j) = 1.0;
  }
  const Eigen::MatrixXd a = sqrt_w.asDiagonal() * x * scale.cwiseInverse().asDiagonal();
  const Eigen::VectorXd b = sqrt_w.asDiagonal() * y;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < a.cols()) throw DomainError("rank-deficient fit design", kAnchor);
  return qr.solve(b).cwiseQuotient(scale);
}

}  // namespace

std::string to_string(FitModel m) {
  switch (m) {
    case FitModel::C:
      return "C";
    case FitModel::C_and_Dlog:
      return "C_and_Dlog";
    case FitModel::C_and_const:
      return "C_and_const";
  }
  return "?";
}

std::string to_string(FitNorm n) { return n == FitNorm::l1 ? "l1" : "l2"; }

FitModel parse_fit_model(const std::string& s) {
  if (s == "C") return FitModel::C;
  if (s == "C_and_Dlog") return FitModel::C_and_Dlog;
  if (s == "C_and_const") return FitModel::C_and_const;
  throw DomainError("unknown fit model '" + s + "'", kAnchor);
}

FitNorm parse_fit_norm(const std::string& s) {
  if (s == "l1") return FitNorm::l1;
  if (s == "l2") return FitNorm::l2;
  throw DomainError("unknown fit norm '" + s + "'", kAnchor);
}

FitResult fit_constants(const EnergyTable& t, FitModel model, FitNorm norm) {
  t.validate();
  const Design design = build_design(t, model);
  const auto params = static_cast<std::size_t>(design.x.cols());
  if (t.rows.size() < params + 3) {
    throw DomainError("fit needs at least " + std::to_string(params + 3) + " rows", kAnchor);
  }

  const Eigen::Index m = design.x.rows();
  Eigen::VectorXd beta = weighted_solve(design.x, design.y, Eigen::VectorXd::Ones(m));
  if (norm == FitNorm::l1) {
    for (int round = 0; round < kIrlsRounds; ++round) {
      const Eigen::VectorXd r = design.y - design.x * beta;
      Eigen::VectorXd sqrt_w(m);
      for (Eigen::Index i = 0; i < m; ++i) sqrt_w(i) = 1.0 / std::sqrt(std::max(std::abs(r(i)), kIrlsFloor));
      const Eigen::VectorXd next = weighted_solve(design.x, design.y, sqrt_w);
      const double change = (next - beta).norm();
      beta = next;
      if (change <= 1e-15 * (1.0 + beta.norm())) break;
    }
  }

  const Eigen::VectorXd r = design.y - design.x * beta;
  FitResult out{model, norm, {}, r.cwiseAbs().sum(), r.norm(), t.rows.size()};
  for (std::size_t j = 0; j < params; ++j) out.coefficients[design.names[j]] = beta(static_cast<Eigen::Index>(j));
  return out;
}

}  // namespace energylab::harness
