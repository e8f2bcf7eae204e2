#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "energylab/harness.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"
#include "oracles.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

using namespace energylab;
using namespace energylab::harness;
using energy::EnergyKind;
using doctest::Approx;

namespace {

std::vector<long long> range(long long a, long long b, long long step = 1) {
  std::vector<long long> out;
  for (long long n = a; n <= b; n += step) out.push_back(n);
  return out;
}

// V_log(S^2) = 1/2 - log 2, from the digamma form with Boost.
double v_log_2() { return std::log(0.5) + 0.5 * (boost::math::digamma(2.0) - boost::math::digamma(1.0)); }

}  // namespace

TEST_CASE("table validation and slicing") {
  EnergyTable t{EnergyKind::log(), 2, {{4, -5.0, Source::ingested}, {3, -2.0, Source::ingested}}};
  CHECK_THROWS_AS(t.validate(), DomainError);
  t.rows = {{4, -5.0, Source::ingested}, {5, NAN, Source::ingested}};
  CHECK_THROWS_AS(t.validate(), DomainError);
  const auto c = circle_table(EnergyKind::log(), range(2, 20));
  CHECK(slice(c, 5, 9).rows.size() == 5);
}

TEST_CASE("log remainder") {
  const auto exact = circle_table(EnergyKind::log(), range(2, 400));
  for (const auto& r : remainder_log(exact)) {
    CHECK(std::abs(r.value) <= 1e-16 * static_cast<double>(r.n));
  }

  const EnergyTable tet{EnergyKind::log(), 2, {{4, -6.0 * std::log(8.0 / 3.0), Source::ingested}}};
  const double want = (-6.0 * std::log(8.0 / 3.0) - (v_log_2() * 16.0 - 2.0 * std::log(4.0))) / 4.0;
  CHECK(remainder_log(tet)[0].value == Approx(want).epsilon(1e-13));
  CHECK(remainder_log(tet)[0].value == Approx(-0.0055079).epsilon(1e-4));

  CHECK_THROWS_AS(remainder_log(circle_table(EnergyKind::riesz(1.0), {3, 4})), DomainError);
}

TEST_CASE("Riesz remainder") {
  const auto t = circle_table(EnergyKind::riesz(0.5), {100, 1000, 10000});
  const auto rem = remainder_riesz(t, 0.5);
  const double limit = 2.0 * boost::math::zeta(0.5) / std::pow(2.0 * oracle::pi, 0.5);
  CHECK(std::abs(rem[2].value - limit) <= 1e-3 * std::abs(limit));
  CHECK(std::abs(rem[2].value - limit) < std::abs(rem[0].value - limit));

  // s = d normalization uses F_d N^2 log N.
  const EnergyTable b{EnergyKind::riesz(2.0), 2, {{10, 60.0, Source::ingested}}};
  CHECK(remainder_riesz(b, 2.0)[0].value == Approx((60.0 - 0.25 * 100.0 * std::log(10.0)) / 100.0));

  CHECK_THROWS_AS(remainder_riesz(t, 0.6), DomainError);
  const EnergyTable pole{EnergyKind::riesz(5.0), 3, {{10, 1.0, Source::ingested}}};
  CHECK_THROWS_AS(remainder_riesz(pole, 5.0), PoleError);
}

TEST_CASE("conjectured limits come from the theory constants") {
  const double area2 = 4.0 * oracle::pi;
  {
    const auto l = conjectured_limit(EnergyKind::riesz(1.0), 2);
    REQUIRE(l);
    // (sqrt3/2)^{1/2} zeta_hex(1) / sqrt(4 pi)
    const double want = std::pow(std::sqrt(3.0) / 2.0, 0.5) * specfun::epstein_hex(1.0) / std::sqrt(area2);
    CHECK(l->value == Approx(want).epsilon(1e-14));
    CHECK(l->value < 0.0);
  }
  CHECK(conjectured_limit(EnergyKind::riesz(2.0), 2)->value == Approx(-0.08576841030090248365).epsilon(1e-9));
  CHECK(conjectured_limit(EnergyKind::log(), 2)->value == Approx(-0.05560530494339251850).epsilon(1e-13));
  CHECK(std::abs(conjectured_limit(EnergyKind::log(), 1)->value) <= 1e-14);
  CHECK(conjectured_limit(EnergyKind::riesz(0.5), 1)->value ==
        Approx(2.0 * boost::math::zeta(0.5) / std::pow(2.0 * oracle::pi, 0.5)).epsilon(1e-13));
  CHECK(!conjectured_limit(EnergyKind::log(), 3));
}

TEST_CASE("coefficient fits recover their own model") {
  const double v = v_log_2();
  const double c = -0.0556, dcoef = 0.31, k = 0.2;
  for (auto norm : {FitNorm::l1, FitNorm::l2}) {
    EnergyTable t{EnergyKind::log(), 2, {}};
    for (long long n = 10; n <= 300; n += 7) {
      const double x = static_cast<double>(n);
      t.rows.push_back({n, v * x * x - 0.5 * x * std::log(x) + c * x, Source::ingested});
    }
    const auto f = fit_constants(t, FitModel::C, norm);
    CHECK(std::abs(f.coefficients.at("C") - c) <= 1e-10);
    CHECK(f.residual_l1 >= 0.0);
    CHECK(f.residual_l2 >= 0.0);

    EnergyTable td = t, tc = t;
    for (auto& r : td.rows) r.energy += dcoef * std::log(static_cast<double>(r.n));
    for (auto& r : tc.rows) r.energy += k;
    const auto fd = fit_constants(td, FitModel::C_and_Dlog, norm);
    CHECK(std::abs(fd.coefficients.at("C") - c) <= 1e-10);
    CHECK(std::abs(fd.coefficients.at("D") - dcoef) <= 1e-9);
    const auto fc = fit_constants(tc, FitModel::C_and_const, norm);
    CHECK(std::abs(fc.coefficients.at("C") - c) <= 1e-10);
    CHECK(std::abs(fc.coefficients.at("const") - k) <= 1e-9);
  }

  SUBCASE("l1 ignores a single outlier") {
    EnergyTable t{EnergyKind::log(), 2, {}};
    for (long long n = 10; n <= 100; n += 5) {
      const double x = static_cast<double>(n);
      t.rows.push_back({n, v * x * x - 0.5 * x * std::log(x) + c * x, Source::ingested});
    }
    t.rows[7].energy += 5.0;
    CHECK(std::abs(fit_constants(t, FitModel::C, FitNorm::l1).coefficients.at("C") - c) <= 1e-8);
    CHECK(std::abs(fit_constants(t, FitModel::C, FitNorm::l2).coefficients.at("C") - c) > 1e-4);
  }

  SUBCASE("errors") {
    const auto few = circle_table(EnergyKind::log(), {2, 3, 4});
    CHECK_THROWS_AS(fit_constants(few, FitModel::C, FitNorm::l2), DomainError);
    // For s = -1 on S^1 the leading free column N^{1+s} is constant.
    const auto flat = circle_table(EnergyKind::riesz(-1.0), range(5, 30));
    CHECK_THROWS_AS(fit_constants(flat, FitModel::C_and_const, FitNorm::l2), DomainError);
  }

  CHECK(parse_fit_model("C_and_Dlog") == FitModel::C_and_Dlog);
  CHECK(parse_fit_norm("l1") == FitNorm::l1);
  CHECK_THROWS_AS(parse_fit_model("quadratic"), DomainError);
}

TEST_CASE("bound verification") {
  for (const auto& kind : {EnergyKind::riesz(-1.0), EnergyKind::riesz(0.5), EnergyKind::log()}) {
    const auto rep = verify_bounds(circle_table(kind, range(2, 300, 7)));
    CHECK(rep.hard_violations == 0);
    CHECK(!rep.checks.empty());
  }

  // A table far above the mean energy of random points is a hard failure.
  const EnergyTable bad{EnergyKind::log(), 2, {{10, 50.0, Source::ingested}}};
  CHECK(verify_bounds(bad).hard_violations == 1);

  // Remainders outside the asymptotic interval.
  const double v = v_log_2();
  EnergyTable outside{EnergyKind::log(), 2, {}};
  for (long long n : {100, 200}) {
    const double x = static_cast<double>(n);
    outside.rows.push_back({n, v * x * x - 0.5 * x * std::log(x) - 0.01 * x, Source::ingested});
  }
  const auto rep = verify_bounds(outside);
  CHECK(rep.hard_violations == 2);  // above the limsup bound
  CHECK(rep.soft_violations == 0);
  bool found = false;
  for (const auto& c : rep.checks) {
    if (c.bound == "log_limsup") {
      found = true;
      CHECK(!c.satisfied);
      CHECK(c.slack < 0.0);
    }
  }
  CHECK(found);
}

TEST_CASE("semicontinuum estimate") {
  int total = 0;
  for (const auto& sh : hex_shells()) total += sh.multiplicity;
  CHECK(total == 54);

  // s = 3: the truncated shell sum sits below the full lattice sum.
  double bracket = 0.0;
  for (const auto& sh : hex_shells()) bracket += sh.multiplicity * std::pow(sh.norm, -1.5);
  const double full = oracle::hex_lattice_sum(3.0, 400);
  CHECK(bracket < full);
  CHECK(bracket > 0.8 * full);

  // Reduces to the stated formula.
  const double s = 1.0, n = 900.0;
  const double want = n * n * (std::pow(2.0, 1.0 - s) / (2.0 - s)) * (1.0 - std::pow(55.0 / n, 1.0 - s / 2.0)) +
                      n * std::pow(n * std::sqrt(3.0) / (8.0 * oracle::pi), s / 2.0) *
                          (6.0 + 6.0 / std::sqrt(3.0) + 6.0 / 2.0 + 12.0 / std::sqrt(7.0) + 6.0 / 3.0 +
                           6.0 / std::sqrt(12.0) + 12.0 / std::sqrt(13.0));
  CHECK(berezin_estimate(1.0, 900) == Approx(want).epsilon(1e-13));
  CHECK_THROWS_AS(berezin_estimate(2.0, 100), DomainError);
  CHECK_THROWS_AS(berezin_estimate(1.0, 100, 8), DomainError);
  CHECK_THROWS_AS(berezin_estimate(-1.0, 100), DomainError);

  SUBCASE("close to an optimized energy") {
    optimize::OptimizerSettings st;
    st.restarts = 1;
    st.max_iters = 400;
    const auto r = optimize::multistart(900, 2, EnergyKind::riesz(1.0), st);
    CHECK(std::abs(berezin_estimate(1.0, 900) - r.energy) <= 0.02 * r.energy);
  }
}

TEST_CASE("ingest and report") {
  const std::string text = "N,energy\n4,-5.8849753180703314\n6,-12.476649250079\n12,-43.2\n";
  std::istringstream in(text);
  const auto t = ingest_table(in, EnergyKind::log(), 2);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.rows[0].source == Source::ingested);
  CHECK(remainders(t)[0].value == Approx(-0.0055079).epsilon(1e-4));

  std::ostringstream csv;
  write_report_csv(csv, t);
  std::istringstream back(csv.str());
  const auto t2 = ingest_table(back, EnergyKind::log(), 2);
  std::ostringstream csv2;
  write_report_csv(csv2, t2);
  CHECK(csv.str() == csv2.str());
  for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(t2.rows[i].energy == t.rows[i].energy);
  CHECK(csv.str().rfind("N,energy,remainder,conjectured_limit\n", 0) == 0);

  const auto js = nlohmann::json::parse(report_json(t));
  CHECK(js["kind"] == "log");
  CHECK(js["d"] == 2);
  CHECK(js["conjectured_limit"]["value"].get<double>() == theory::c_log_2());
  CHECK(js["rows"].size() == 3);
  CHECK(js["constants"]["V_log"].get<double>() == theory::v_log_sphere(theory::SphereDim(2)));

  auto line_of = [](const std::string& s) -> std::size_t {
    std::istringstream is(s);
    try {
      ingest_table(is, EnergyKind::log(), 2);
    } catch (const ParseError& e) {
      return e.line() + 1000;
    }
    return 0;
  };
  CHECK(line_of("") == 1000);
  CHECK(line_of("N,energy\n") == 1001);
  CHECK(line_of("N,energy\n4,-5.8\n5,abc\n") == 1003);
  CHECK(line_of("N,energy\n4,-5.8\n4,-5.9\n") == 1003);
  CHECK(line_of("n;e\n4,1\n") == 1001);
  CHECK(line_of("N,energy\n4.5,1\n") == 1002);

  const auto dir = std::filesystem::temp_directory_path() / "energylab_report_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "table.csv").string();
  FitResult fit{FitModel::C, FitNorm::l2, {{"C", -0.05}}, 0.1, 0.2, 3};
  report(t, path, fit);
  CHECK(std::filesystem::exists(dir / "table.json"));
  std::ifstream jf(dir / "table.json");
  const auto saved = nlohmann::json::parse(jf);
  CHECK(saved["fit"]["coefficients"]["C"] == -0.05);
  std::filesystem::remove_all(dir);
}

TEST_CASE("optimized log tables on S^2 approach the conjectured constant") {
  optimize::OptimizerSettings st;
  st.restarts = 1;
  const auto t = build_table(2, EnergyKind::log(), {100, 300, 500}, st);
  const auto b = theory::log_remainder_bounds();
  for (const auto& r : remainder_log(t)) {
    WARN(r.value >= b.lower);
    WARN(r.value <= b.upper);
    if (r.n >= 300) WARN(std::abs(r.value - theory::c_log_2()) <= 0.05);
  }
  CHECK(verify_bounds(t).hard_violations == 0);
}
