#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "energylab/harness.hpp"
#include "energylab/theory.hpp"

namespace energylab::harness {

namespace {

using Json = nlohmann::ordered_json;

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Json side_name(BoundSide s) {
  switch (s) {
    case BoundSide::lower:
      return "lower";
    case BoundSide::upper:
      return "upper";
    case BoundSide::equal:
      return "equal";
  }
  return "";
}

// Theory constants entering the remainder normalization.
Json constants_used(const EnergyTable& t) {
  const theory::SphereDim dim(t.d);
  Json c = Json::object();
  if (t.kind.is_log()) {
    c["V_log"] = theory::v_log_sphere(dim);
    c["N_log_N_coefficient"] = -1.0 / t.d;
  } else if (t.kind.s == static_cast<double>(t.d)) {
    c["F_d"] = theory::ball_to_sphere_ratio(dim);
  } else {
    c["V_s"] = theory::v_s_sphere(t.kind.s, dim);
    c["remainder_exponent"] = 1.0 + t.kind.s / t.d;
  }
  return c;
}

}  // namespace

EnergyTable ingest_table(std::istream& in, const EnergyKind& kind, int d) {
  EnergyTable t{kind, d, {}};
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto fields = split_csv(body);
    if (!header_seen) {
      if (fields.size() < 2 || fields[0] != "N" || fields[1] != "energy") {
        throw ParseError("header must start with \"N,energy\"", lineno);
      }
      header_seen = true;
      continue;
    }
    if (fields.size() < 2) throw ParseError("expected at least two fields", lineno);
    long long n = 0;
    const auto& fn = fields[0];
    const auto [end, ec] = std::from_chars(fn.data(), fn.data() + fn.size(), n);
    if (ec != std::errc() || end != fn.data() + fn.size()) throw ParseError("N is not an integer", lineno);
    char* stop = nullptr;
    const double e = std::strtod(fields[1].c_str(), &stop);
    if (fields[1].empty() || *stop != '\0' || !std::isfinite(e)) {
      throw ParseError("energy is not a finite real", lineno);
    }
    if (n < 2) throw ParseError("N must be >= 2", lineno);
    if (!t.rows.empty() && n <= t.rows.back().n) throw ParseError("N must be strictly increasing", lineno);
    t.rows.push_back({n, e, Source::ingested});
  }
  if (!header_seen) throw ParseError("empty table", lineno);
  if (t.rows.empty()) throw ParseError("table has no data rows", lineno);
  t.validate();
  return t;
}

EnergyTable ingest_table(const std::string& path, const EnergyKind& kind, int d) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return ingest_table(in, kind, d);
}

void write_report_csv(std::ostream& out, const EnergyTable& t) {
  const auto rem = remainders(t);
  const auto limit = conjectured_limit(t.kind, t.d);
  out << "N,energy,remainder,conjectured_limit\n";
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    out << t.rows[i].n << ',' << format17(t.rows[i].energy) << ',' << format17(rem[i].value) << ',';
    if (limit) out << format17(limit->value);
    out << '\n';
  }
}

std::string report_json(const EnergyTable& t, const std::optional<FitResult>& fit,
                        const std::optional<BoundReport>& bounds) {
  const auto rem = remainders(t);
  const auto limit = conjectured_limit(t.kind, t.d);

  Json j;
  j["kind"] = t.kind.is_log() ? "log" : "riesz";
  j["s"] = t.kind.is_log() ? Json(nullptr) : Json(t.kind.s);
  j["d"] = t.d;
  j["constants"] = constants_used(t);
  j["conjectured_limit"] =
      limit ? Json{{"name", limit->name}, {"value", limit->value}} : Json(nullptr);
  Json rows = Json::array();
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    rows.push_back({{"N", t.rows[i].n},
                    {"energy", t.rows[i].energy},
                    {"source", t.rows[i].source == Source::computed ? "computed" : "ingested"},
                    {"remainder", rem[i].value}});
  }
  j["rows"] = rows;
  if (fit) {
    j["fit"] = {{"model", to_string(fit->model)},
                {"norm", to_string(fit->norm)},
                {"coefficients", fit->coefficients},
                {"residual_l1", fit->residual_l1},
                {"residual_l2", fit->residual_l2},
                {"rows_used", fit->rows_used}};
  } else {
    j["fit"] = nullptr;
  }
  if (bounds) {
    Json checks = Json::array();
    for (const auto& c : bounds->checks) {
      checks.push_back({{"N", c.n},
                        {"bound", c.bound},
                        {"side", side_name(c.side)},
                        {"value", c.value},
                        {"limit", c.limit},
                        {"hard", c.hard},
                        {"satisfied", c.satisfied},
                        {"slack", c.slack}});
    }
    j["bounds"] = {{"hard_violations", bounds->hard_violations},
                   {"soft_violations", bounds->soft_violations},
                   {"checks", checks}};
  }
  return j.dump(2);
}

void report(const EnergyTable& t, const std::string& path, const std::optional<FitResult>& fit) {
  {
    std::ofstream csv(path);
    if (!csv) throw ParseError("cannot write " + path, 0);
    write_report_csv(csv, t);
  }
  const auto json_path = std::filesystem::path(path).replace_extension(".json");
  std::ofstream js(json_path);
  if (!js) throw ParseError("cannot write " + json_path.string(), 0);
  js << report_json(t, fit) << '\n';
}

}  // namespace energylab::harness
