#include "energylab/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "energylab/energy.hpp"
#include "energylab/harness.hpp"
#include "energylab/optimize.hpp"
#include "energylab/theory.hpp"

namespace energylab::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Shared --kind/--s/--d flags.
struct KindFlags {
  std::string kind = "log";
  std::optional<double> s;
  int d = 2;

  void add(CLI::App* app) {
    app->add_option("--kind", kind, "Kernel")->check(CLI::IsMember({"log", "riesz"}));
    app->add_option("--s", s, "Riesz exponent (kind riesz)");
    app->add_option("--d", d, "Sphere dimension")->check(CLI::PositiveNumber);
  }

  energy::EnergyKind resolve() const {
    if (kind == "log") {
      if (s) throw CLI::ValidationError("--s", "only valid with --kind riesz");
      return energy::EnergyKind::log();
    }
    if (!s) throw CLI::RequiredError("--s (needed for --kind riesz)");
    return energy::EnergyKind::riesz(*s);
  }
};

int resolve_threads(const std::optional<int>& flag) {
  if (flag) return std::max(1, *flag);
  if (const char* env = std::getenv("ENERGY_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<int>(v);
  }
  return 1;
}

// Writes to --out when given, else to the main stream.
void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw CLI::FileError("cannot write " + path);
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riesz and logarithmic energies on spheres: constants, optimizer and verification", "energy-lab"};
  app.require_subcommand(1, 1);
  std::optional<int> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (fallback: ENERGY_LAB_THREADS)")
      ->check(CLI::PositiveNumber);

  bool json = false;
  std::string out_path;

  // constants
  auto* c_constants = app.add_subcommand("constants", "Evaluate a named theory constant");
  theory::ConstantQuery query;
  bool list = false;
  {
    c_constants->add_option("--name", query.name, "Constant name");
    c_constants->add_option("--s", query.s, "Exponent s");
    c_constants->add_option("--d", query.d, "Sphere dimension d");
    c_constants->add_option("--k", query.k, "Pole index k");
    c_constants->add_option("--rho", query.rho, "Cap radius");
    c_constants->add_option("--a", query.a, "Hurwitz shift a");
    c_constants->add_flag("--list", list, "List constant names");
    c_constants->add_flag("--json", json, "JSON output (always on for values)");
  }

  // optimize
  auto* c_optimize = app.add_subcommand("optimize", "Search for an optimal configuration");
  int opt_n = 0;
  KindFlags opt_kind;
  optimize::OptimizerSettings settings;
  std::string trace_path;
  {
    c_optimize->add_option("--N", opt_n, "Number of points")->required()->check(CLI::Range(2, 1000000));
    opt_kind.add(c_optimize);
    c_optimize->add_option("--restarts", settings.restarts, "Restarts (0: 16 for N <= 100, else 4)")
        ->check(CLI::NonNegativeNumber);
    c_optimize->add_option("--seed", settings.seed, "Master seed");
    c_optimize->add_option("--tol", settings.grad_tol, "Gradient tolerance")->check(CLI::PositiveNumber);
    c_optimize->add_option("--max-iters", settings.max_iters, "Iteration cap")->check(CLI::NonNegativeNumber);
    c_optimize->add_option("--out", out_path, "Write the configuration here");
    c_optimize->add_option("--trace", trace_path, "CSV trace (iter,energy,gradnorm) of the best run");
    c_optimize->add_flag("--json", json, "JSON output");
  }

  // circle
  auto* c_circle = app.add_subcommand("circle", "Exact circle energy and its large-N expansion");
  std::optional<double> circ_s;
  int circ_n = 0;
  int circ_p = 0;
  bool compare = false;
  bool circ_log = false;
  {
    c_circle->add_option("--s", circ_s, "Riesz exponent");
    c_circle->add_flag("--log", circ_log, "Logarithmic energy instead");
    c_circle->add_option("--N", circ_n, "Number of points")->required()->check(CLI::Range(2, 100000000));
    c_circle->add_option("--p", circ_p, "Expansion order")->check(CLI::NonNegativeNumber);
    c_circle->add_flag("--compare", compare, "Also evaluate the expansion and compare");
    c_circle->add_flag("--json", json, "JSON output");
  }

  // remainder
  auto* c_remainder = app.add_subcommand("remainder", "Remainder sequence of an energy table");
  std::string table_path;
  std::string config_path;
  KindFlags rem_kind;
  {
    c_remainder->add_option("--table", table_path, "CSV with header N,energy");
    c_remainder->add_option("--config", config_path, "Configuration file (one row)");
    rem_kind.add(c_remainder);
    c_remainder->add_option("--out", out_path, "Output path");
    c_remainder->add_flag("--json", json, "JSON summary instead of CSV");
  }

  // fit
  auto* c_fit = app.add_subcommand("fit", "Fit next-order coefficients to an energy table");
  KindFlags fit_kind;
  std::string model = "C";
  std::string norm = "l1";
  long long nmin = 0;
  long long nmax = std::numeric_limits<long long>::max();
  {
    c_fit->add_option("--table", table_path, "CSV with header N,energy")->required();
    fit_kind.add(c_fit);
    c_fit->add_option("--model", model, "C | C_and_Dlog | C_and_const");
    c_fit->add_option("--norm", norm, "l1 | l2");
    c_fit->add_option("--nmin", nmin, "Smallest N used");
    c_fit->add_option("--nmax", nmax, "Largest N used");
    c_fit->add_flag("--json", json, "JSON output");
  }

  // verify
  auto* c_verify = app.add_subcommand("verify", "Check an energy table against known bounds");
  KindFlags ver_kind;
  long long asymptotic_from = 100;
  {
    c_verify->add_option("--table", table_path, "CSV with header N,energy")->required();
    ver_kind.add(c_verify);
    c_verify->add_option("--from", asymptotic_from, "Smallest N for asymptotic bounds");
    c_verify->add_flag("--json", json, "JSON output");
  }

  // berezin
  auto* c_berezin = app.add_subcommand("berezin", "Semicontinuum energy estimate on S^2");
  double ber_s = 1.0;
  long long ber_n = 0;
  int shells = 7;
  {
    c_berezin->add_option("--s", ber_s, "Riesz exponent")->required();
    c_berezin->add_option("--N", ber_n, "Number of points")->required();
    c_berezin->add_option("--shells", shells, "Hexagonal shells summed exactly (1..7)");
    c_berezin->add_flag("--json", json, "JSON output");
  }

  // histogram
  auto* c_hist = app.add_subcommand("histogram", "Pair-distance histogram of a configuration");
  int bins = 50;
  double dmax = 2.0;
  {
    c_hist->add_option("--config", config_path, "Configuration file")->required();
    c_hist->add_option("--bins", bins, "Number of bins")->check(CLI::PositiveNumber);
    c_hist->add_option("--dmax", dmax, "Upper end of the distance range")->check(CLI::PositiveNumber);
    c_hist->add_option("--out", out_path, "Output path");
    c_hist->add_flag("--json", json, "JSON output with hexagonal reference distances");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const int threads = resolve_threads(threads_flag);

  try {
    if (c_constants->parsed()) {
      if (list) {
        Json j = Json::array();
        for (const auto& [name, desc] : theory::constant_catalog()) j.push_back({{"name", name}, {"description", desc}});
        out << json_text(j);
        return kExitOk;
      }
      if (query.name.empty()) throw CLI::RequiredError("--name");
      const auto c = theory::evaluate_constant(query);
      out << json_text({{"name", c.name}, {"value", c.value}, {"domain", c.domain}, {"anchor", c.anchor}});
      return kExitOk;
    }

    if (c_optimize->parsed()) {
      const auto kind = opt_kind.resolve();
      settings.threads = threads;
      settings.record_trace = !trace_path.empty();
      const auto r = optimize::multistart(opt_n, opt_kind.d, kind, settings);
      if (!out_path.empty()) energy::write_configuration_file(out_path, r.config);
      if (!trace_path.empty()) {
        std::ostringstream t;
        t << "iter,energy,gradnorm\n";
        for (const auto& row : r.trace) t << row.iteration << ',' << fmt(row.energy) << ',' << fmt(row.grad_norm) << '\n';
        emit(out, trace_path, t.str());
      }
      if (json) {
        out << json_text({{"N", opt_n},
                          {"d", opt_kind.d},
                          {"kind", kind.label()},
                          {"energy", r.energy},
                          {"iterations", r.iterations},
                          {"grad_norm", r.grad_norm},
                          {"converged", r.converged},
                          {"restart_index", r.restart_index}});
      } else {
        out << "N " << opt_n << "  d " << opt_kind.d << "  kind " << kind.label() << '\n'
            << "energy " << fmt(r.energy) << '\n'
            << "iterations " << r.iterations << "  grad_norm " << fmt(r.grad_norm)
            << (r.converged ? "  converged" : "  not converged") << "  restart " << r.restart_index << '\n';
      }
      return kExitOk;
    }

    if (c_circle->parsed()) {
      if (circ_log == circ_s.has_value()) throw CLI::ValidationError("circle", "give exactly one of --s or --log");
      if (circ_log) {
        const double e = energy::circle_exact_log(circ_n);
        if (json) {
          out << json_text({{"N", circ_n}, {"kind", "log"}, {"exact", e}});
        } else {
          out << "exact " << fmt(e) << '\n';
        }
        return kExitOk;
      }
      const double exact = energy::circle_exact(*circ_s, circ_n);
      Json j{{"N", circ_n}, {"s", *circ_s}, {"exact", exact}};
      std::ostringstream text;
      text << "exact " << fmt(exact) << '\n';
      if (compare) {
        const double approx = energy::circle_expansion(*circ_s, circ_n, circ_p);
        const double rel = std::abs(exact - approx) / std::abs(exact);
        const double digits = rel > 0.0 ? -std::log10(rel) : 17.0;
        j["p"] = circ_p;
        j["expansion"] = approx;
        j["relative_error"] = rel;
        j["digits"] = digits;
        text << "expansion(p=" << circ_p << ") " << fmt(approx) << '\n'
             << "relative_error " << fmt(rel) << "  digits " << fmt(digits) << '\n';
      }
      out << (json ? json_text(j) : text.str());
      return kExitOk;
    }

    if (c_remainder->parsed()) {
      const auto kind = rem_kind.resolve();
      if (table_path.empty() == config_path.empty()) {
        throw CLI::ValidationError("remainder", "give exactly one of --table or --config");
      }
      harness::EnergyTable t{kind, rem_kind.d, {}};
      if (!table_path.empty()) {
        t = harness::ingest_table(table_path, kind, rem_kind.d);
      } else {
        const auto c = energy::read_configuration_file(config_path);
        t.d = c.d();
        t.rows.push_back({static_cast<long long>(c.size()), energy::energy(c, kind, threads), harness::Source::computed});
      }
      std::ostringstream text;
      if (json) {
        text << harness::report_json(t) << '\n';
      } else {
        harness::write_report_csv(text, t);
      }
      emit(out, out_path, text.str());
      return kExitOk;
    }

    if (c_fit->parsed()) {
      const auto kind = fit_kind.resolve();
      const auto t = harness::slice(harness::ingest_table(table_path, kind, fit_kind.d), nmin, nmax);
      const auto f = harness::fit_constants(t, harness::parse_fit_model(model), harness::parse_fit_norm(norm));
      if (json) {
        out << json_text({{"model", harness::to_string(f.model)},
                          {"norm", harness::to_string(f.norm)},
                          {"coefficients", f.coefficients},
                          {"residual_l1", f.residual_l1},
                          {"residual_l2", f.residual_l2},
                          {"rows_used", f.rows_used}});
      } else {
        out << "model " << harness::to_string(f.model) << "  norm " << harness::to_string(f.norm) << "  rows "
            << f.rows_used << '\n';
        for (const auto& [k, v] : f.coefficients) out << k << ' ' << fmt(v) << '\n';
        out << "residual_l1 " << fmt(f.residual_l1) << "  residual_l2 " << fmt(f.residual_l2) << '\n';
      }
      return kExitOk;
    }

    if (c_verify->parsed()) {
      const auto kind = ver_kind.resolve();
      const auto t = harness::ingest_table(table_path, kind, ver_kind.d);
      const auto rep = harness::verify_bounds(t, asymptotic_from);
      if (json) {
        out << harness::report_json(t, std::nullopt, rep) << '\n';
      } else {
        out << "N,bound,side,value,limit,hard,satisfied,slack\n";
        for (const auto& c : rep.checks) {
          const char* side = c.side == harness::BoundSide::lower ? "lower"
                             : c.side == harness::BoundSide::upper ? "upper"
                                                                   : "equal";
          out << c.n << ',' << c.bound << ',' << side << ',' << fmt(c.value) << ',' << fmt(c.limit) << ','
              << (c.hard ? "hard" : "soft") << ',' << (c.satisfied ? "yes" : "no") << ',' << fmt(c.slack) << '\n';
        }
        out << "hard_violations " << rep.hard_violations << "  soft_violations " << rep.soft_violations << '\n';
      }
      return kExitOk;
    }

    if (c_berezin->parsed()) {
      const double v = harness::berezin_estimate(ber_s, ber_n, shells);
      if (json) {
        out << json_text({{"s", ber_s}, {"N", ber_n}, {"shells", shells}, {"estimate", v}});
      } else {
        out << "estimate " << fmt(v) << '\n';
      }
      return kExitOk;
    }

    if (c_hist->parsed()) {
      const auto c = energy::read_configuration_file(config_path);
      const auto h = energy::distance_histogram(c, bins, dmax);
      std::ostringstream text;
      if (json) {
        Json rows = Json::array();
        for (std::size_t b = 0; b < h.counts.size(); ++b) {
          rows.push_back({{"bin_lo", h.edges[b]}, {"bin_hi", h.edges[b + 1]}, {"count", h.counts[b]}});
        }
        text << json_text({{"bins", rows}, {"hex_reference", h.hex_reference}});
      } else {
        energy::write_histogram_csv(text, h);
      }
      emit(out, out_path, text.str());
      return kExitOk;
    }
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const optimize::StagnationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace energylab::cli
