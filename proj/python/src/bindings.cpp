#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "energylab/energy.hpp"
#include "energylab/harness.hpp"
#include "energylab/optimize.hpp"
#include "energylab/specfun.hpp"
#include "energylab/theory.hpp"

namespace py = pybind11;
using namespace energylab;
using energy::Configuration;
using energy::EnergyKind;

namespace {

EnergyKind make_kind(const std::string& kind, std::optional<double> s) {
  if (kind == "log") {
    if (s) throw DomainError("s is only meaningful for the Riesz kernel", "kernel choice");
    return EnergyKind::log();
  }
  if (kind == "riesz") {
    if (!s) throw DomainError("the Riesz kernel needs an exponent s", "kernel choice");
    return EnergyKind::riesz(*s);
  }
  throw DomainError("unknown kernel '" + kind + "' (use 'log' or 'riesz')", "kernel choice");
}

// (N, d+1) array of unit vectors.
Configuration to_config(const py::array_t<double, py::array::c_style | py::array::forcecast>& pts) {
  if (pts.ndim() != 2 || pts.shape(1) < 2) {
    throw DomainError("points must be an array of shape (N, d+1) with d >= 1", "configuration");
  }
  const int d = static_cast<int>(pts.shape(1)) - 1;
  std::vector<double> coords(pts.data(), pts.data() + pts.size());
  return Configuration(d, std::move(coords));
}

py::array_t<double> to_array(const Configuration& c) {
  py::array_t<double> out({static_cast<py::ssize_t>(c.size()), static_cast<py::ssize_t>(c.ambient())});
  std::copy(c.coords().begin(), c.coords().end(), out.mutable_data());
  return out;
}

harness::EnergyTable make_table(const std::vector<long long>& ns, const std::vector<double>& energies,
                                const EnergyKind& kind, int d) {
  if (ns.size() != energies.size()) throw DomainError("ns and energies differ in length", "energy table");
  harness::EnergyTable t{kind, d, {}};
  for (std::size_t i = 0; i < ns.size(); ++i) t.rows.push_back({ns[i], energies[i], harness::Source::ingested});
  t.validate();
  return t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Riesz and logarithmic energies on spheres";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  auto domain = py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<UnsupportedError>(m, "UnsupportedError", domain.ptr());
  py::register_exception<PoleError>(m, "PoleError", domain.ptr());
  py::register_exception<SingularConfigurationError>(m, "SingularConfigurationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<optimize::StagnationError>(m, "StagnationError", base.ptr());

  // ---- constants
  m.def(
      "constant",
      [](const std::string& name, std::optional<double> s, std::optional<int> d, std::optional<int> k,
         std::optional<double> rho, std::optional<double> a) {
        const auto c = theory::evaluate_constant({name, s, d, k, rho, a});
        py::dict out;
        out["name"] = c.name;
        out["value"] = c.value;
        out["domain"] = c.domain;
        out["anchor"] = c.anchor;
        return out;
      },
      py::arg("name"), py::kw_only(), py::arg("s") = py::none(), py::arg("d") = py::none(),
      py::arg("k") = py::none(), py::arg("rho") = py::none(), py::arg("a") = py::none(),
      "Evaluate a named constant; returns {name, value, domain, anchor}.");
  m.def("constant_catalog", &theory::constant_catalog, "Names and descriptions of the known constants.");
  m.def("hurwitz_zeta", &specfun::hurwitz_zeta, py::arg("s"), py::arg("a"));
  m.def("epstein_hex", &specfun::epstein_hex, py::arg("s"));
  m.def("v_s_sphere", [](double s, int d) { return theory::v_s_sphere(s, theory::SphereDim(d)); }, py::arg("s"),
        py::arg("d"));
  m.def("v_log_sphere", [](int d) { return theory::v_log_sphere(theory::SphereDim(d)); }, py::arg("d"));

  // ---- energies
  m.def(
      "energy",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& pts, const std::string& kind,
         std::optional<double> s, int threads) {
        const auto c = to_config(pts);
        const auto k = make_kind(kind, s);
        py::gil_scoped_release nogil;
        return energy::energy(c, k, threads);
      },
      py::arg("points"), py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("threads") = 1);
  m.def(
      "energy_and_gradient",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& pts, const std::string& kind,
         std::optional<double> s, int threads) {
        const auto c = to_config(pts);
        const auto r = energy::energy_and_gradient(c, make_kind(kind, s), threads);
        py::array_t<double> g({static_cast<py::ssize_t>(c.size()), static_cast<py::ssize_t>(c.ambient())});
        std::copy(r.gradient.begin(), r.gradient.end(), g.mutable_data());
        return py::make_tuple(r.energy, g);
      },
      py::arg("points"), py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("threads") = 1,
      "Energy and its tangential gradient, shape (N, d+1).");
  m.def("circle_exact", &energy::circle_exact, py::arg("s"), py::arg("n"));
  m.def("circle_exact_log", &energy::circle_exact_log, py::arg("n"));
  m.def("circle_expansion", &energy::circle_expansion, py::arg("s"), py::arg("n"), py::arg("p"));

  // ---- optimizer
  m.def(
      "optimize",
      [](int n, int d, const std::string& kind, std::optional<double> s, int restarts, std::uint64_t seed,
         double tol, int max_iters, int threads) {
        optimize::OptimizerSettings st;
        st.restarts = restarts;
        st.seed = seed;
        st.grad_tol = tol;
        st.max_iters = max_iters;
        st.threads = threads;
        const auto k = make_kind(kind, s);
        std::optional<optimize::OptimizationResult> r;
        {
          py::gil_scoped_release nogil;
          r.emplace(optimize::multistart(n, d, k, st));
        }
        py::dict out;
        out["points"] = to_array(r->config);
        out["energy"] = r->energy;
        out["iterations"] = r->iterations;
        out["grad_norm"] = r->grad_norm;
        out["converged"] = r->converged;
        out["restart_index"] = r->restart_index;
        return out;
      },
      py::arg("n"), py::arg("d") = 2, py::arg("kind") = "log", py::arg("s") = py::none(),
      py::arg("restarts") = 0, py::arg("seed") = 0, py::arg("tol") = 1e-7, py::arg("max_iters") = 20000,
      py::arg("threads") = 1, "Multistart search; returns points, energy and convergence data.");

  // ---- harness
  m.def(
      "remainders",
      [](const std::vector<long long>& ns, const std::vector<double>& energies, const std::string& kind,
         std::optional<double> s, int d) {
        const auto rows = harness::remainders(make_table(ns, energies, make_kind(kind, s), d));
        std::vector<double> out;
        for (const auto& r : rows) out.push_back(r.value);
        return out;
      },
      py::arg("ns"), py::arg("energies"), py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("d") = 2);
  m.def(
      "conjectured_limit",
      [](const std::string& kind, std::optional<double> s, int d) -> py::object {
        const auto l = harness::conjectured_limit(make_kind(kind, s), d);
        if (!l) return py::none();
        return py::make_tuple(l->name, l->value);
      },
      py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("d") = 2);
  m.def(
      "fit_constants",
      [](const std::vector<long long>& ns, const std::vector<double>& energies, const std::string& kind,
         std::optional<double> s, int d, const std::string& model, const std::string& norm) {
        const auto f = harness::fit_constants(make_table(ns, energies, make_kind(kind, s), d),
                                              harness::parse_fit_model(model), harness::parse_fit_norm(norm));
        py::dict out;
        out["coefficients"] = f.coefficients;
        out["residual_l1"] = f.residual_l1;
        out["residual_l2"] = f.residual_l2;
        out["rows_used"] = f.rows_used;
        return out;
      },
      py::arg("ns"), py::arg("energies"), py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("d") = 2,
      py::arg("model") = "C", py::arg("norm") = "l1");
  m.def(
      "verify_bounds",
      [](const std::vector<long long>& ns, const std::vector<double>& energies, const std::string& kind,
         std::optional<double> s, int d, long long asymptotic_from) {
        const auto rep =
            harness::verify_bounds(make_table(ns, energies, make_kind(kind, s), d), asymptotic_from);
        py::list checks;
        for (const auto& c : rep.checks) {
          py::dict row;
          row["n"] = c.n;
          row["bound"] = c.bound;
          row["side"] = c.side == harness::BoundSide::lower   ? "lower"
                        : c.side == harness::BoundSide::upper ? "upper"
                                                              : "equal";
          row["value"] = c.value;
          row["limit"] = c.limit;
          row["hard"] = c.hard;
          row["satisfied"] = c.satisfied;
          row["slack"] = c.slack;
          checks.append(row);
        }
        py::dict out;
        out["checks"] = checks;
        out["hard_violations"] = rep.hard_violations;
        out["soft_violations"] = rep.soft_violations;
        return out;
      },
      py::arg("ns"), py::arg("energies"), py::arg("kind") = "log", py::arg("s") = py::none(), py::arg("d") = 2,
      py::arg("asymptotic_from") = 100);
  m.def("berezin_estimate", &harness::berezin_estimate, py::arg("s"), py::arg("n"), py::arg("shells") = 7);
}
