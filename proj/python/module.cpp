#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <sstream>

#include "gfix/checkers.hpp"
#include "gfix/config.hpp"
#include "gfix/fixpoint.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/order.hpp"
#include "gfix/run.hpp"
#include "gfix/serialize.hpp"

namespace py = pybind11;
using namespace gfix;

namespace {

using SpacePtr = std::shared_ptr<GMetricSpace>;

Tuple to_tuple(const std::vector<double>& vals) {
  Tuple t;
  t.reserve(vals.size());
  for (double v : vals) t.push_back(Point::scalar(v));
  return t;
}

std::vector<Point> to_points(const std::vector<double>& vals) { return to_tuple(vals); }

std::vector<double> from_tuple(const Tuple& t) {
  std::vector<double> out;
  out.reserve(t.size());
  for (const Point& p : t) out.push_back(p.value());
  return out;
}

PhiOrder make_order(SpacePtr space, const std::string& phi_spec, double tol) {
  double a;
  if (std::sscanf(phi_spec.c_str(), "linear(%lf)", &a) == 1)
    return PhiOrder::linear(std::move(space), a, tol);
  return PhiOrder::from_expr(std::move(space), phi_spec, tol);
}

py::dict report_dict(const FixpointReport& rep) {
  py::dict monitors;
  monitors["preorder_chain"] = rep.monitors.preorder_chain;
  monitors["phi_monotone"] = rep.monitors.phi_monotone;
  monitors["phi_bounded"] = rep.monitors.phi_bounded;
  if (rep.monitors.seed_condition) monitors["seed_condition"] = *rep.monitors.seed_condition;
  py::dict d;
  d["status"] = std::string(to_string(rep.status));
  d["candidate"] = from_tuple(rep.candidate);
  d["residual"] = rep.fixed_point_residual;
  d["cauchy"] = rep.cauchy;
  d["iterations"] = rep.iterations;
  d["monitors"] = monitors;
  return d;
}

py::dict relation_dict(const RelationReport& rep) {
  py::list witnesses;
  for (const RelationWitness& w : rep.witnesses) {
    py::dict wd;
    std::vector<double> input;
    for (const Point& p : w.input) input.push_back(p.value());
    wd["input"] = input;
    wd["lhs"] = w.lhs.value();
    wd["rhs"] = w.rhs.value();
    witnesses.append(wd);
  }
  py::dict d;
  d["condition"] = rep.condition;
  d["pass"] = rep.pass;
  d["witnesses"] = witnesses;
  return d;
}

SolverConfig make_cfg(double eps, std::size_t max_iter, py::object phi_cap,
                      std::size_t cauchy_window) {
  SolverConfig cfg;
  cfg.eps = eps;
  cfg.max_iter = max_iter;
  cfg.cauchy_window = cauchy_window;
  if (phi_cap.is_none()) cfg.phi_cap.reset();
  else cfg.phi_cap = phi_cap.cast<double>();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_gfix, m) {
  m.doc() = "G-metric spaces, phi-induced preorders and n-tuple fixed-point iteration";

  py::class_<GMetricSpace, SpacePtr>(m, "GMetricSpace")
      .def_property_readonly("name", &GMetricSpace::name);
  py::class_<PhiOrder>(m, "PhiOrder");
  py::class_<NTupleMap>(m, "NTupleMap")
      .def_property_readonly("arity", &NTupleMap::arity)
      .def_property_readonly("name", &NTupleMap::name);
  py::class_<SelfMap>(m, "SelfMap").def_property_readonly("name", &SelfMap::name);

  // Spaces and the order.
  m.def("space_max_abs_diff", [](double lo, double hi) -> SpacePtr {
    return std::make_shared<GMetricSpace>(GMetricSpace::max_abs_diff(Carrier::interval(lo, hi)));
  }, py::arg("lo") = 0.0, py::arg("hi") = std::numeric_limits<double>::infinity());
  m.def("space_max_value", []() -> SpacePtr {
    return std::make_shared<GMetricSpace>(GMetricSpace::max_value());
  });
  m.def("space_discrete", [](const std::vector<double>& elements) -> SpacePtr {
    return std::make_shared<GMetricSpace>(GMetricSpace::discrete(Carrier::finite(elements)));
  });
  m.def("space_custom_expr", [](double lo, double hi, const std::string& expr) -> SpacePtr {
    return std::make_shared<GMetricSpace>(
        GMetricSpace::custom_expr(Carrier::interval(lo, hi), expr));
  });
  m.def("make_order", &make_order, py::arg("space"), py::arg("phi") = "linear(1)",
        py::arg("tol") = 1e-12,
        "phi is 'linear(a)' or an expression in x");

  m.def("eval_g", [](const SpacePtr& s, double x, double y, double z) {
    return eval_g(*s, Point::scalar(x), Point::scalar(y), Point::scalar(z));
  });
  m.def("derived_dg", [](const SpacePtr& s, double x, double y) {
    return derived_dg(*s, Point::scalar(x), Point::scalar(y));
  });
  m.def("cauchy_residual", [](const SpacePtr& s, const std::vector<double>& window) {
    return cauchy_residual(*s, to_points(window));
  });
  m.def("check_axioms", [](const SpacePtr& s, const std::vector<double>& samples, double tol) {
    AxiomReport rep = check_axioms(*s, to_points(samples), tol);
    py::dict d;
    auto add = [&](const char* name, const AxiomStatus& st) { d[name] = st.pass; };
    add("G1", rep.g1); add("G2", rep.g2); add("G3", rep.g3);
    add("G4", rep.g4); add("G5", rep.g5);
    d["all_pass"] = rep.all_pass();
    return d;
  }, py::arg("space"), py::arg("samples"), py::arg("tol") = 1e-12);

  m.def("leq", [](const PhiOrder& o, double x, double y) {
    return o.leq(Point::scalar(x), Point::scalar(y));
  });
  m.def("check_preorder", [](const PhiOrder& o, const std::vector<double>& samples, double tol) {
    OrderReport rep = check_preorder(o, to_points(samples), tol);
    py::dict d;
    d["reflexive"] = rep.reflexive;
    d["transitive"] = rep.transitive;
    d["pass"] = rep.pass();
    return d;
  }, py::arg("order"), py::arg("samples"), py::arg("tol") = 1e-12);

  // Maps.
  m.def("ntuple_map", [](const std::string& body, int arity) {
    return NTupleMap::from_expr(body, arity);
  });
  m.def("sine_perturbed", &NTupleMap::sine_perturbed);
  m.def("paper_f3", &NTupleMap::paper_f3);
  m.def("self_map", &SelfMap::from_expr);
  m.def("linear_map", &SelfMap::linear);
  m.def("eval_map", [](const NTupleMap& F, const std::vector<double>& args) {
    return F.eval(to_tuple(args)).value();
  });
  m.def("cyclic_apply", [](const NTupleMap& F, const std::vector<double>& X) {
    return from_tuple(cyclic_apply(F, to_tuple(X)));
  });

  // Relational checkers.
  m.def("check_weakly_related",
        [](const NTupleMap& F, const SelfMap& g, const PhiOrder& order,
           const std::vector<std::vector<double>>& tuples) {
          std::vector<Tuple> ts;
          for (const auto& t : tuples) ts.push_back(to_tuple(t));
          return relation_dict(check_weakly_related(F, g, order, ts));
        });
  m.def("check_embedded_pair",
        [](const SelfMap& g, const SelfMap& f, const PhiOrder& order,
           const std::vector<double>& samples) {
          return relation_dict(check_embedded_pair(g, f, order, to_points(samples)));
        });
  m.def("check_n_embedded_chain",
        [](const std::vector<SelfMap>& maps, const PhiOrder& order,
           const std::vector<double>& samples) {
          return relation_dict(check_n_embedded_chain(maps, order, to_points(samples)));
        });
  m.def("check_dual_chain",
        [](const std::vector<SelfMap>& maps, const PhiOrder& order,
           const std::vector<double>& samples) {
          return relation_dict(check_dual_chain(maps, order, to_points(samples)));
        });
  m.def("sample_tuples_uniform", [](double lo, double hi, int arity, std::size_t count,
                                    std::uint64_t seed) {
    std::vector<std::vector<double>> out;
    for (const Tuple& t : sample_tuples_uniform(lo, hi, arity, count, seed))
      out.push_back(from_tuple(t));
    return out;
  });

  // Solvers and verifiers.
  m.def("iterate_single",
        [](const NTupleMap& F, const std::vector<double>& x0, const PhiOrder& order, double eps,
           std::size_t max_iter, py::object phi_cap, std::size_t cauchy_window) {
          return report_dict(iterate_single(F, to_tuple(x0), order,
                                            make_cfg(eps, max_iter, phi_cap, cauchy_window)));
        },
        py::arg("F"), py::arg("x0"), py::arg("order"), py::arg("eps") = 1e-9,
        py::arg("max_iter") = 1000, py::arg("phi_cap") = py::cast(1e9),
        py::arg("cauchy_window") = 8);
  m.def("iterate_pair",
        [](const NTupleMap& F, const SelfMap& g, const std::vector<double>& x0,
           const PhiOrder& order, double eps, std::size_t max_iter, py::object phi_cap,
           std::size_t cauchy_window) {
          return report_dict(iterate_pair(F, g, to_tuple(x0), order,
                                          make_cfg(eps, max_iter, phi_cap, cauchy_window)));
        },
        py::arg("F"), py::arg("g"), py::arg("x0"), py::arg("order"), py::arg("eps") = 1e-9,
        py::arg("max_iter") = 1000, py::arg("phi_cap") = py::cast(1e9),
        py::arg("cauchy_window") = 8);
  m.def("iterate_triple",
        [](const NTupleMap& F, const SelfMap& G, const SelfMap& H,
           const std::vector<double>& x0, const PhiOrder& order, double eps,
           std::size_t max_iter, py::object phi_cap, std::size_t cauchy_window) {
          return report_dict(iterate_triple(F, G, H, to_tuple(x0), order,
                                            make_cfg(eps, max_iter, phi_cap, cauchy_window)));
        },
        py::arg("F"), py::arg("G"), py::arg("H"), py::arg("x0"), py::arg("order"),
        py::arg("eps") = 1e-9, py::arg("max_iter") = 1000, py::arg("phi_cap") = py::cast(1e9),
        py::arg("cauchy_window") = 8);
  m.def("iterate_chain",
        [](const NTupleMap& F, const std::vector<SelfMap>& chain,
           const std::vector<double>& x0, const PhiOrder& order, double eps,
           std::size_t max_iter, py::object phi_cap, std::size_t cauchy_window) {
          return report_dict(iterate_chain(F, chain, to_tuple(x0), order,
                                           make_cfg(eps, max_iter, phi_cap, cauchy_window)));
        },
        py::arg("F"), py::arg("chain"), py::arg("x0"), py::arg("order"), py::arg("eps") = 1e-9,
        py::arg("max_iter") = 1000, py::arg("phi_cap") = py::cast(1e9),
        py::arg("cauchy_window") = 8);

  m.def("verify_ntuple_fixed_point",
        [](const NTupleMap& F, const std::vector<double>& X, const SpacePtr& s) {
          return verify_ntuple_fixed_point(F, to_tuple(X), *s);
        });
  m.def("verify_common_fixed_point",
        [](const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
           const std::vector<double>& X, const SpacePtr& s) {
          return verify_common_fixed_point(F, selfmaps, to_tuple(X), *s);
        });
  m.def("verify_coincidence",
        [](const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
           const std::vector<double>& X, const SpacePtr& s) {
          return verify_coincidence(F, selfmaps, to_tuple(X), *s);
        });

  // Batch front-end, mirroring the CLI.
  m.def("run_config", [](const std::string& subcommand, const std::string& config_json,
                         bool write_files, const std::string& out_dir) {
    ProblemConfig cfg = ProblemConfig::from_json_text(config_json, "<string>");
    RunOptions opt;
    opt.write_files = write_files;
    opt.out_dir = out_dir;
    std::ostringstream report;
    int code = run_subcommand(subcommand, std::move(cfg), opt, report);
    return py::make_tuple(code, report.str());
  }, py::arg("subcommand"), py::arg("config_json"), py::arg("write_files") = false,
     py::arg("out_dir") = "out");
}
