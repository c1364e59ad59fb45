#include "gfix/config.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace gfix {

namespace {

using nlohmann::json;

double bound_from(const json& j, const char* what) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "pi") return 3.14159265358979323846;
    throw ConfigError(std::string(what) + ": unknown bound literal '" + s + "'");
  }
  return j.get<double>();
}

Carrier carrier_from(const json& j) {
  if (j.contains("elements")) return Carrier::finite(j.at("elements").get<std::vector<double>>());
  if (j.contains("interval")) {
    const json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2)
      throw ConfigError("space.interval must be [lo, hi]");
    return Carrier::interval(bound_from(iv[0], "interval lo"), bound_from(iv[1], "interval hi"));
  }
  throw ConfigError("space needs either 'interval' or 'elements'");
}

std::shared_ptr<const GMetricSpace> space_from(const json& j) {
  std::string builtin = j.at("builtin").get<std::string>();
  if (builtin == "max_abs_diff")
    return std::make_shared<GMetricSpace>(GMetricSpace::max_abs_diff(carrier_from(j)));
  if (builtin == "max_value")
    return std::make_shared<GMetricSpace>(GMetricSpace::max_value());
  if (builtin == "discrete")
    return std::make_shared<GMetricSpace>(GMetricSpace::discrete(carrier_from(j)));
  if (builtin == "custom_expr")
    return std::make_shared<GMetricSpace>(
        GMetricSpace::custom_expr(carrier_from(j), j.at("expr").get<std::string>()));
  throw ConfigError("unknown space builtin '" + builtin + "'");
}

// Phi spec: "linear(a)" or an expression in x.
PhiOrder order_from(std::shared_ptr<const GMetricSpace> space, const std::string& phi_spec,
                    double tol) {
  double a;
  if (std::sscanf(phi_spec.c_str(), "linear(%lf)", &a) == 1)
    return PhiOrder::linear(std::move(space), a, tol);
  return PhiOrder::from_expr(std::move(space), phi_spec, tol);
}

SelfMap selfmap_from(const json& j) {
  std::string spec = j.is_string() ? j.get<std::string>() : j.at("expr").get<std::string>();
  double k;
  if (spec == "identity") return SelfMap::identity();
  if (std::sscanf(spec.c_str(), "linear(%lf)", &k) == 1) return SelfMap::linear(k);
  return SelfMap::from_expr(spec);
}

NTupleMap map_from(const json& j) {
  if (j.contains("builtin")) {
    std::string builtin = j.at("builtin").get<std::string>();
    if (builtin == "paper_f3") return NTupleMap::paper_f3();
    if (builtin == "sine_perturbed")
      return NTupleMap::sine_perturbed(j.at("arity").get<int>());
    throw ConfigError("unknown map builtin '" + builtin + "'");
  }
  return NTupleMap::from_expr(j.at("expr").get<std::string>(), j.at("arity").get<int>());
}

Scheme scheme_from(const std::string& s) {
  if (s == "single") return Scheme::Single;
  if (s == "pair") return Scheme::Pair;
  if (s == "triple") return Scheme::Triple;
  if (s == "chain") return Scheme::Chain;
  throw ConfigError("unknown scheme '" + s + "'");
}

}  // namespace

ProblemConfig ProblemConfig::from_json_text(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ": " + e.what());
  }

  try {
    auto space = space_from(j.at("space"));
    double tol = j.value("tol", 1e-12);
    ProblemConfig cfg{
        j.value("name", "problem"),
        space,
        order_from(space, j.value("phi", std::string("linear(1)")), tol),
        std::nullopt,
        {},
        Scheme::Single,
        {},
        {},
        {},
        tol,
        j.value("dual", false)};

    if (j.contains("map")) cfg.map = map_from(j.at("map"));
    if (j.contains("selfmaps"))
      for (const json& sm : j.at("selfmaps")) cfg.selfmaps.push_back(selfmap_from(sm));
    if (j.contains("scheme")) cfg.scheme = scheme_from(j.at("scheme").get<std::string>());

    if (j.contains("seed")) {
      for (const json& v : j.at("seed")) {
        if (space->carrier().is_finite())
          cfg.seed.push_back(space->carrier().element_at(v.get<std::size_t>()));
        else
          cfg.seed.push_back(Point::scalar(v.get<double>()));
      }
    }

    if (j.contains("solver")) {
      const json& s = j.at("solver");
      cfg.solver.eps = s.value("eps", 1e-9);
      cfg.solver.max_iter = s.value("max_iter", std::size_t{1000});
      if (s.contains("phi_cap")) {
        if (s.at("phi_cap").is_null()) cfg.solver.phi_cap.reset();
        else cfg.solver.phi_cap = s.at("phi_cap").get<double>();
      }
      cfg.solver.cauchy_window = s.value("cauchy_window", std::size_t{8});
      cfg.solver.validate();
    }

    if (j.contains("samples")) {
      const json& s = j.at("samples");
      const json& range = s.at("range");
      cfg.samples.lo = bound_from(range[0], "samples lo");
      cfg.samples.hi = bound_from(range[1], "samples hi");
      cfg.samples.count = s.value("count", std::size_t{500});
      cfg.samples.random = s.value("random", false);
      cfg.samples.rng_seed = s.value("rng_seed", std::uint64_t{42});
    }

    // Arity consistency across F, seed tuple and scheme.
    if (cfg.map) {
      if (cfg.map->arity() < 2) throw ConfigError("map arity must be >= 2");
      if (!cfg.seed.empty() && static_cast<int>(cfg.seed.size()) != cfg.map->arity())
        throw ConfigError("seed tuple arity does not match map arity");
    }
    if (cfg.scheme == Scheme::Pair && cfg.selfmaps.size() != 1)
      throw ConfigError("pair scheme needs exactly one self-map");
    if (cfg.scheme == Scheme::Triple && cfg.selfmaps.size() != 2)
      throw ConfigError("triple scheme needs exactly two self-maps [G, H]");
    if (cfg.scheme == Scheme::Chain && cfg.selfmaps.empty())
      throw ConfigError("chain scheme needs self-maps [G2, .., Gr]");
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(source + ": " + e.what());
  }
}

ProblemConfig ProblemConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str(), path);
}

std::vector<Point> ProblemConfig::sample_points() const {
  if (space->carrier().is_finite()) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < space->carrier().size(); ++i)
      pts.push_back(space->carrier().element_at(i));
    return pts;
  }
  if (samples.random) {
    std::mt19937_64 rng(samples.rng_seed);
    std::uniform_real_distribution<double> dist(samples.lo, samples.hi);
    std::vector<Point> pts;
    pts.reserve(samples.count);
    for (std::size_t i = 0; i < samples.count; ++i) pts.push_back(Point::scalar(dist(rng)));
    return pts;
  }
  return scalar_grid(samples.lo, samples.hi, samples.count);
}

std::vector<Tuple> ProblemConfig::sample_tuples(int arity) const {
  return sample_tuples_uniform(samples.lo, samples.hi, arity, samples.count, samples.rng_seed);
}

}  // namespace gfix
