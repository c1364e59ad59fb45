#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfix/checkers.hpp"
#include "gfix/fixpoint.hpp"
#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/order.hpp"

namespace gfix {

/// Malformed or inconsistent problem config.
class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Scheme { Single, Pair, Triple, Chain };

struct SampleSpec {
  double lo = 0.0, hi = 1.0;
  std::size_t count = 500;
  bool random = false;          // evenly spaced grid unless set
  std::uint64_t rng_seed = 42;  // used by the random sampler
};

/// One declarative problem: space, order, maps, scheme, seed and solver
/// settings. Loaded from a JSON document; see the README for the schema.
struct ProblemConfig {
  std::string name;
  std::shared_ptr<const GMetricSpace> space;
  PhiOrder order;               // induced by the configured phi
  std::optional<NTupleMap> map; // F, absent for order/axiom-only configs
  std::vector<SelfMap> selfmaps;
  Scheme scheme = Scheme::Single;
  Tuple seed;
  SolverConfig solver;
  SampleSpec samples;
  double tol = 1e-12;
  bool dual_chain = false;      // check-chain runs the dual form as well

  /// Parses the JSON document in `text`; `source` names it in errors.
  static ProblemConfig from_json_text(const std::string& text, const std::string& source);
  static ProblemConfig from_file(const std::string& path);

  std::vector<Point> sample_points() const;
  std::vector<Tuple> sample_tuples(int arity) const;
};

}  // namespace gfix
