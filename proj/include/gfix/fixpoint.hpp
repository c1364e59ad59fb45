#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gfix/maps.hpp"
#include "gfix/order.hpp"

namespace gfix {

struct SolverConfig {
  double eps = 1e-9;            // Cauchy / residual tolerance
  std::size_t max_iter = 1000;  // steps, counting every map application
  std::optional<double> phi_cap = 1e9;  // bounded-above monitor threshold
  std::size_t cauchy_window = 8;

  void validate() const {
    if (eps <= 0.0) throw std::invalid_argument("SolverConfig: eps must be > 0");
    if (max_iter < 1) throw std::invalid_argument("SolverConfig: max_iter must be >= 1");
    if (cauchy_window < 2) throw std::invalid_argument("SolverConfig: cauchy_window must be >= 2");
  }
};

/// One iterate of the orbit: the full tuple after step l, the map that
/// produced it, phi per component and the trailing-window Cauchy residual
/// per component.
struct OrbitStep {
  std::size_t l = 0;
  std::string producing_map;  // "seed" for l = 0
  Tuple x;
  std::vector<double> phi;
  std::vector<double> cauchy;  // trailing-window residual (0 while window has one point)
};

struct OrbitTrace {
  std::vector<OrbitStep> steps;
};

enum class SolveStatus { Converged, MaxIterExceeded, HypothesisViolated, DivergedPhiCap };

const char* to_string(SolveStatus s);

struct MonitorState {
  std::optional<bool> seed_condition;    // x0^i <= F(rot_i x0), recorded, advisory
  bool preorder_chain = true;            // x_l <= x_{l+1} componentwise, every step
  std::optional<std::size_t> preorder_chain_first_violation;
  bool phi_monotone = true;              // phi nondecreasing along each component
  bool phi_bounded = true;               // phi <= phi_cap along the orbit
};

struct FixpointReport {
  SolveStatus status = SolveStatus::MaxIterExceeded;
  Tuple candidate;
  double fixed_point_residual = 0.0;  // the scheme's definition-level residual
  double cauchy = 0.0;                // trailing-window residual at termination
  MonitorState monitors;
  std::size_t iterations = 0;
  OrbitTrace trace;

  bool converged() const { return status == SolveStatus::Converged; }
};

/// x_{l+1} = cyclic_apply(F, x_l), the single-map scheme.
FixpointReport iterate_single(const NTupleMap& F, const Tuple& x0, const PhiOrder& order,
                              const SolverConfig& cfg);

/// Alternating schedule: cyclic F-step, then componentwise g-step.
FixpointReport iterate_pair(const NTupleMap& F, const SelfMap& g, const Tuple& x0,
                            const PhiOrder& order, const SolverConfig& cfg);

/// Period-3 schedule per cycle: H-step, cyclic F-step, G-step.
FixpointReport iterate_triple(const NTupleMap& F, const SelfMap& G, const SelfMap& H,
                              const Tuple& x0, const PhiOrder& order, const SolverConfig& cfg);

/// Period-r schedule per cycle for chain = [G_2, .., G_r], r >= 3:
/// G_r, G_{r-1}, .., G_3, cyclic F-step, G_2.
FixpointReport iterate_chain(const NTupleMap& F, const std::vector<SelfMap>& chain,
                             const Tuple& x0, const PhiOrder& order, const SolverConfig& cfg);

/// max_i G(F(rot_i X), x^i, x^i); zero iff X is an exact n-tuple fixed point.
double verify_ntuple_fixed_point(const NTupleMap& F, const Tuple& X, const GMetricSpace& space);

/// Adds, for each self-map h and component i, G(h(x^i), x^i, x^i).
double verify_common_fixed_point(const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
                                 const Tuple& X, const GMetricSpace& space);

/// Pairwise residuals among {F(rot_i X)} and {h(x^i)}, without comparing to
/// x^i itself (the coincidence conditions).
double verify_coincidence(const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
                          const Tuple& X, const GMetricSpace& space);

}  // namespace gfix
