#include "gfix/fixpoint.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace gfix {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Converged: return "converged";
    case SolveStatus::MaxIterExceeded: return "max_iter_exceeded";
    case SolveStatus::HypothesisViolated: return "hypothesis_violated";
    case SolveStatus::DivergedPhiCap: return "diverged(phi_cap)";
  }
  return "?";
}

namespace {

struct ScheduledStep {
  std::string label;
  std::function<Tuple(const Tuple&)> apply;
};

std::vector<double> phi_of(const PhiOrder& order, const Tuple& X) {
  std::vector<double> out;
  out.reserve(X.size());
  for (const Point& p : X) out.push_back(order.phi(p));
  return out;
}

// The orbit runner shared by all four schemes. `schedule` is one cycle of
// steps; `verify` is the scheme's definition-level residual.
FixpointReport run_orbit(const Tuple& x0, const NTupleMap& F, const PhiOrder& order,
                         const SolverConfig& cfg,
                         const std::vector<ScheduledStep>& schedule,
                         const std::function<double(const Tuple&)>& verify) {
  cfg.validate();
  if (static_cast<int>(x0.size()) != F.arity())
    throw std::invalid_argument("iterate: seed arity mismatch");
  const Carrier& carrier = order.space().carrier();
  const std::size_t n = x0.size();
  for (const Point& p : x0) carrier.require(p, "iterate seed");

  FixpointReport rep;

  // Seed condition x0^i <= F(rot_i x0): recorded, advisory only.
  {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
      Point fx = F.eval(rotate_left(x0, i));
      if (!carrier.contains(fx) || !order.leq(x0[i], fx)) { ok = false; break; }
    }
    rep.monitors.seed_condition = ok;
  }

  // Per-component histories feed the trailing-window Cauchy residual.
  std::vector<std::vector<Point>> history(n);
  for (std::size_t i = 0; i < n; ++i) history[i].push_back(x0[i]);

  auto trailing_cauchy = [&](std::size_t i) {
    const auto& h = history[i];
    std::size_t w = std::min(h.size(), cfg.cauchy_window);
    if (w < 2) return 0.0;
    return cauchy_residual(order.space(),
                           std::vector<Point>(h.end() - static_cast<std::ptrdiff_t>(w), h.end()));
  };

  Tuple cur = x0;
  rep.trace.steps.push_back({0, "seed", cur, phi_of(order, cur), std::vector<double>(n, 0.0)});

  std::size_t l = 0;
  while (l < cfg.max_iter) {
    const ScheduledStep& step = schedule[l % schedule.size()];
    Tuple next = step.apply(cur);
    ++l;
    for (const Point& p : next) carrier.require(p, "iterate step");

    // Monitors: preorder chain, phi monotone, phi bounded.
    if (!order.leq_tuple(cur, next)) {
      if (rep.monitors.preorder_chain) {
        rep.monitors.preorder_chain = false;
        rep.monitors.preorder_chain_first_violation = l;
      }
    }
    std::vector<double> phis = phi_of(order, next);
    for (std::size_t i = 0; i < n; ++i) {
      if (phis[i] < order.phi(cur[i]) - order.tol()) rep.monitors.phi_monotone = false;
      if (cfg.phi_cap && phis[i] > *cfg.phi_cap) rep.monitors.phi_bounded = false;
    }

    for (std::size_t i = 0; i < n; ++i) history[i].push_back(next[i]);
    std::vector<double> cauchys(n);
    double worst_cauchy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      cauchys[i] = trailing_cauchy(i);
      worst_cauchy = std::max(worst_cauchy, cauchys[i]);
    }
    rep.trace.steps.push_back({l, step.label, next, phis, cauchys});
    cur = std::move(next);

    if (!rep.monitors.phi_bounded) {
      rep.status = SolveStatus::DivergedPhiCap;
      break;
    }

    double residual = verify(cur);
    if (worst_cauchy < cfg.eps && residual <= cfg.eps) {
      rep.status = SolveStatus::Converged;
      rep.cauchy = worst_cauchy;
      break;
    }
  }

  rep.iterations = l;
  rep.candidate = cur;
  rep.fixed_point_residual = verify(cur);
  if (rep.status != SolveStatus::Converged && rep.status != SolveStatus::DivergedPhiCap) {
    rep.status = (!rep.monitors.preorder_chain || !rep.monitors.phi_monotone)
                     ? SolveStatus::HypothesisViolated
                     : SolveStatus::MaxIterExceeded;
  }
  if (rep.status != SolveStatus::Converged) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, trailing_cauchy(i));
    rep.cauchy = worst;
  }
  return rep;
}

ScheduledStep f_step(const NTupleMap& F) {
  return {"F", [&F](const Tuple& X) { return cyclic_apply(F, X); }};
}

ScheduledStep self_step(const SelfMap& g, std::string label) {
  return {std::move(label), [&g](const Tuple& X) { return g.eval_tuple(X); }};
}

}  // namespace

FixpointReport iterate_single(const NTupleMap& F, const Tuple& x0, const PhiOrder& order,
                              const SolverConfig& cfg) {
  return run_orbit(x0, F, order, cfg, {f_step(F)}, [&](const Tuple& X) {
    return verify_ntuple_fixed_point(F, X, order.space());
  });
}

FixpointReport iterate_pair(const NTupleMap& F, const SelfMap& g, const Tuple& x0,
                            const PhiOrder& order, const SolverConfig& cfg) {
  return run_orbit(x0, F, order, cfg, {f_step(F), self_step(g, "g")}, [&](const Tuple& X) {
    return verify_common_fixed_point(F, {g}, X, order.space());
  });
}

FixpointReport iterate_triple(const NTupleMap& F, const SelfMap& G, const SelfMap& H,
                              const Tuple& x0, const PhiOrder& order, const SolverConfig& cfg) {
  return run_orbit(x0, F, order, cfg, {self_step(H, "H"), f_step(F), self_step(G, "G")},
                   [&](const Tuple& X) {
                     return verify_common_fixed_point(F, {G, H}, X, order.space());
                   });
}

FixpointReport iterate_chain(const NTupleMap& F, const std::vector<SelfMap>& chain,
                             const Tuple& x0, const PhiOrder& order, const SolverConfig& cfg) {
  if (chain.empty()) throw std::invalid_argument("iterate_chain: empty chain");
  if (chain.size() == 1) return iterate_pair(F, chain[0], x0, order, cfg);

  // chain = [G_2, .., G_r]; one cycle is G_r, G_{r-1}, .., G_3, F, G_2.
  std::vector<ScheduledStep> schedule;
  for (std::size_t k = chain.size(); k >= 2; --k)
    schedule.push_back(self_step(chain[k - 1], "G" + std::to_string(k + 1)));
  schedule.push_back(f_step(F));
  schedule.push_back(self_step(chain[0], "G2"));

  return run_orbit(x0, F, order, cfg, schedule, [&](const Tuple& X) {
    return verify_common_fixed_point(F, chain, X, order.space());
  });
}

double verify_ntuple_fixed_point(const NTupleMap& F, const Tuple& X, const GMetricSpace& space) {
  if (static_cast<int>(X.size()) != F.arity())
    throw std::invalid_argument("verify_ntuple_fixed_point: arity mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    Point fx = F.eval(rotate_left(X, i));
    worst = std::max(worst, eval_g(space, fx, X[i], X[i]));
  }
  return worst;
}

double verify_common_fixed_point(const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
                                 const Tuple& X, const GMetricSpace& space) {
  double worst = verify_ntuple_fixed_point(F, X, space);
  for (const SelfMap& h : selfmaps)
    for (const Point& x : X)
      worst = std::max(worst, eval_g(space, h.eval(x), x, x));
  return worst;
}

double verify_coincidence(const NTupleMap& F, const std::vector<SelfMap>& selfmaps,
                          const Tuple& X, const GMetricSpace& space) {
  if (selfmaps.empty())
    throw std::invalid_argument("verify_coincidence: need at least one self-map");
  double worst = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    std::vector<Point> images;
    images.push_back(F.eval(rotate_left(X, i)));
    for (const SelfMap& h : selfmaps) images.push_back(h.eval(X[i]));
    for (std::size_t a = 0; a < images.size(); ++a)
      for (std::size_t b = a + 1; b < images.size(); ++b)
        worst = std::max(worst, eval_g(space, images[a], images[b], images[b]));
  }
  return worst;
}

}  // namespace gfix
