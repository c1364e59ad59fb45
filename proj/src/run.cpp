#include "gfix/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "gfix/serialize.hpp"

namespace gfix {

namespace {

namespace fs = std::filesystem;

void apply_overrides(ProblemConfig& cfg, const RunOptions& opt) {
  if (opt.eps) cfg.solver.eps = *opt.eps;
  if (opt.max_iter) cfg.solver.max_iter = *opt.max_iter;
  if (opt.rng_seed) cfg.samples.rng_seed = *opt.rng_seed;
  cfg.solver.validate();
}

void write_file(const RunOptions& opt, const std::string& name, const std::string& file,
                const std::string& content) {
  if (!opt.write_files) return;
  fs::path dir = fs::path(opt.out_dir) / name;
  fs::create_directories(dir);
  std::ofstream out(dir / file, std::ios::binary);
  out << content;
}

int run_check_axioms(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  auto samples = cfg.sample_points();
  AxiomReport rep = check_axioms(*cfg.space, samples, cfg.tol);
  SymmetryResult sym = is_symmetric(*cfg.space, samples, cfg.tol);

  auto line = [&](const char* name, const AxiomStatus& st) {
    out << "  " << name << ": " << (st.pass ? "pass" : "FAIL") << "\n";
    for (const AxiomWitness& w : st.witnesses) {
      out << "    witness:";
      for (const Point& p : w.points) out << " " << p.str();
      out << "  (lhs=" << w.lhs << " rhs=" << w.rhs << ")\n";
    }
  };
  out << "check-axioms on space '" << cfg.space->name() << "' (" << samples.size()
      << " samples, tol=" << cfg.tol << ")\n";
  line("G1", rep.g1);
  line("G2", rep.g2);
  line("G3", rep.g3);
  line("G4", rep.g4);
  line("G5", rep.g5);
  out << "  symmetric: " << (sym.symmetric ? "yes" : "no") << "\n";

  write_file(opt, cfg.name, "report.json", to_json(rep));
  return rep.all_pass() ? kExitOk : kExitFailedCheck;
}

int run_check_order(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  OrderReport rep = check_preorder(cfg.order, cfg.sample_points(), cfg.tol);
  out << "check-order: reflexive=" << (rep.reflexive ? "pass" : "FAIL")
      << " transitive=" << (rep.transitive ? "pass" : "FAIL") << " ("
      << rep.sample_count << " samples)\n";
  for (const OrderWitness& w : rep.reflexivity_witnesses)
    out << "  reflexivity witness " << w.points[0].str() << " G=" << w.lhs << "\n";
  for (const OrderWitness& w : rep.transitivity_witnesses)
    out << "  transitivity witness " << w.points[0].str() << " " << w.points[1].str() << " "
        << w.points[2].str() << "\n";
  write_file(opt, cfg.name, "report.json", to_json(rep));
  return rep.pass() ? kExitOk : kExitFailedCheck;
}

void print_relation(const RelationReport& rep, std::ostream& out) {
  out << rep.condition << ": " << (rep.pass ? "pass" : "FAIL") << " ("
      << rep.samples_checked << " samples)\n";
  for (const RelationWitness& w : rep.witnesses) {
    out << "  witness input";
    for (const Point& p : w.input) out << " " << p.str();
    out << " -> " << w.lhs.str() << " vs " << w.rhs.str() << " (G=" << w.g_value
        << ", phi gap=" << w.phi_gap << ", pair " << w.pair_index << ")\n";
  }
}

int run_check_pair(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  if (!cfg.map) throw ConfigError("check-pair needs a map F in the config");
  if (cfg.selfmaps.size() != 1) throw ConfigError("check-pair needs exactly one self-map g");
  RelationReport rep = check_weakly_related(*cfg.map, cfg.selfmaps[0], cfg.order,
                                            cfg.sample_tuples(cfg.map->arity()));
  print_relation(rep, out);
  write_file(opt, cfg.name, "report.json", to_json(rep));
  return rep.pass ? kExitOk : kExitFailedCheck;
}

int run_check_chain(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  if (cfg.selfmaps.size() < 2) throw ConfigError("check-chain needs at least two self-maps");
  RelationReport rep =
      cfg.dual_chain ? check_dual_chain(cfg.selfmaps, cfg.order, cfg.sample_points())
                     : check_n_embedded_chain(cfg.selfmaps, cfg.order, cfg.sample_points());
  print_relation(rep, out);
  write_file(opt, cfg.name, "report.json", to_json(rep));
  return rep.pass ? kExitOk : kExitFailedCheck;
}

FixpointReport dispatch_solve(const ProblemConfig& cfg) {
  if (!cfg.map) throw ConfigError("solve needs a map F in the config");
  if (cfg.seed.empty()) throw ConfigError("solve needs a seed tuple");
  switch (cfg.scheme) {
    case Scheme::Single:
      return iterate_single(*cfg.map, cfg.seed, cfg.order, cfg.solver);
    case Scheme::Pair:
      return iterate_pair(*cfg.map, cfg.selfmaps[0], cfg.seed, cfg.order, cfg.solver);
    case Scheme::Triple:
      return iterate_triple(*cfg.map, cfg.selfmaps[0], cfg.selfmaps[1], cfg.seed, cfg.order,
                            cfg.solver);
    case Scheme::Chain:
      return iterate_chain(*cfg.map, cfg.selfmaps, cfg.seed, cfg.order, cfg.solver);
  }
  throw ConfigError("bad scheme");
}

int run_solve(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  FixpointReport rep = dispatch_solve(cfg);
  out << "solve [" << cfg.name << "]: " << to_string(rep.status) << " after "
      << rep.iterations << " steps\n  candidate:";
  for (const Point& p : rep.candidate) out << " " << p.str();
  out << "\n  residual=" << rep.fixed_point_residual << " cauchy=" << rep.cauchy << "\n";
  out << "  monitors: chain=" << (rep.monitors.preorder_chain ? "ok" : "violated")
      << " phi_monotone=" << (rep.monitors.phi_monotone ? "ok" : "violated")
      << " phi_bounded=" << (rep.monitors.phi_bounded ? "ok" : "exceeded");
  if (rep.monitors.seed_condition)
    out << " seed_condition=" << (*rep.monitors.seed_condition ? "held" : "violated");
  out << "\n";

  write_file(opt, cfg.name, "report.json", to_json(rep));
  if (opt.write_files) {
    fs::path dir = fs::path(opt.out_dir) / cfg.name;
    fs::create_directories(dir);
    std::ofstream trace(dir / "trace.csv", std::ios::binary);
    write_trace_csv(trace, rep.trace);
  }
  return rep.converged() ? kExitOk : kExitFailedCheck;
}

int run_verify(const ProblemConfig& cfg, const RunOptions& opt, std::ostream& out) {
  if (!cfg.map) throw ConfigError("verify needs a map F in the config");
  if (cfg.seed.empty()) throw ConfigError("verify needs a seed tuple");
  double residual = cfg.selfmaps.empty()
                        ? verify_ntuple_fixed_point(*cfg.map, cfg.seed, *cfg.space)
                        : verify_common_fixed_point(*cfg.map, cfg.selfmaps, cfg.seed, *cfg.space);
  out << "verify [" << cfg.name << "]: residual=" << residual << " (eps=" << cfg.solver.eps
      << ")\n";
  write_file(opt, cfg.name, "report.json",
             "{\n  \"residual\": " + format_number(residual) + "\n}\n");
  return residual <= cfg.solver.eps ? kExitOk : kExitFailedCheck;
}

}  // namespace

int run_subcommand(const std::string& subcommand, ProblemConfig cfg, const RunOptions& opt,
                   std::ostream& out) {
  apply_overrides(cfg, opt);
  if (subcommand == "check-axioms") return run_check_axioms(cfg, opt, out);
  if (subcommand == "check-order") return run_check_order(cfg, opt, out);
  if (subcommand == "check-pair") return run_check_pair(cfg, opt, out);
  if (subcommand == "check-chain") return run_check_chain(cfg, opt, out);
  if (subcommand == "solve") return run_solve(cfg, opt, out);
  if (subcommand == "verify") return run_verify(cfg, opt, out);
  throw ConfigError("unknown subcommand '" + subcommand + "'");
}

namespace {

constexpr double kPi = 3.14159265358979323846;

struct FixtureResult {
  std::string name;
  bool matched;
  std::string detail;
};

}  // namespace

int reproduce_paper(std::ostream& out) {
  std::vector<FixtureResult> results;
  auto record = [&](std::string name, bool matched, std::string detail) {
    results.push_back({std::move(name), matched, std::move(detail)});
  };

  auto unbounded = std::make_shared<GMetricSpace>(
      GMetricSpace::max_abs_diff(Carrier::interval(0.0, std::numeric_limits<double>::infinity())));
  PhiOrder order2(PhiOrder::linear(unbounded, 2.0));

  // 1. The 3-tuple example: seed evaluations 2, 0, 0; (0,0,0) is a 3-tuple
  // fixed point; the orbit from (1,0,0) runs away, which the phi-cap
  // monitor flags (a documented discrepancy with the stated hypotheses).
  {
    NTupleMap f3 = NTupleMap::paper_f3();
    Tuple seed = {Point::scalar(1), Point::scalar(0), Point::scalar(0)};
    Tuple images = cyclic_apply(f3, seed);
    bool seeds_ok = images[0].value() == 2.0 && images[1].value() == 0.0 &&
                    images[2].value() == 0.0;
    Tuple zero(3, Point::scalar(0));
    bool fp_ok = verify_ntuple_fixed_point(f3, zero, *unbounded) == 0.0;
    SolverConfig scfg;
    scfg.phi_cap = 1e6;
    FixpointReport div = iterate_single(f3, seed, order2, scfg);
    bool div_ok = div.status == SolveStatus::DivergedPhiCap &&
                  div.monitors.seed_condition.value_or(false);
    record("3-tuple fixed point (F = x(1+y)(2+z))", seeds_ok && fp_ok && div_ok,
           fp_ok ? "fixed point (0,0,0) confirmed; orbit from (1,0,0) unbounded (flagged)"
                 : "fixed point check failed");
  }

  // 2. G = max{x,y,z} with phi = 2x: presented as a G-metric space, but G1
  // fails (G(x,x,x) = x) and with it reflexivity of the induced preorder.
  {
    auto maxval = std::make_shared<GMetricSpace>(GMetricSpace::max_value());
    PhiOrder mv_order(PhiOrder::linear(maxval, 2.0));
    std::vector<Point> pts = {Point::scalar(1), Point::scalar(2), Point::scalar(3),
                              Point::scalar(4)};
    AxiomReport ax = check_axioms(*maxval, pts, 0.0);
    OrderReport ord = check_preorder(mv_order, pts, 0.0);
    bool comparisons_ok = mv_order.leq(Point::scalar(2), Point::scalar(4)) &&
                          !mv_order.leq(Point::scalar(3), Point::scalar(2)) &&
                          !mv_order.leq(Point::scalar(2), Point::scalar(3));
    record("max-value space order (G = max{x,y,z}, phi = 2x)",
           comparisons_ok && !ax.g1.pass && !ord.reflexive,
           "2<=4 holds, 3 incomparable to 2; G1 violated as stated (flagged)");
  }

  // 3. Pair {F, g} with F = x1 + |sin(prod)|, g = 5x: weakly related and
  // (0,..,0) a common fixed point.
  {
    NTupleMap F = NTupleMap::sine_perturbed(3);
    SelfMap g = SelfMap::linear(5.0);
    PhiOrder order1(PhiOrder::linear(unbounded, 1.0));
    RelationReport wr =
        check_weakly_related(F, g, order1, sample_tuples_uniform(0.0, 2.0, 3, 500, 42));
    Tuple zero(3, Point::scalar(0));
    FixpointReport solve = iterate_pair(F, g, zero, order1, {});
    record("weakly related pair (F, g = 5x)",
           wr.pass && solve.converged() && solve.fixed_point_residual == 0.0,
           "pair weakly related on samples; common fixed point (0,0,0)");
  }

  // 4. Triple {F, G = 5x, H = 6x}: common fixed point at the zero tuple.
  {
    NTupleMap F = NTupleMap::sine_perturbed(3);
    PhiOrder order1(PhiOrder::linear(unbounded, 1.0));
    Tuple zero(3, Point::scalar(0));
    FixpointReport solve =
        iterate_triple(F, SelfMap::linear(5.0), SelfMap::linear(6.0), zero, order1, {});
    record("triple (F, G = 5x, H = 6x)",
           solve.converged() && solve.fixed_point_residual == 0.0,
           "common fixed point (0,0,0)");
  }

  // 5. Embedded pairs and chains: {3x, 5x} dual on [2,pi); {sin x + 1, x^2}
  // embedded but not dual; G_k = kx an (r-2)-embedded chain; zero tuple a
  // common fixed point of the chain scheme.
  {
    std::vector<Point> grid = scalar_grid(2.0, std::nextafter(kPi, 2.0), 64);
    std::vector<SelfMap> fpair = {SelfMap::from_expr("3*x"), SelfMap::from_expr("5*x")};
    std::vector<SelfMap> gpair = {SelfMap::from_expr("sin(x)+1"), SelfMap::from_expr("x^2")};
    RelationReport fdual = check_dual_chain(fpair, order2, grid);
    RelationReport gfwd = check_n_embedded_chain(gpair, order2, grid);
    std::vector<SelfMap> grev(gpair.rbegin(), gpair.rend());
    RelationReport gback = check_n_embedded_chain(grev, order2, grid);

    std::vector<SelfMap> kchain;
    for (int k = 5; k >= 3; --k) kchain.push_back(SelfMap::linear(k));
    RelationReport kc = check_n_embedded_chain(kchain, order2, scalar_grid(0.0, 3.0, 31));

    PhiOrder order1(PhiOrder::linear(unbounded, 1.0));
    std::vector<SelfMap> solve_chain;
    for (int k = 2; k <= 5; ++k) solve_chain.push_back(SelfMap::linear(k));
    Tuple zero(3, Point::scalar(0));
    FixpointReport solve =
        iterate_chain(NTupleMap::sine_perturbed(3), solve_chain, zero, order1, {});

    record("embedded pairs and r-chains",
           fdual.pass && gfwd.pass && !gback.pass && kc.pass && solve.converged() &&
               solve.fixed_point_residual == 0.0,
           "{3x,5x} dual; {sin x+1, x^2} one-way only (flagged); kx chain embedded");
  }

  out << "fixture                                               verdict\n";
  out << "------------------------------------------------------------\n";
  bool all = true;
  for (const FixtureResult& r : results) {
    all = all && r.matched;
    out << r.name;
    for (std::size_t i = r.name.size(); i < 54; ++i) out << ' ';
    out << (r.matched ? "as expected" : "MISMATCH") << "\n    " << r.detail << "\n";
  }
  out << (all ? "all fixtures reproduced\n" : "some fixtures did not reproduce\n");
  return all ? kExitOk : kExitFailedCheck;
}

}  // namespace gfix
