#include "gfix/checkers.hpp"

#include <algorithm>
#include <random>

namespace gfix {

namespace {

void record_failure(RelationReport& rep, std::size_t cap, RelationWitness w) {
  rep.pass = false;
  if (rep.witnesses.size() < cap) rep.witnesses.push_back(std::move(w));
}

// A map's image leaving the carrier is an error, not a failed relation.
void require_in_carrier(const Carrier& c, const Point& p, const char* what) {
  if (!c.contains(p))
    throw std::domain_error(std::string(what) + ": map image left the carrier");
}

void check_leq(RelationReport& rep, const PhiOrder& order, const Point& lhs, const Point& rhs,
               std::vector<Point> input, std::size_t rotation, std::size_t pair_index,
               std::size_t cap) {
  if (order.leq(lhs, rhs)) return;
  record_failure(rep, cap,
                 {std::move(input), rotation, pair_index, lhs, rhs,
                  eval_g(order.space(), lhs, rhs, rhs), order.phi(rhs) - order.phi(lhs)});
}

}  // namespace

RelationReport check_weakly_related(const NTupleMap& F, const SelfMap& g,
                                    const PhiOrder& order,
                                    const std::vector<Tuple>& sample_tuples,
                                    std::size_t witness_cap) {
  RelationReport rep;
  rep.condition = "weakly_related";
  const Carrier& carrier = order.space().carrier();
  for (const Tuple& X : sample_tuples) {
    if (static_cast<int>(X.size()) != F.arity())
      throw std::invalid_argument("check_weakly_related: tuple arity mismatch");
    Tuple gX = g.eval_tuple(X);
    for (const Point& p : gX) require_in_carrier(carrier, p, "check_weakly_related");
    for (std::size_t i = 0; i < X.size(); ++i) {
      Point fx = F.eval(rotate_left(X, i));
      require_in_carrier(carrier, fx, "check_weakly_related");
      Point gfx = g.eval(fx);
      require_in_carrier(carrier, gfx, "check_weakly_related");
      check_leq(rep, order, fx, gfx, X, i, 0, witness_cap);

      Point fgx = F.eval(rotate_left(gX, i));
      require_in_carrier(carrier, fgx, "check_weakly_related");
      check_leq(rep, order, gX[i], fgx, X, i, 0, witness_cap);
    }
    ++rep.samples_checked;
  }
  return rep;
}

RelationReport check_embedded_pair(const SelfMap& g, const SelfMap& f, const PhiOrder& order,
                                   const std::vector<Point>& samples,
                                   std::size_t witness_cap) {
  RelationReport rep;
  rep.condition = "embedded_pair";
  const Carrier& carrier = order.space().carrier();
  for (const Point& x : samples) {
    Point gx = g.eval(x);
    require_in_carrier(carrier, gx, "check_embedded_pair");
    Point fgx = f.eval(gx);
    require_in_carrier(carrier, fgx, "check_embedded_pair");
    check_leq(rep, order, gx, fgx, {x}, 0, 0, witness_cap);
    ++rep.samples_checked;
  }
  return rep;
}

RelationReport check_n_embedded_chain(const std::vector<SelfMap>& maps, const PhiOrder& order,
                                      const std::vector<Point>& samples,
                                      std::size_t witness_cap) {
  if (maps.size() < 2)
    throw std::invalid_argument("check_n_embedded_chain: need at least two maps");
  RelationReport rep;
  rep.condition = "n_embedded_chain";
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    RelationReport pair = check_embedded_pair(maps[i], maps[i + 1], order, samples, witness_cap);
    rep.samples_checked += pair.samples_checked;
    if (!pair.pass) {
      rep.pass = false;
      for (RelationWitness& w : pair.witnesses) {
        w.pair_index = i;
        if (rep.witnesses.size() < witness_cap) rep.witnesses.push_back(std::move(w));
      }
    }
  }
  return rep;
}

RelationReport check_dual_chain(const std::vector<SelfMap>& maps, const PhiOrder& order,
                                const std::vector<Point>& samples,
                                std::size_t witness_cap) {
  if (maps.size() < 2) throw std::invalid_argument("check_dual_chain: need at least two maps");
  RelationReport forward = check_n_embedded_chain(maps, order, samples, witness_cap);
  std::vector<SelfMap> reversed(maps.rbegin(), maps.rend());
  RelationReport backward = check_n_embedded_chain(reversed, order, samples, witness_cap);

  RelationReport rep;
  rep.condition = "dual_chain";
  rep.pass = forward.pass && backward.pass;
  rep.samples_checked = forward.samples_checked + backward.samples_checked;
  for (auto* part : {&forward, &backward})
    for (RelationWitness& w : part->witnesses)
      if (rep.witnesses.size() < witness_cap) rep.witnesses.push_back(std::move(w));
  return rep;
}

std::vector<Tuple> sample_tuples_uniform(double lo, double hi, int arity, std::size_t count,
                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<Tuple> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Tuple t;
    t.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) t.push_back(Point::scalar(dist(rng)));
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace gfix
