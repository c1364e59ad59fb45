#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfix/maps.hpp"
#include "gfix/order.hpp"

namespace gfix {

struct RelationWitness {
  std::vector<Point> input;  // the sample tuple (or point) that failed
  std::size_t rotation = 0;  // 0-based rotation index, for tuple conditions
  std::size_t pair_index = 0;  // consecutive-pair index, for chain checks
  Point lhs, rhs;            // the two sides of the failed leq test
  double g_value = 0.0;      // G(lhs, rhs, rhs)
  double phi_gap = 0.0;      // phi(rhs) - phi(lhs)
};

struct RelationReport {
  std::string condition;
  bool pass = true;
  std::vector<RelationWitness> witnesses;
  std::size_t samples_checked = 0;
};

/// Condition (C1): for every sample tuple X and rotation i,
///   F(rot_i X) <= g(F(rot_i X))   and   g(x^i) <= F(rot_i(gX))
/// in the induced preorder.
RelationReport check_weakly_related(const NTupleMap& F, const SelfMap& g,
                                    const PhiOrder& order,
                                    const std::vector<Tuple>& sample_tuples,
                                    std::size_t witness_cap = 5);

/// Embedded pair {g, f}: g(x) <= f(g(x)) for every sample.
RelationReport check_embedded_pair(const SelfMap& g, const SelfMap& f, const PhiOrder& order,
                                   const std::vector<Point>& samples,
                                   std::size_t witness_cap = 5);

/// Each consecutive pair of `maps` (in order) must be an embedded pair.
RelationReport check_n_embedded_chain(const std::vector<SelfMap>& maps, const PhiOrder& order,
                                      const std::vector<Point>& samples,
                                      std::size_t witness_cap = 5);

/// Chain condition on the list and on its reverse.
RelationReport check_dual_chain(const std::vector<SelfMap>& maps, const PhiOrder& order,
                                const std::vector<Point>& samples,
                                std::size_t witness_cap = 5);

/// Seeded uniform tuples over a scalar interval, for the (C1) sampler.
std::vector<Tuple> sample_tuples_uniform(double lo, double hi, int arity, std::size_t count,
                                         std::uint64_t seed);

}  // namespace gfix
