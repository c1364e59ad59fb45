#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "gfix/gmetric.hpp"
#include "gfix/maps.hpp"
#include "gfix/point.hpp"

namespace gfix {

/// The preorder induced by a potential phi: x precedes y iff
/// G(x,y,y) <= phi(y) - phi(x). Immutable and shareable.
class PhiOrder {
 public:
  using PhiFn = std::function<double(const Point&)>;

  PhiOrder(std::shared_ptr<const GMetricSpace> space, PhiFn phi, double tol = 1e-12)
      : space_(std::move(space)), phi_(std::move(phi)), tol_(tol) {
    if (tol_ < 0.0) throw std::invalid_argument("PhiOrder: negative tolerance");
  }

  /// phi(x) = a*x on scalar-valued carriers (the builtin "linear(a)").
  static PhiOrder linear(std::shared_ptr<const GMetricSpace> space, double a,
                         double tol = 1e-12);
  /// phi from an expression in the free variable x.
  static PhiOrder from_expr(std::shared_ptr<const GMetricSpace> space,
                            const std::string& phi_expr, double tol = 1e-12);

  const GMetricSpace& space() const { return *space_; }
  std::shared_ptr<const GMetricSpace> space_ptr() const { return space_; }
  double tol() const { return tol_; }

  double phi(const Point& p) const { return phi_(p); }

  /// The defining inequality with additive slack `slack` (defaults to tol).
  bool leq(const Point& x, const Point& y) const { return leq_slack(x, y, tol_); }
  bool leq_slack(const Point& x, const Point& y, double slack) const;

  /// Componentwise leq on equal-arity tuples.
  bool leq_tuple(const Tuple& a, const Tuple& b) const;

 private:
  std::shared_ptr<const GMetricSpace> space_;
  PhiFn phi_;
  double tol_;
};

struct OrderWitness {
  std::vector<Point> points;  // 1 point (reflexivity) or 3 (transitivity)
  double lhs = 0.0;           // G side of the violated inequality
  double rhs = 0.0;           // phi-difference side
};

struct OrderReport {
  bool reflexive = true;
  bool transitive = true;
  std::vector<OrderWitness> reflexivity_witnesses;
  std::vector<OrderWitness> transitivity_witnesses;
  std::size_t sample_count = 0;

  bool pass() const { return reflexive && transitive; }
};

/// Reflexivity on every sample; transitivity on every ordered triple already
/// related pairwise, with slack 2*tol (the proof chains two inequalities).
/// Sample sets above 200 points are subsampled with a fixed seed.
OrderReport check_preorder(const PhiOrder& order, std::vector<Point> samples, double tol,
                           std::size_t witness_cap = 5);

struct IsotoneWitness {
  Tuple lower, upper;   // the related input pair
  Point image_lower, image_upper;
  double lhs = 0.0, rhs = 0.0;
};

struct IsotoneReport {
  bool isotone = true;
  std::vector<IsotoneWitness> witnesses;
  std::size_t pairs_checked = 0;  // pairs that were componentwise related
};

/// For every supplied tuple pair with componentwise leq, asserts leq of the
/// images under F.
IsotoneReport check_isotone(const NTupleMap& F, const PhiOrder& order,
                            const std::vector<std::pair<Tuple, Tuple>>& sample_tuples,
                            std::size_t witness_cap = 5);

}  // namespace gfix
