#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gfix/expr.hpp"
#include "gfix/point.hpp"

namespace gfix {

/// Carrier plus ternary distance G : X^3 -> [0,inf). Immutable after
/// construction and safe to share across threads.
class GMetricSpace {
 public:
  using GFn = std::function<double(const Point&, const Point&, const Point&)>;

  GMetricSpace(std::string name, Carrier carrier, GFn g_fn)
      : name_(std::move(name)), carrier_(std::move(carrier)), g_fn_(std::move(g_fn)) {}

  const std::string& name() const { return name_; }
  const Carrier& carrier() const { return carrier_; }

  // Builtins, identified by the same names accepted in config files.
  static GMetricSpace max_abs_diff(Carrier carrier);   // G = max pairwise sup-norm difference
  static GMetricSpace max_value();                     // G = max of the three values, on [0,inf)
  static GMetricSpace discrete(Carrier finite);        // G = 0 if all equal else 1
  static GMetricSpace custom_expr(Carrier carrier, const std::string& g_expr);  // vars x,y,z
  /// Finite carrier with G given by a full table indexed by element indices.
  static GMetricSpace from_table(std::string name, Carrier finite,
                                 std::vector<double> table);  // table[i*n*n + j*n + k]

 private:
  std::string name_;
  Carrier carrier_;
  GFn g_fn_;

  friend double eval_g(const GMetricSpace&, const Point&, const Point&, const Point&);
};

/// G(x,y,z) with domain and sanity checks. A NaN/infinite or negative value
/// from the underlying function is a hard error, not a failed axiom.
double eval_g(const GMetricSpace& space, const Point& x, const Point& y, const Point& z);

/// The induced binary metric d_G(x,y) = G(x,y,y) + G(x,x,y).
double derived_dg(const GMetricSpace& space, const Point& x, const Point& y);

/// Max over ordered pairs (n,m) of G(x_n, x_m, x_m) in the window; this is
/// the quantity a G-Cauchy sequence drives below eps.
double cauchy_residual(const GMetricSpace& space, const std::vector<Point>& window);

struct AxiomWitness {
  std::vector<Point> points;  // the tuple that violates the axiom
  double lhs = 0.0;           // the two sides of the violated (in)equality
  double rhs = 0.0;
};

struct AxiomStatus {
  bool pass = true;
  std::vector<AxiomWitness> witnesses;  // capped at witness_cap
};

struct AxiomReport {
  AxiomStatus g1, g2, g3, g4, g5;
  std::size_t sample_count = 0;
  double tol = 0.0;

  bool all_pass() const {
    return g1.pass && g2.pass && g3.pass && g4.pass && g5.pass;
  }
};

/// Checks G1..G5 over all tuples drawn from `samples` (pairs, triples or
/// quadruples as each axiom requires). Inequality axioms pass within tol.
AxiomReport check_axioms(const GMetricSpace& space, const std::vector<Point>& samples,
                         double tol, std::size_t witness_cap = 5);

struct SymmetryResult {
  bool symmetric = true;
  std::optional<AxiomWitness> witness;  // pair with G(x,y,y) vs G(y,x,x)
};

/// |G(x,y,y) - G(y,x,x)| <= tol over all sample pairs.
SymmetryResult is_symmetric(const GMetricSpace& space, const std::vector<Point>& samples,
                            double tol);

/// Evenly spaced scalar grid helper (count >= 2 spans [lo,hi] inclusive).
std::vector<Point> scalar_grid(double lo, double hi, std::size_t count);

}  // namespace gfix
