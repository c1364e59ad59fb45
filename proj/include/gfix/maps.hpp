#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gfix/expr.hpp"
#include "gfix/point.hpp"

namespace gfix {

/// Evaluable F : X^n -> X, from a parsed expression, a builtin, or (on finite
/// carriers) an index table.
class NTupleMap {
 public:
  using Fn = std::function<Point(const Tuple&)>;

  NTupleMap(std::string name, int arity, Fn fn)
      : name_(std::move(name)), arity_(arity), fn_(std::move(fn)) {
    if (arity_ < 2) throw std::invalid_argument("NTupleMap: arity must be >= 2");
  }

  static NTupleMap from_expr(const std::string& body, int arity);
  /// Builtin "sine_perturbed(n)": F(x1,..,xn) = x1 + abs(sin(x1*x2*...*xn)).
  static NTupleMap sine_perturbed(int arity);
  /// Builtin "paper_f3": F(x1,x2,x3) = x1*(1+x2)*(2+x3).
  static NTupleMap paper_f3();
  /// Finite-carrier map given as a table over element indices (row-major
  /// over the n-fold index space); values are element indices.
  static NTupleMap from_table(const Carrier& finite, int arity, std::vector<int> table);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }

  Point eval(const Tuple& args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw std::invalid_argument("eval_map: arity mismatch");
    return fn_(args);
  }

 private:
  std::string name_;
  int arity_;
  Fn fn_;
};

/// Evaluable g : X -> X.
class SelfMap {
 public:
  using Fn = std::function<Point(const Point&)>;

  SelfMap(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  static SelfMap from_expr(const std::string& body);
  /// Builtin "linear(k)": g(x) = k*x.
  static SelfMap linear(double k);
  static SelfMap identity();
  static SelfMap from_table(const Carrier& finite, std::vector<int> table);

  const std::string& name() const { return name_; }
  Point eval(const Point& x) const { return fn_(x); }

  /// Componentwise application.
  Tuple eval_tuple(const Tuple& args) const {
    Tuple out;
    out.reserve(args.size());
    for (const Point& p : args) out.push_back(fn_(p));
    return out;
  }

 private:
  std::string name_;
  Fn fn_;
};

/// rotate_left(X, i-1): the argument order whose image is the i-th output
/// component (1-based i).
Tuple rotate_left(const Tuple& X, std::size_t shift);

/// (y1,..,yn) with y_i = F(rotate_left(X, i-1)).
Tuple cyclic_apply(const NTupleMap& F, const Tuple& X);

Point eval_map(const NTupleMap& F, const Tuple& args);

}  // namespace gfix
