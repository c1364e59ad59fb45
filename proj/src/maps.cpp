#include "gfix/maps.hpp"

#include <cmath>
#include <cstdio>

namespace gfix {

namespace {

double scalar_of(const Point& p, const char* what) {
  if (p.kind() == Point::Kind::Vector)
    throw std::invalid_argument(std::string(what) + ": vector carriers use builtin maps only");
  return p.value();
}

}  // namespace

NTupleMap NTupleMap::from_expr(const std::string& body, int arity) {
  Expr e = Expr::parse_arity(body, arity);
  return NTupleMap(body, arity, [e](const Tuple& args) {
    std::vector<double> vals;
    vals.reserve(args.size());
    for (const Point& p : args) vals.push_back(scalar_of(p, "eval_map"));
    return Point::scalar(e.eval(vals));
  });
}

NTupleMap NTupleMap::sine_perturbed(int arity) {
  return NTupleMap("sine_perturbed(" + std::to_string(arity) + ")", arity,
                   [](const Tuple& args) {
                     double prod = 1.0;
                     for (const Point& p : args) prod *= scalar_of(p, "sine_perturbed");
                     return Point::scalar(scalar_of(args[0], "sine_perturbed") +
                                          std::abs(std::sin(prod)));
                   });
}

NTupleMap NTupleMap::paper_f3() {
  return NTupleMap("paper_f3", 3, [](const Tuple& args) {
    double x = scalar_of(args[0], "paper_f3");
    double y = scalar_of(args[1], "paper_f3");
    double z = scalar_of(args[2], "paper_f3");
    return Point::scalar(x * (1.0 + y) * (2.0 + z));
  });
}

NTupleMap NTupleMap::from_table(const Carrier& finite, int arity, std::vector<int> table) {
  if (!finite.is_finite()) throw std::invalid_argument("table map requires a finite carrier");
  const std::size_t n = finite.size();
  std::size_t expected = 1;
  for (int i = 0; i < arity; ++i) expected *= n;
  if (table.size() != expected) throw std::invalid_argument("map table size must be |X|^n");
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("map table value out of carrier range");
  auto elements = finite.elements();
  return NTupleMap("table", arity, [table, elements, n](const Tuple& args) {
    std::size_t idx = 0;
    for (const Point& p : args) idx = idx * n + static_cast<std::size_t>(p.index());
    int out = table[idx];
    return Point::element(out, elements[static_cast<std::size_t>(out)]);
  });
}

SelfMap SelfMap::from_expr(const std::string& body) {
  Expr e = Expr::parse_arity(body, 1);
  return SelfMap(body, [e](const Point& x) {
    const double v[1] = {scalar_of(x, "self map")};
    return Point::scalar(e.eval(v));
  });
}

SelfMap SelfMap::linear(double k) {
  char name[32];
  std::snprintf(name, sizeof name, "linear(%g)", k);
  return SelfMap(name, [k](const Point& x) {
    return Point::scalar(k * scalar_of(x, "linear"));
  });
}

SelfMap SelfMap::identity() {
  return SelfMap("identity", [](const Point& x) { return x; });
}

SelfMap SelfMap::from_table(const Carrier& finite, std::vector<int> table) {
  if (!finite.is_finite()) throw std::invalid_argument("table map requires a finite carrier");
  const std::size_t n = finite.size();
  if (table.size() != n) throw std::invalid_argument("self-map table size must be |X|");
  for (int v : table)
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw std::invalid_argument("map table value out of carrier range");
  auto elements = finite.elements();
  return SelfMap("table", [table, elements](const Point& x) {
    int out = table[static_cast<std::size_t>(x.index())];
    return Point::element(out, elements[static_cast<std::size_t>(out)]);
  });
}

Tuple rotate_left(const Tuple& X, std::size_t shift) {
  const std::size_t n = X.size();
  Tuple out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) out.push_back(X[(j + shift) % n]);
  return out;
}

Tuple cyclic_apply(const NTupleMap& F, const Tuple& X) {
  if (static_cast<int>(X.size()) != F.arity())
    throw std::invalid_argument("cyclic_apply: arity mismatch");
  Tuple out;
  out.reserve(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) out.push_back(F.eval(rotate_left(X, i)));
  return out;
}

Point eval_map(const NTupleMap& F, const Tuple& args) { return F.eval(args); }

}  // namespace gfix
