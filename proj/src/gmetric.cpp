#include "gfix/gmetric.hpp"

#include <algorithm>
#include <cmath>

namespace gfix {

namespace {

double sup_diff(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t d = 0; d < a.dim(); ++d)
    m = std::max(m, std::abs(a.coords()[d] - b.coords()[d]));
  return m;
}

void push_witness(AxiomStatus& st, std::size_t cap, AxiomWitness w) {
  st.pass = false;
  if (st.witnesses.size() < cap) st.witnesses.push_back(std::move(w));
}

}  // namespace

GMetricSpace GMetricSpace::max_abs_diff(Carrier carrier) {
  return GMetricSpace("max_abs_diff", std::move(carrier),
                      [](const Point& x, const Point& y, const Point& z) {
                        return std::max({sup_diff(x, y), sup_diff(x, z), sup_diff(y, z)});
                      });
}

GMetricSpace GMetricSpace::max_value() {
  return GMetricSpace("max_value", Carrier::interval(0.0, std::numeric_limits<double>::infinity()),
                      [](const Point& x, const Point& y, const Point& z) {
                        return std::max({x.value(), y.value(), z.value()});
                      });
}

GMetricSpace GMetricSpace::discrete(Carrier finite) {
  if (!finite.is_finite())
    throw std::invalid_argument("discrete space requires a finite carrier");
  return GMetricSpace("discrete", std::move(finite),
                      [](const Point& x, const Point& y, const Point& z) {
                        return (x == y && y == z) ? 0.0 : 1.0;
                      });
}

GMetricSpace GMetricSpace::custom_expr(Carrier carrier, const std::string& g_expr) {
  Expr e = Expr::parse(g_expr, {"x", "y", "z"});
  return GMetricSpace("custom_expr", std::move(carrier),
                      [e](const Point& x, const Point& y, const Point& z) {
                        const double args[3] = {x.value(), y.value(), z.value()};
                        return e.eval(args);
                      });
}

GMetricSpace GMetricSpace::from_table(std::string name, Carrier finite,
                                      std::vector<double> table) {
  if (!finite.is_finite())
    throw std::invalid_argument("table space requires a finite carrier");
  const std::size_t n = finite.size();
  if (table.size() != n * n * n)
    throw std::invalid_argument("G table size must be |X|^3");
  return GMetricSpace(std::move(name), std::move(finite),
                      [table, n](const Point& x, const Point& y, const Point& z) {
                        auto i = static_cast<std::size_t>(x.index());
                        auto j = static_cast<std::size_t>(y.index());
                        auto k = static_cast<std::size_t>(z.index());
                        return table[(i * n + j) * n + k];
                      });
}

double eval_g(const GMetricSpace& space, const Point& x, const Point& y, const Point& z) {
  space.carrier().require(x, "eval_g");
  space.carrier().require(y, "eval_g");
  space.carrier().require(z, "eval_g");
  double v = space.g_fn_(x, y, z);
  if (!std::isfinite(v))
    throw std::domain_error("eval_g: non-finite G value (malformed space)");
  if (v < 0.0) throw std::domain_error("eval_g: negative G value (malformed space)");
  return v;
}

double derived_dg(const GMetricSpace& space, const Point& x, const Point& y) {
  return eval_g(space, x, y, y) + eval_g(space, x, x, y);
}

double cauchy_residual(const GMetricSpace& space, const std::vector<Point>& window) {
  if (window.size() < 2) throw std::invalid_argument("cauchy_residual: window length < 2");
  double m = 0.0;
  for (const Point& a : window)
    for (const Point& b : window) m = std::max(m, eval_g(space, a, b, b));
  return m;
}

AxiomReport check_axioms(const GMetricSpace& space, const std::vector<Point>& samples,
                         double tol, std::size_t witness_cap) {
  if (samples.empty()) throw std::invalid_argument("check_axioms: empty sample set");
  if (tol < 0.0) throw std::invalid_argument("check_axioms: negative tolerance");
  AxiomReport rep;
  rep.sample_count = samples.size();
  rep.tol = tol;

  // G1: G(x,x,x) = 0.
  for (const Point& x : samples) {
    double v = eval_g(space, x, x, x);
    if (std::abs(v) > tol) push_witness(rep.g1, witness_cap, {{x, x, x}, v, 0.0});
  }

  // G2: G(x,x,y) > 0 for x != y.
  for (const Point& x : samples)
    for (const Point& y : samples) {
      if (x == y) continue;
      double v = eval_g(space, x, x, y);
      if (v <= tol) push_witness(rep.g2, witness_cap, {{x, x, y}, v, 0.0});
    }

  // G3: G(x,x,y) <= G(x,y,z) for z != y.
  for (const Point& x : samples)
    for (const Point& y : samples)
      for (const Point& z : samples) {
        if (z == y) continue;
        double lhs = eval_g(space, x, x, y), rhs = eval_g(space, x, y, z);
        if (lhs > rhs + tol) push_witness(rep.g3, witness_cap, {{x, y, z}, lhs, rhs});
      }

  // G4: symmetry in all three variables.
  for (const Point& x : samples)
    for (const Point& y : samples)
      for (const Point& z : samples) {
        const double vals[6] = {
            eval_g(space, x, y, z), eval_g(space, x, z, y), eval_g(space, y, x, z),
            eval_g(space, y, z, x), eval_g(space, z, x, y), eval_g(space, z, y, x)};
        double lo = *std::min_element(vals, vals + 6);
        double hi = *std::max_element(vals, vals + 6);
        if (hi - lo > tol) push_witness(rep.g4, witness_cap, {{x, y, z}, hi, lo});
      }

  // G5: G(x,y,z) <= G(x,a,a) + G(a,y,z).
  for (const Point& x : samples)
    for (const Point& y : samples)
      for (const Point& z : samples)
        for (const Point& a : samples) {
          double lhs = eval_g(space, x, y, z);
          double rhs = eval_g(space, x, a, a) + eval_g(space, a, y, z);
          if (lhs > rhs + tol) push_witness(rep.g5, witness_cap, {{x, y, z, a}, lhs, rhs});
        }

  return rep;
}

SymmetryResult is_symmetric(const GMetricSpace& space, const std::vector<Point>& samples,
                            double tol) {
  if (samples.empty()) throw std::invalid_argument("is_symmetric: empty sample set");
  SymmetryResult res;
  for (const Point& x : samples)
    for (const Point& y : samples) {
      double a = eval_g(space, x, y, y), b = eval_g(space, y, x, x);
      if (std::abs(a - b) > tol) {
        res.symmetric = false;
        if (!res.witness) res.witness = AxiomWitness{{x, y}, a, b};
        return res;
      }
    }
  return res;
}

std::vector<Point> scalar_grid(double lo, double hi, std::size_t count) {
  if (count < 2) throw std::invalid_argument("scalar_grid: count < 2");
  std::vector<Point> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(Point::scalar(lo + (hi - lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1)));
  return pts;
}

}  // namespace gfix
