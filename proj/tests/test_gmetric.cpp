#include <doctest.h>

#include <random>

#include "gfix/gmetric.hpp"
#include "test_util.hpp"

using namespace gfix;
using namespace gfix::test;

namespace {

Point sp(double v) { return Point::scalar(v); }

// Independent axiom oracle: plain nested loops straight off the five
// conditions, no shared code with check_axioms.
bool oracle_axioms_hold(const GMetricSpace& space, const std::vector<Point>& s) {
  for (const Point& x : s)
    if (eval_g(space, x, x, x) != 0.0) return false;
  for (const Point& x : s)
    for (const Point& y : s)
      if (!(x == y) && !(eval_g(space, x, x, y) > 0.0)) return false;
  for (const Point& x : s)
    for (const Point& y : s)
      for (const Point& z : s)
        if (!(z == y) && eval_g(space, x, x, y) > eval_g(space, x, y, z)) return false;
  for (const Point& x : s)
    for (const Point& y : s)
      for (const Point& z : s) {
        double v = eval_g(space, x, y, z);
        if (eval_g(space, x, z, y) != v || eval_g(space, y, x, z) != v ||
            eval_g(space, y, z, x) != v || eval_g(space, z, x, y) != v ||
            eval_g(space, z, y, x) != v)
          return false;
      }
  for (const Point& x : s)
    for (const Point& y : s)
      for (const Point& z : s)
        for (const Point& a : s)
          if (eval_g(space, x, y, z) > eval_g(space, x, a, a) + eval_g(space, a, y, z))
            return false;
  return true;
}

}  // namespace

TEST_CASE("eval_g worked values") {
  auto mad = max_abs_space();
  CHECK(eval_g(*mad, sp(1), sp(4), sp(2)) == 3.0);
  CHECK(eval_g(*mad, sp(1.5), sp(1.5), sp(1.5)) == 0.0);
  auto mv = max_value_space();
  CHECK(eval_g(*mv, sp(2), sp(4), sp(4)) == 4.0);
}

TEST_CASE("eval_g rejects points outside the carrier") {
  auto mad = max_abs_space(0.0, 1.0);
  CHECK_THROWS_AS(eval_g(*mad, sp(2), sp(0), sp(0)), std::domain_error);
}

TEST_CASE("non-finite G values are hard errors, not failed axioms") {
  GMetricSpace bad("bad", Carrier::interval(0, 1),
                   [](const Point&, const Point&, const Point&) {
                     return std::numeric_limits<double>::quiet_NaN();
                   });
  CHECK_THROWS_AS(eval_g(bad, sp(0), sp(0), sp(0)), std::domain_error);
  CHECK_THROWS_AS(check_axioms(bad, {sp(0), sp(1)}, 0.0), std::domain_error);
}

TEST_CASE("derived_dg worked values") {
  auto mad = max_abs_space();
  CHECK(derived_dg(*mad, sp(1), sp(3)) == 4.0);
  CHECK(derived_dg(*mad, sp(2.25), sp(2.25)) == 0.0);
  auto mv = max_value_space();
  CHECK(derived_dg(*mv, sp(2), sp(3)) == 6.0);
}

TEST_CASE("derived_dg triangle inequality on an axiom-passing sample set") {
  auto mad = max_abs_space();
  auto grid = scalar_grid(0.0, 3.0, 7);
  REQUIRE(check_axioms(*mad, grid, 0.0).all_pass());
  for (const Point& x : grid)
    for (const Point& y : grid) {
      CHECK(derived_dg(*mad, x, x) == 0.0);
      CHECK(derived_dg(*mad, x, y) >= 0.0);
      for (const Point& z : grid)
        CHECK(derived_dg(*mad, x, z) <= derived_dg(*mad, x, y) + derived_dg(*mad, y, z));
    }
}

TEST_CASE("check_axioms passes on the max-abs-diff grid") {
  auto mad = max_abs_space();
  auto grid = scalar_grid(0.0, 3.0, 7);  // {0, 0.5, .., 3}
  AxiomReport rep = check_axioms(*mad, grid, 0.0);
  CHECK(rep.all_pass());
  CHECK(oracle_axioms_hold(*mad, grid));
}

TEST_CASE("max-value space fails G1 with a concrete witness") {
  auto mv = max_value_space();
  AxiomReport rep = check_axioms(*mv, {sp(1), sp(2)}, 0.0);
  CHECK_FALSE(rep.g1.pass);
  REQUIRE_FALSE(rep.g1.witnesses.empty());
  const AxiomWitness& w = rep.g1.witnesses.front();
  CHECK(w.points[0] == sp(1));
  CHECK(w.lhs == 1.0);  // G(1,1,1) = 1 != 0
}

TEST_CASE("constant-zero G fails G2 with two samples, vacuously passes with one") {
  GMetricSpace zero("zero", Carrier::interval(0, 1),
                    [](const Point&, const Point&, const Point&) { return 0.0; });
  CHECK_FALSE(check_axioms(zero, {sp(0), sp(1)}, 0.0).g2.pass);
  CHECK(check_axioms(zero, {sp(0.5)}, 0.0).all_pass());
}

TEST_CASE("check_axioms rejects an empty sample set") {
  CHECK_THROWS_AS(check_axioms(*max_abs_space(), {}, 0.0), std::invalid_argument);
}

TEST_CASE("complete decision procedure on a finite carrier vs the loop oracle") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 10; ++trial) {
    auto space = random_table_space(rng, 5);
    auto pts = all_elements(*space);
    CHECK(check_axioms(*space, pts, 0.0).all_pass() == oracle_axioms_hold(*space, pts));
  }
  // A deliberately broken table must be caught by both routes.
  std::vector<double> table(125, 1.0);  // G(x,x,x) = 1 violates G1
  auto broken = std::make_shared<GMetricSpace>(GMetricSpace::from_table(
      "broken", Carrier::finite({0, 1, 2, 3, 4}), std::move(table)));
  auto pts = all_elements(*broken);
  CHECK_FALSE(check_axioms(*broken, pts, 0.0).all_pass());
  CHECK_FALSE(oracle_axioms_hold(*broken, pts));
}

TEST_CASE("max-abs-diff G is exactly invariant under all argument permutations") {
  auto mad = max_abs_space();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(0.0, 20.0);
  for (int i = 0; i < 300; ++i) {
    Point x = sp(d(rng)), y = sp(d(rng)), z = sp(d(rng));
    double v = eval_g(*mad, x, y, z);
    CHECK(eval_g(*mad, x, z, y) == v);
    CHECK(eval_g(*mad, y, x, z) == v);
    CHECK(eval_g(*mad, y, z, x) == v);
    CHECK(eval_g(*mad, z, x, y) == v);
    CHECK(eval_g(*mad, z, y, x) == v);
  }
}

TEST_CASE("is_symmetric verdicts") {
  auto mad = max_abs_space();
  CHECK(is_symmetric(*mad, scalar_grid(0.0, 3.0, 7), 0.0).symmetric);

  auto mv = max_value_space();
  CHECK(is_symmetric(*mv, {sp(1), sp(2)}, 0.0).symmetric);  // max{1,2,2} = max{2,1,1}

  // g(x,y,z) = |x-y|+|x-z|+|y-z| + x is not symmetric in its first slot.
  GMetricSpace asym("asym", Carrier::finite({0, 1, 2}),
                    [](const Point& x, const Point& y, const Point& z) {
                      double a = x.value(), b = y.value(), c = z.value();
                      return std::abs(a - b) + std::abs(a - c) + std::abs(b - c) + a;
                    });
  std::vector<Point> pts = {asym.carrier().element_at(0), asym.carrier().element_at(1)};
  SymmetryResult res = is_symmetric(asym, pts, 0.0);
  CHECK_FALSE(res.symmetric);
  REQUIRE(res.witness.has_value());
  // G(0,1,1) = 2 vs G(1,0,0) = 3.
  CHECK(std::abs(res.witness->lhs - res.witness->rhs) == 1.0);
}

TEST_CASE("cauchy_residual worked values") {
  auto mad = max_abs_space();
  CHECK(cauchy_residual(*mad, {sp(3), sp(3), sp(3)}) == 0.0);
  CHECK(cauchy_residual(*mad, {sp(0), sp(1)}) == 1.0);
  CHECK(cauchy_residual(*mad, {sp(1), sp(1.5), sp(1.75)}) == 0.75);
  CHECK_THROWS_AS(cauchy_residual(*mad, {sp(1)}), std::invalid_argument);
}

TEST_CASE("cauchy_residual is monotone under window inclusion") {
  auto mad = max_abs_space();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point> window;
    for (int i = 0; i < 8; ++i) window.push_back(sp(d(rng)));
    double full = cauchy_residual(*mad, window);
    for (std::size_t lo = 0; lo + 2 <= window.size(); ++lo)
      for (std::size_t len = 2; lo + len <= window.size(); ++len) {
        std::vector<Point> sub(window.begin() + static_cast<std::ptrdiff_t>(lo),
                               window.begin() + static_cast<std::ptrdiff_t>(lo + len));
        CHECK(cauchy_residual(*mad, sub) <= full);
      }
  }
}
