#include <doctest.h>

#include <random>

#include "gfix/maps.hpp"

using namespace gfix;

namespace {

Point sp(double v) { return Point::scalar(v); }

}  // namespace

TEST_CASE("paper 3-tuple map evaluations") {
  NTupleMap F = NTupleMap::paper_f3();
  CHECK(F.eval({sp(1), sp(0), sp(0)}).value() == 2.0);
  CHECK(F.eval({sp(0), sp(0), sp(1)}).value() == 0.0);
  CHECK(F.eval({sp(0), sp(1), sp(0)}).value() == 0.0);
}

TEST_CASE("self map evaluation") {
  CHECK(SelfMap::from_expr("5*x").eval(sp(1)).value() == 5.0);
  CHECK(SelfMap::linear(5.0).eval(sp(1)).value() == 5.0);
  CHECK(SelfMap::identity().eval(sp(3.25)).value() == 3.25);
}

TEST_CASE("cyclic_apply produces one component per rotation") {
  NTupleMap F = NTupleMap::paper_f3();
  Tuple out = cyclic_apply(F, {sp(1), sp(0), sp(0)});
  REQUIRE(out.size() == 3);
  CHECK(out[0].value() == 2.0);
  CHECK(out[1].value() == 0.0);
  CHECK(out[2].value() == 0.0);
}

TEST_CASE("cyclic_apply on a projection is the identity on tuples") {
  NTupleMap proj = NTupleMap::from_expr("x1", 2);
  Tuple out = cyclic_apply(proj, {sp(3), sp(7)});
  CHECK(out[0].value() == 3.0);
  CHECK(out[1].value() == 7.0);
}

TEST_CASE("cyclic_apply on constant tuples is rotation invariant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(0.0, 4.0);
  NTupleMap F = NTupleMap::from_expr("x1 + abs(sin(x1*x2*x3*x4))", 4);
  for (int i = 0; i < 100; ++i) {
    double c = d(rng);
    Tuple constant(4, sp(c));
    Tuple out = cyclic_apply(F, constant);
    double expected = F.eval(constant).value();
    for (const Point& p : out) CHECK(p.value() == expected);
  }
}

TEST_CASE("constant map maps every tuple to the constant tuple") {
  NTupleMap F = NTupleMap::from_expr("7/2", 3);
  Tuple out = cyclic_apply(F, {sp(1), sp(2), sp(3)});
  for (const Point& p : out) CHECK(p.value() == 3.5);
}

TEST_CASE("expression map agrees with a hand-coded closure to the bit") {
  NTupleMap F = NTupleMap::from_expr("x1*(1+x2)*(2+x3)", 3);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    double x = d(rng), y = d(rng), z = d(rng);
    CHECK(F.eval({sp(x), sp(y), sp(z)}).value() == x * (1.0 + y) * (2.0 + z));
  }
}

TEST_CASE("sine_perturbed builtin matches its expression form") {
  NTupleMap builtin = NTupleMap::sine_perturbed(3);
  NTupleMap expr = NTupleMap::from_expr("x1 + abs(sin(x1*x2*x3))", 3);
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> d(0.0, 2.0);
  for (int i = 0; i < 500; ++i) {
    Tuple t = {sp(d(rng)), sp(d(rng)), sp(d(rng))};
    CHECK(builtin.eval(t).value() == doctest::Approx(expr.eval(t).value()).epsilon(1e-15));
  }
}

TEST_CASE("arity is enforced") {
  NTupleMap F = NTupleMap::paper_f3();
  CHECK_THROWS_AS(F.eval({sp(1), sp(2)}), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_apply(F, {sp(1), sp(2)}), std::invalid_argument);
  CHECK_THROWS_AS(NTupleMap::from_expr("x1", 1), std::invalid_argument);
}

TEST_CASE("table maps on finite carriers") {
  Carrier c = Carrier::finite({10, 20, 30});
  // F(i, j) = i  (projection as a table)
  std::vector<int> table(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) table[static_cast<std::size_t>(i * 3 + j)] = i;
  NTupleMap F = NTupleMap::from_table(c, 2, table);
  Point p = F.eval({c.element_at(2), c.element_at(0)});
  CHECK(p.index() == 2);
  CHECK(p.value() == 30.0);

  SelfMap g = SelfMap::from_table(c, {1, 2, 0});
  CHECK(g.eval(c.element_at(0)).index() == 1);
  CHECK_THROWS_AS(SelfMap::from_table(c, {0, 5, 1}), std::invalid_argument);
}
