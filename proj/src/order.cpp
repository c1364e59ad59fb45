#include "gfix/order.hpp"

#include <algorithm>
#include <random>

namespace gfix {

PhiOrder PhiOrder::linear(std::shared_ptr<const GMetricSpace> space, double a, double tol) {
  return PhiOrder(std::move(space), [a](const Point& p) { return a * p.value(); }, tol);
}

PhiOrder PhiOrder::from_expr(std::shared_ptr<const GMetricSpace> space,
                             const std::string& phi_expr, double tol) {
  Expr e = Expr::parse(phi_expr, {"x"});
  return PhiOrder(std::move(space),
                  [e](const Point& p) {
                    const double v[1] = {p.value()};
                    return e.eval(v);
                  },
                  tol);
}

bool PhiOrder::leq_slack(const Point& x, const Point& y, double slack) const {
  return eval_g(*space_, x, y, y) <= phi_(y) - phi_(x) + slack;
}

bool PhiOrder::leq_tuple(const Tuple& a, const Tuple& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("leq_tuple: arity mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

OrderReport check_preorder(const PhiOrder& order, std::vector<Point> samples, double tol,
                           std::size_t witness_cap) {
  if (samples.empty()) throw std::invalid_argument("check_preorder: empty sample set");

  // Bound the O(|S|^3) triple scan.
  constexpr std::size_t kMaxSamples = 200;
  if (samples.size() > kMaxSamples) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    std::shuffle(samples.begin(), samples.end(), rng);
    samples.resize(kMaxSamples);
    std::sort(samples.begin(), samples.end());
  }

  OrderReport rep;
  rep.sample_count = samples.size();

  for (const Point& x : samples) {
    if (!order.leq_slack(x, x, tol)) {
      rep.reflexive = false;
      if (rep.reflexivity_witnesses.size() < witness_cap)
        rep.reflexivity_witnesses.push_back(
            {{x}, eval_g(order.space(), x, x, x), 0.0});
    }
  }

  // Only triples among already-related pairs matter; slack 2*tol since the
  // transitivity proof chains two inequalities.
  const std::size_t n = samples.size();
  std::vector<char> rel(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rel[i * n + j] = order.leq_slack(samples[i], samples[j], tol) ? 1 : 0;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!rel[j * n + k]) continue;
        if (!order.leq_slack(samples[i], samples[k], 2.0 * tol)) {
          rep.transitive = false;
          if (rep.transitivity_witnesses.size() < witness_cap)
            rep.transitivity_witnesses.push_back(
                {{samples[i], samples[j], samples[k]},
                 eval_g(order.space(), samples[i], samples[k], samples[k]),
                 order.phi(samples[k]) - order.phi(samples[i])});
        }
      }
    }
  return rep;
}

IsotoneReport check_isotone(const NTupleMap& F, const PhiOrder& order,
                            const std::vector<std::pair<Tuple, Tuple>>& sample_tuples,
                            std::size_t witness_cap) {
  IsotoneReport rep;
  for (const auto& [lower, upper] : sample_tuples) {
    if (static_cast<int>(lower.size()) != F.arity() ||
        static_cast<int>(upper.size()) != F.arity())
      throw std::invalid_argument("check_isotone: arity mismatch");
    if (!order.leq_tuple(lower, upper)) continue;
    ++rep.pairs_checked;
    Point a = F.eval(lower), b = F.eval(upper);
    if (!order.leq(a, b)) {
      rep.isotone = false;
      if (rep.witnesses.size() < witness_cap)
        rep.witnesses.push_back({lower, upper, a, b, eval_g(order.space(), a, b, b),
                                 order.phi(b) - order.phi(a)});
    }
  }
  return rep;
}

}  // namespace gfix
