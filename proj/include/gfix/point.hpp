#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gfix {

/// A carrier element: a real scalar, a fixed-dimension real vector, or an
/// indexed element of a finite carrier (the index keeps table lookups cheap,
/// the stored value feeds phi and expression maps).
class Point {
 public:
  enum class Kind { Scalar, Vector, Element };

  Point() : kind_(Kind::Scalar), coords_{0.0} {}

  static Point scalar(double v) {
    require_finite(v);
    Point p;
    p.kind_ = Kind::Scalar;
    p.coords_ = {v};
    return p;
  }

  static Point vector(std::vector<double> v) {
    if (v.empty()) throw std::invalid_argument("vector point must have dimension >= 1");
    for (double c : v) require_finite(c);
    Point p;
    p.kind_ = Kind::Vector;
    p.coords_ = std::move(v);
    return p;
  }

  static Point element(int index, double value) {
    if (index < 0) throw std::invalid_argument("element index must be nonnegative");
    require_finite(value);
    Point p;
    p.kind_ = Kind::Element;
    p.coords_ = {value};
    p.index_ = index;
    return p;
  }

  Kind kind() const { return kind_; }
  std::size_t dim() const { return coords_.size(); }

  double value() const {
    if (kind_ == Kind::Vector) throw std::logic_error("scalar value of a vector point");
    return coords_[0];
  }

  int index() const {
    if (kind_ != Kind::Element) throw std::logic_error("index of a non-element point");
    return index_;
  }

  const std::vector<double>& coords() const { return coords_; }

  // Exact equality. Distinctness in the axioms (G2's x != y, G3's z != y) is
  // bitwise on continuous carriers and index-based on finite ones.
  friend bool operator==(const Point& a, const Point& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::Element) return a.index_ == b.index_;
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

  // Lexicographic order, used for deterministic lowest-witness selection.
  friend bool operator<(const Point& a, const Point& b) {
    if (a.kind_ == Kind::Element && b.kind_ == Kind::Element) return a.index_ < b.index_;
    return a.coords_ < b.coords_;
  }

  std::string str() const {
    if (kind_ == Kind::Element)
      return "#" + std::to_string(index_) + "(" + std::to_string(coords_[0]) + ")";
    if (kind_ == Kind::Scalar) return std::to_string(coords_[0]);
    std::string s = "(";
    for (std::size_t d = 0; d < coords_.size(); ++d) {
      if (d) s += ",";
      s += std::to_string(coords_[d]);
    }
    return s + ")";
  }

 private:
  static void require_finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("point component must be finite");
  }

  Kind kind_;
  std::vector<double> coords_;
  int index_ = -1;
};

using Tuple = std::vector<Point>;

/// Carrier descriptor: an interval box (per-dimension bounds, infinities
/// allowed) or a finite list of real-valued elements.
class Carrier {
 public:
  static Carrier interval(double lo, double hi) {
    return box({{lo, hi}});
  }

  static Carrier box(std::vector<std::pair<double, double>> bounds) {
    if (bounds.empty()) throw std::invalid_argument("carrier needs at least one dimension");
    for (auto& [lo, hi] : bounds) {
      if (std::isnan(lo) || std::isnan(hi) || lo > hi)
        throw std::invalid_argument("carrier bounds must satisfy lo <= hi");
    }
    Carrier c;
    c.finite_ = false;
    c.bounds_ = std::move(bounds);
    return c;
  }

  static Carrier finite(std::vector<double> elements) {
    if (elements.empty()) throw std::invalid_argument("finite carrier must be nonempty");
    Carrier c;
    c.finite_ = true;
    c.elements_ = std::move(elements);
    return c;
  }

  bool is_finite() const { return finite_; }
  std::size_t dim() const { return finite_ ? 1 : bounds_.size(); }
  std::size_t size() const { return elements_.size(); }
  const std::vector<double>& elements() const { return elements_; }
  const std::vector<std::pair<double, double>>& bounds() const { return bounds_; }

  Point element_at(std::size_t i) const {
    if (!finite_ || i >= elements_.size()) throw std::out_of_range("carrier element index");
    return Point::element(static_cast<int>(i), elements_[i]);
  }

  bool contains(const Point& p) const {
    if (finite_) {
      return p.kind() == Point::Kind::Element &&
             p.index() >= 0 && static_cast<std::size_t>(p.index()) < elements_.size();
    }
    if (p.kind() == Point::Kind::Element) return false;
    if (p.dim() != bounds_.size()) return false;
    for (std::size_t d = 0; d < bounds_.size(); ++d) {
      double v = p.coords()[d];
      if (v < bounds_[d].first || v > bounds_[d].second) return false;
    }
    return true;
  }

  /// Membership with a descriptive error, for operations whose precondition
  /// is "point in carrier".
  void require(const Point& p, const char* what) const {
    if (!contains(p)) throw std::domain_error(std::string(what) + ": point outside carrier");
  }

 private:
  bool finite_ = false;
  std::vector<std::pair<double, double>> bounds_;
  std::vector<double> elements_;
};

}  // namespace gfix
