#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfix {

/// Parse failure with the 0-based offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& msg)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Non-finite result or domain fault (sqrt of negative, division by zero)
/// during evaluation.
class EvalError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Immutable expression AST over real literals, named variables, binary
/// + - * / ^, unary negation and the functions sin, cos, abs, sqrt, max, min.
class Expr {
 public:
  /// Parses `text` against the variable names `vars` (position in `vars` is
  /// the evaluation slot). Grammar: ^ binds tightest (right-assoc), then
  /// unary minus, then * /, then + -; parentheses and f(e) application;
  /// implicit multiplication is a syntax error.
  static Expr parse(const std::string& text, const std::vector<std::string>& vars);

  /// Convenience for n-tuple map bodies: variables x1..xn (plus bare `x` as
  /// an alias for x1 when arity is 1).
  static Expr parse_arity(const std::string& text, int arity);

  double eval(std::span<const double> args) const;
  std::string print() const;
  int num_vars() const { return static_cast<int>(vars_.size()); }

  struct Node;

 private:
  using NodePtr = std::shared_ptr<const Node>;

  NodePtr root_;
  std::vector<std::string> vars_;
};

}  // namespace gfix
