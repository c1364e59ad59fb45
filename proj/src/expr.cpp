#include "gfix/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace gfix {

namespace {

enum class OpCode {
  Lit, Var, Add, Sub, Mul, Div, Pow, Neg,
  Sin, Cos, Abs, Sqrt, Max, Min,
};

bool is_function(OpCode op) {
  switch (op) {
    case OpCode::Sin: case OpCode::Cos: case OpCode::Abs:
    case OpCode::Sqrt: case OpCode::Max: case OpCode::Min:
      return true;
    default:
      return false;
  }
}

int function_arity(OpCode op) {
  return (op == OpCode::Max || op == OpCode::Min) ? 2 : 1;
}

const char* op_name(OpCode op) {
  switch (op) {
    case OpCode::Sin: return "sin";
    case OpCode::Cos: return "cos";
    case OpCode::Abs: return "abs";
    case OpCode::Sqrt: return "sqrt";
    case OpCode::Max: return "max";
    case OpCode::Min: return "min";
    default: return "?";
  }
}

}  // namespace

struct Expr::Node {
  OpCode op;
  double lit = 0.0;
  int var = -1;
  NodePtr a, b;
};

namespace {

using Node = Expr::Node;

}  // namespace

// Recursive descent over a hand-rolled tokenizer. Kept together since the
// grammar is small.
namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  std::size_t pos = 0;

  using NodePtr = std::shared_ptr<const Expr::Node>;

  [[noreturn]] void fail(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool accept(char c) {
    if (peek(c)) { ++pos; return true; }
    return false;
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (!accept(c)) fail(pos, std::string("expected '") + c + "' (" + what + ")");
  }

  NodePtr make(OpCode op, NodePtr a = nullptr, NodePtr b = nullptr) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
  }

  NodePtr parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (accept('+')) lhs = make(OpCode::Add, lhs, parse_term());
      else if (accept('-')) lhs = make(OpCode::Sub, lhs, parse_term());
      else return lhs;
    }
  }

  NodePtr parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      if (accept('*')) lhs = make(OpCode::Mul, lhs, parse_factor());
      else if (accept('/')) lhs = make(OpCode::Div, lhs, parse_factor());
      else return lhs;
    }
  }

  NodePtr parse_factor() {
    if (accept('-')) return make(OpCode::Neg, parse_factor());
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (accept('^')) return make(OpCode::Pow, base, parse_factor());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos >= text.size()) fail(pos, "unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      auto inner = parse_expr();
      expect(')', "closing parenthesis");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail(pos, std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    std::size_t start = pos;
    std::size_t consumed = 0;
    double v;
    try {
      v = std::stod(text.substr(start), &consumed);
    } catch (const std::exception&) {
      fail(start, "malformed number");
    }
    pos = start + consumed;
    auto n = make(OpCode::Lit);
    std::const_pointer_cast<Expr::Node>(n)->lit = v;
    return n;
  }

  NodePtr parse_ident() {
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string name = text.substr(start, pos - start);

    static const std::pair<const char*, OpCode> kFunctions[] = {
        {"sin", OpCode::Sin}, {"cos", OpCode::Cos}, {"abs", OpCode::Abs},
        {"sqrt", OpCode::Sqrt}, {"max", OpCode::Max}, {"min", OpCode::Min}};
    for (auto& [fname, op] : kFunctions) {
      if (name == fname) {
        expect('(', "function argument list");
        auto a = parse_expr();
        NodePtr b;
        if (function_arity(op) == 2) {
          expect(',', "second function argument");
          b = parse_expr();
        }
        expect(')', "closing parenthesis");
        return make(op, a, b);
      }
    }

    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (name == vars[i]) {
        auto n = make(OpCode::Var);
        std::const_pointer_cast<Expr::Node>(n)->var = static_cast<int>(i);
        return n;
      }
    }
    fail(start, "unknown identifier '" + name + "'");
  }
};

double eval_node(const Expr::Node& n, std::span<const double> args) {
  auto finite = [](double v, const char* what) {
    if (!std::isfinite(v)) throw EvalError(std::string("non-finite result in ") + what);
    return v;
  };
  switch (n.op) {
    case OpCode::Lit: return n.lit;
    case OpCode::Var: return args[static_cast<std::size_t>(n.var)];
    case OpCode::Add: return finite(eval_node(*n.a, args) + eval_node(*n.b, args), "+");
    case OpCode::Sub: return finite(eval_node(*n.a, args) - eval_node(*n.b, args), "-");
    case OpCode::Mul: return finite(eval_node(*n.a, args) * eval_node(*n.b, args), "*");
    case OpCode::Div: {
      double d = eval_node(*n.b, args);
      if (d == 0.0) throw EvalError("division by zero");
      return finite(eval_node(*n.a, args) / d, "/");
    }
    case OpCode::Pow: return finite(std::pow(eval_node(*n.a, args), eval_node(*n.b, args)), "^");
    case OpCode::Neg: return -eval_node(*n.a, args);
    case OpCode::Sin: return std::sin(eval_node(*n.a, args));
    case OpCode::Cos: return std::cos(eval_node(*n.a, args));
    case OpCode::Abs: return std::abs(eval_node(*n.a, args));
    case OpCode::Sqrt: {
      double v = eval_node(*n.a, args);
      if (v < 0.0) throw EvalError("sqrt of negative value");
      return std::sqrt(v);
    }
    case OpCode::Max: return std::max(eval_node(*n.a, args), eval_node(*n.b, args));
    case OpCode::Min: return std::min(eval_node(*n.a, args), eval_node(*n.b, args));
  }
  throw EvalError("corrupt expression node");
}

void print_node(const Expr::Node& n, const std::vector<std::string>& vars, std::string& out) {
  switch (n.op) {
    case OpCode::Lit: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.lit);
      out += buf;
      return;
    }
    case OpCode::Var:
      out += vars[static_cast<std::size_t>(n.var)];
      return;
    case OpCode::Neg:
      out += "(-";
      print_node(*n.a, vars, out);
      out += ')';
      return;
    case OpCode::Add: case OpCode::Sub: case OpCode::Mul:
    case OpCode::Div: case OpCode::Pow: {
      char sym = n.op == OpCode::Add ? '+' : n.op == OpCode::Sub ? '-'
               : n.op == OpCode::Mul ? '*' : n.op == OpCode::Div ? '/' : '^';
      out += '(';
      print_node(*n.a, vars, out);
      out += sym;
      print_node(*n.b, vars, out);
      out += ')';
      return;
    }
    default:
      out += op_name(n.op);
      out += '(';
      print_node(*n.a, vars, out);
      if (n.b) {
        out += ',';
        print_node(*n.b, vars, out);
      }
      out += ')';
      return;
  }
}

}  // namespace

Expr Expr::parse(const std::string& text, const std::vector<std::string>& vars) {
  if (text.empty()) throw ParseError(0, "empty expression");
  Parser p{text, vars};
  auto root = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail(p.pos, "trailing input");
  Expr e;
  e.root_ = root;
  e.vars_ = vars;
  return e;
}

Expr Expr::parse_arity(const std::string& text, int arity) {
  if (arity < 1) throw std::invalid_argument("arity must be >= 1");
  std::vector<std::string> vars;
  vars.reserve(static_cast<std::size_t>(arity));
  for (int i = 1; i <= arity; ++i) vars.push_back("x" + std::to_string(i));
  if (arity == 1) {
    // Bare `x` as an alias for x1 in unary bodies.
    try {
      return parse(text, {"x"});
    } catch (const ParseError&) {
      return parse(text, vars);
    }
  }
  return parse(text, vars);
}

double Expr::eval(std::span<const double> args) const {
  if (args.size() < vars_.size())
    throw std::invalid_argument("too few arguments for expression");
  double v = eval_node(*root_, args);
  if (!std::isfinite(v)) throw EvalError("non-finite expression result");
  return v;
}

std::string Expr::print() const {
  std::string out;
  print_node(*root_, vars_, out);
  return out;
}

}  // namespace gfix
