#include "hmv/expr.hpp"

#include <cctype>
#include <cstdlib>

namespace hmv {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  const std::vector<std::string>& vars;
  std::vector<Expr::Node>& nodes;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ConfigError("expression error at offset " + std::to_string(pos) + " in \"" + s + "\": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  int add(Expr::Node n) {
    nodes.push_back(n);
    return static_cast<int>(nodes.size()) - 1;
  }

  int parse_expr() {
    int lhs = parse_term();
    for (;;) {
      if (eat('+')) {
        int rhs = parse_term();
        lhs = add({.op = Expr::Op::Add, .a = lhs, .b = rhs});
      } else if (eat('-')) {
        int rhs = parse_term();
        lhs = add({.op = Expr::Op::Sub, .a = lhs, .b = rhs});
      } else {
        return lhs;
      }
    }
  }

  int parse_term() {
    int lhs = parse_factor();
    for (;;) {
      if (eat('*')) {
        int rhs = parse_factor();
        lhs = add({.op = Expr::Op::Mul, .a = lhs, .b = rhs});
      } else if (eat('/')) {
        int rhs = parse_factor();
        lhs = add({.op = Expr::Op::Div, .a = lhs, .b = rhs});
      } else {
        return lhs;
      }
    }
  }

  // right-associative power
  int parse_factor() {
    int base = parse_unary();
    if (!eat('^')) return base;
    size_t save = pos;
    // integer exponent keeps negative bases legal and derivatives exact
    bool neg = eat('-');
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    bool is_int = pos > start && (pos >= s.size() || (s[pos] != '.' && s[pos] != 'e' && s[pos] != 'E'));
    if (is_int) {
      long long e = std::strtoll(s.substr(start, pos - start).c_str(), nullptr, 10);
      return add({.op = Expr::Op::PowInt, .a = base, .ipow = neg ? -e : e});
    }
    pos = save;
    int ex = parse_factor();
    return add({.op = Expr::Op::PowReal, .a = base, .b = ex});
  }

  int parse_unary() {
    if (eat('-')) return add({.op = Expr::Op::Neg, .a = parse_unary()});
    eat('+');
    return parse_primary();
  }

  int parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      char* end = nullptr;
      double v = std::strtod(s.c_str() + pos, &end);
      if (end == s.c_str() + pos) fail("bad number");
      pos = end - s.c_str();
      return add({.op = Expr::Op::Num, .num = v});
    }
    if (c == '(') {
      ++pos;
      int e = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "pi") return add({.op = Expr::Op::Num, .num = 3.14159265358979323846});
      const auto& fns = Expr::function_names();
      for (size_t i = 0; i < fns.size(); ++i) {
        if (name == fns[i]) {
          if (!eat('(')) fail("function '" + name + "' needs '('");
          int a = parse_expr();
          if (!eat(')')) fail("missing ')' after '" + name + "'");
          return add({.op = Expr::Op::Call, .a = a, .fn = static_cast<int>(i)});
        }
      }
      for (size_t i = 0; i < vars.size(); ++i)
        if (name == vars[i]) return add({.op = Expr::Op::Var, .var = static_cast<int>(i)});
      fail("unknown identifier '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

const std::vector<std::string>& Expr::function_names() {
  static const std::vector<std::string> fns = {"sin",  "cos", "tan", "sinh", "cosh",
                                               "tanh", "exp", "log", "sqrt", "atan"};
  return fns;
}

Expr Expr::parse(const std::string& src, const std::vector<std::string>& var_names) {
  Expr e;
  e.src_ = src;
  Parser p{src, 0, var_names, e.nodes_};
  e.root_ = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) p.fail("trailing input");
  return e;
}

}  // namespace hmv
