#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "hmv/common.hpp"
#include "hmv/jet.hpp"

namespace hmv {

// Small closed-form expression grammar for warp functions, perturbation
// profiles and user metric entries: numbers, named variables, + - * / ^,
// parentheses, and the functions listed in kFunctions. Parsed once, evaluated
// over double or jet scalars so derivatives come out exact.
class Expr {
 public:
  enum class Op { Num, Var, Add, Sub, Mul, Div, Neg, PowInt, PowReal, Call };
  struct Node {
    Op op;
    double num = 0.0;      // Num
    int var = -1;          // Var
    int a = -1, b = -1;    // children
    long long ipow = 0;    // PowInt
    int fn = -1;           // Call
  };

  static Expr parse(const std::string& src, const std::vector<std::string>& var_names);

  template <class T>
  T eval(std::span<const T> vars) const {
    return eval_node(root_, vars);
  }

  const std::string& source() const { return src_; }

  static const std::vector<std::string>& function_names();

 private:
  template <class T>
  T eval_node(int id, std::span<const T> vars) const {
    using std::atan;
    using std::cos;
    using std::cosh;
    using std::exp;
    using std::log;
    using std::sin;
    using std::sinh;
    using std::sqrt;
    using std::tan;
    using std::tanh;
    const Node& n = nodes_[id];
    switch (n.op) {
      case Op::Num:
        return make_const(n.num, vars);
      case Op::Var:
        return vars[n.var];
      case Op::Add:
        return eval_node(n.a, vars) + eval_node(n.b, vars);
      case Op::Sub:
        return eval_node(n.a, vars) - eval_node(n.b, vars);
      case Op::Mul:
        return eval_node(n.a, vars) * eval_node(n.b, vars);
      case Op::Div:
        return eval_node(n.a, vars) / eval_node(n.b, vars);
      case Op::Neg:
        return -eval_node(n.a, vars);
      case Op::PowInt:
        return ipow(eval_node(n.a, vars), n.ipow);
      case Op::PowReal: {
        T base = eval_node(n.a, vars);
        T ex = eval_node(n.b, vars);
        return exp(log(base) * ex);
      }
      case Op::Call: {
        T x = eval_node(n.a, vars);
        switch (n.fn) {
          case 0: return sin(x);
          case 1: return cos(x);
          case 2: return tan(x);
          case 3: return sinh(x);
          case 4: return cosh(x);
          case 5: return tanh(x);
          case 6: return exp(x);
          case 7: return log(x);
          case 8: return sqrt(x);
          case 9: return atan(x);
        }
        break;
      }
    }
    throw std::logic_error("expression node corrupt");
  }

  static double make_const(double c, std::span<const double>) { return c; }
  static Jet2 make_const(double c, std::span<const Jet2> vars) {
    return Jet2::constant(c, vars.empty() ? 0 : vars[0].vars());
  }

  static double ipow(double x, long long e) { return std::pow(x, static_cast<double>(e)); }
  static Jet2 ipow(const Jet2& x, long long e) { return pow_int(x, e); }

  std::vector<Node> nodes_;
  int root_ = -1;
  std::string src_;
};

}  // namespace hmv
