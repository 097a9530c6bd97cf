#pragma once

// Plain-text math expressions in t and r, evaluated as second-order jets.
//
// Grammar (loosest to tightest): + -, * /, unary -, ^ (right-associative).
// Atoms: numeric literals (decimal or scientific), t, r, pi, and calls of
// sin cos tan exp log sqrt sinh cosh tanh. Vector-field components may
// additionally use theta and phi when parsed with parse_extended(); such
// trees only support plain value evaluation.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mag/errors.hpp"
#include "mag/jet.hpp"

namespace mag {

enum class FuncId { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh, Tanh };

class Expr {
 public:
  Expr() { root_ = push(Node{Kind::Literal, 0.0, FuncId::Sin, -1, -1, 0}); }

  static Expr parse(std::string_view src) { return parse_impl(src, false); }
  static Expr parse_extended(std::string_view src) { return parse_impl(src, true); }

  // Second-order jet at (t, r). Rejects trees that reference theta or phi.
  Jet2 eval_jet(double t, double r) const {
    return eval_jet_node(root_, Jet2::var_t(t), Jet2::var_r(r));
  }

  // Plain value at a full spacetime point (used by the vector-field escape
  // hatch, where derivatives are taken by finite differences).
  double eval_value(double t, double r, double theta = 0.0, double phi = 0.0) const {
    return eval_value_node<double>(root_, t, r, theta, phi);
  }

  // Scalar-generic evaluation; long double instantiations serve as
  // finite-difference oracles with headroom below double roundoff.
  template <class S>
  S eval_value_as(S t, S r, S theta = S(0), S phi = S(0)) const {
    return eval_value_node<S>(root_, t, r, theta, phi);
  }

  std::string to_string() const { return print(root_, 0); }

  bool uses_angles() const {
    for (const Node& n : nodes_)
      if (n.kind == Kind::VarTheta || n.kind == Kind::VarPhi) return true;
    return false;
  }

  bool is_literal_zero() const {
    const Node& n = nodes_[static_cast<std::size_t>(root_)];
    return n.kind == Kind::Literal && n.value == 0.0;
  }

  friend bool operator==(const Expr& a, const Expr& b) {
    return a.equal_nodes(a.root_, b, b.root_);
  }
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  enum class Kind : std::uint8_t {
    Literal, VarT, VarR, VarTheta, VarPhi, Pi,
    Add, Sub, Mul, Div, Pow, Neg, Call
  };

  struct Node {
    Kind kind;
    double value;    // Literal payload
    FuncId fn;       // Call payload
    int a, b;        // children
    std::uint32_t offset;  // byte offset in the source, for diagnostics
  };

  std::vector<Node> nodes_;
  int root_ = -1;

  int push(Node n) {
    nodes_.push_back(n);
    return static_cast<int>(nodes_.size()) - 1;
  }
  const Node& at(int i) const { return nodes_[static_cast<std::size_t>(i)]; }

  bool equal_nodes(int i, const Expr& o, int j) const {
    const Node& x = at(i);
    const Node& y = o.at(j);
    if (x.kind != y.kind) return false;
    switch (x.kind) {
      case Kind::Literal: return x.value == y.value;
      case Kind::Call:
        return x.fn == y.fn && equal_nodes(x.a, o, y.a);
      case Kind::Neg: return equal_nodes(x.a, o, y.a);
      case Kind::Add: case Kind::Sub: case Kind::Mul: case Kind::Div: case Kind::Pow:
        return equal_nodes(x.a, o, y.a) && equal_nodes(x.b, o, y.b);
      default: return true;
    }
  }

  // ----------------------------------------------------------------------
  // Parsing
  // ----------------------------------------------------------------------

  struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    bool angles;
    Expr* out;

    void skip_ws() {
      while (pos < src.size() && (src[pos] == ' ' || src[pos] == '\t' ||
                                  src[pos] == '\n' || src[pos] == '\r'))
        ++pos;
    }
    bool eat(char c) {
      skip_ws();
      if (pos < src.size() && src[pos] == c) { ++pos; return true; }
      return false;
    }
    [[noreturn]] void fail(const std::string& expected, std::size_t where) {
      std::string got = where < src.size() ? std::string("'") + src[where] + "'"
                                           : std::string("end of input");
      throw ParseError("syntax error at offset " + std::to_string(where) +
                           ": expected " + expected + ", got " + got,
                       where);
    }

    int parse_sum() {
      int lhs = parse_product();
      for (;;) {
        skip_ws();
        std::size_t here = pos;
        if (eat('+')) {
          int rhs = parse_product();
          lhs = out->push(Node{Kind::Add, 0, FuncId::Sin, lhs, rhs,
                               static_cast<std::uint32_t>(here)});
        } else if (eat('-')) {
          int rhs = parse_product();
          lhs = out->push(Node{Kind::Sub, 0, FuncId::Sin, lhs, rhs,
                               static_cast<std::uint32_t>(here)});
        } else {
          return lhs;
        }
      }
    }

    int parse_product() {
      int lhs = parse_unary();
      for (;;) {
        skip_ws();
        std::size_t here = pos;
        if (eat('*')) {
          int rhs = parse_unary();
          lhs = out->push(Node{Kind::Mul, 0, FuncId::Sin, lhs, rhs,
                               static_cast<std::uint32_t>(here)});
        } else if (eat('/')) {
          int rhs = parse_unary();
          lhs = out->push(Node{Kind::Div, 0, FuncId::Sin, lhs, rhs,
                               static_cast<std::uint32_t>(here)});
        } else {
          return lhs;
        }
      }
    }

    int parse_unary() {
      skip_ws();
      std::size_t here = pos;
      if (eat('-')) {
        int inner = parse_unary();
        return out->push(Node{Kind::Neg, 0, FuncId::Sin, inner, -1,
                              static_cast<std::uint32_t>(here)});
      }
      return parse_power();
    }

    int parse_power() {
      int base = parse_atom();
      skip_ws();
      std::size_t here = pos;
      if (eat('^')) {
        int expo = parse_unary();  // right-assoc; allows -2 exponents
        return out->push(Node{Kind::Pow, 0, FuncId::Sin, base, expo,
                              static_cast<std::uint32_t>(here)});
      }
      return base;
    }

    int parse_atom() {
      skip_ws();
      std::size_t here = pos;
      if (pos >= src.size())
        fail("a number, 't', 'r', 'pi', a function name, '(' or '-'", here);
      char c = src[pos];
      if ((c >= '0' && c <= '9') || c == '.') return parse_number();
      if (c == '(') {
        ++pos;
        int inner = parse_sum();
        if (!eat(')')) fail("')'", pos);
        return inner;
      }
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_')
        return parse_ident();
      fail("a number, 't', 'r', 'pi', a function name, '(' or '-'", here);
    }

    int parse_number() {
      std::size_t start = pos;
      while (pos < src.size() && ((src[pos] >= '0' && src[pos] <= '9') || src[pos] == '.'))
        ++pos;
      if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
        std::size_t save = pos;
        ++pos;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
        if (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') {
          while (pos < src.size() && src[pos] >= '0' && src[pos] <= '9') ++pos;
        } else {
          pos = save;  // 'e' belongs to something else; not a valid exponent
        }
      }
      double value = 0;
      auto res = std::from_chars(src.data() + start, src.data() + pos, value);
      if (res.ec != std::errc{} || res.ptr != src.data() + pos)
        fail("a valid numeric literal", start);
      return out->push(Node{Kind::Literal, value, FuncId::Sin, -1, -1,
                            static_cast<std::uint32_t>(start)});
    }

    int parse_ident() {
      std::size_t start = pos;
      while (pos < src.size() &&
             ((src[pos] >= 'a' && src[pos] <= 'z') ||
              (src[pos] >= 'A' && src[pos] <= 'Z') ||
              (src[pos] >= '0' && src[pos] <= '9') || src[pos] == '_'))
        ++pos;
      std::string_view name = src.substr(start, pos - start);
      auto make = [&](Kind k) {
        return out->push(Node{k, 0, FuncId::Sin, -1, -1,
                              static_cast<std::uint32_t>(start)});
      };
      if (name == "t") return make(Kind::VarT);
      if (name == "r") return make(Kind::VarR);
      if (name == "pi") return make(Kind::Pi);
      if (angles && name == "theta") return make(Kind::VarTheta);
      if (angles && name == "phi") return make(Kind::VarPhi);

      FuncId fn;
      if (name == "sin") fn = FuncId::Sin;
      else if (name == "cos") fn = FuncId::Cos;
      else if (name == "tan") fn = FuncId::Tan;
      else if (name == "exp") fn = FuncId::Exp;
      else if (name == "log") fn = FuncId::Log;
      else if (name == "sqrt") fn = FuncId::Sqrt;
      else if (name == "sinh") fn = FuncId::Sinh;
      else if (name == "cosh") fn = FuncId::Cosh;
      else if (name == "tanh") fn = FuncId::Tanh;
      else
        throw UnknownIdentifier(
            "unknown identifier '" + std::string(name) + "' at offset " +
                std::to_string(start) +
                (angles ? " (known: t, r, theta, phi, pi, function names)"
                        : " (known: t, r, pi, function names)"),
            start);
      if (!eat('(')) fail("'(' after function name", pos);
      int arg = parse_sum();
      if (!eat(')')) fail("')'", pos);
      return out->push(Node{Kind::Call, 0, fn, arg, -1,
                            static_cast<std::uint32_t>(start)});
    }
  };

  static Expr parse_impl(std::string_view src, bool angles) {
    Expr e;
    e.nodes_.clear();
    Parser p{src, 0, angles, &e};
    e.root_ = p.parse_sum();
    p.skip_ws();
    if (p.pos != src.size()) p.fail("end of input or an operator", p.pos);
    return e;
  }

  // ----------------------------------------------------------------------
  // Evaluation
  // ----------------------------------------------------------------------

  // Syntactic integer test for exponents: a literal with integral value,
  // possibly wrapped in unary minus.
  bool syntactic_int(int i, long long* n_out) const {
    const Node& n = at(i);
    if (n.kind == Kind::Neg) {
      if (!syntactic_int(n.a, n_out)) return false;
      *n_out = -*n_out;
      return true;
    }
    if (n.kind != Kind::Literal) return false;
    if (n.value != std::floor(n.value) || std::fabs(n.value) > 1e15) return false;
    *n_out = static_cast<long long>(n.value);
    return true;
  }

  Jet2 eval_jet_node(int i, const Jet2& t, const Jet2& r) const {
    const Node& n = at(i);
    switch (n.kind) {
      case Kind::Literal: return Jet2(n.value);
      case Kind::VarT: return t;
      case Kind::VarR: return r;
      case Kind::Pi: return Jet2(M_PI);
      case Kind::VarTheta:
      case Kind::VarPhi:
        throw DomainError("theta/phi are not differentiable variables here", n.offset);
      case Kind::Neg: return -eval_jet_node(n.a, t, r);
      case Kind::Add: return eval_jet_node(n.a, t, r) + eval_jet_node(n.b, t, r);
      case Kind::Sub: return eval_jet_node(n.a, t, r) - eval_jet_node(n.b, t, r);
      case Kind::Mul: return eval_jet_node(n.a, t, r) * eval_jet_node(n.b, t, r);
      case Kind::Div: {
        Jet2 den = eval_jet_node(n.b, t, r);
        if (den.v == 0.0) throw DomainError("division by zero", n.offset);
        return eval_jet_node(n.a, t, r) / den;
      }
      case Kind::Pow: {
        Jet2 base = eval_jet_node(n.a, t, r);
        long long k;
        if (syntactic_int(n.b, &k)) {
          if (base.v == 0.0 && k < 0)
            throw DomainError("zero base with negative exponent", n.offset);
          return pow_int(base, k);
        }
        Jet2 expo = eval_jet_node(n.b, t, r);
        if (base.v <= 0.0)
          throw DomainError("non-integer power of non-positive base", n.offset);
        return pow_general(base, expo);
      }
      case Kind::Call: {
        Jet2 x = eval_jet_node(n.a, t, r);
        switch (n.fn) {
          case FuncId::Sin: return sin(x);
          case FuncId::Cos: return cos(x);
          case FuncId::Tan: return tan(x);
          case FuncId::Exp: return exp(x);
          case FuncId::Log:
            if (x.v <= 0.0) throw DomainError("log of non-positive value", n.offset);
            return log(x);
          case FuncId::Sqrt:
            if (x.v <= 0.0)
              throw DomainError("sqrt of non-positive value (jet undefined)", n.offset);
            return sqrt(x);
          case FuncId::Sinh: return sinh(x);
          case FuncId::Cosh: return cosh(x);
          case FuncId::Tanh: return tanh(x);
        }
        break;
      }
    }
    throw DomainError("malformed expression node", n.offset);
  }

  template <class S>
  S eval_value_node(int i, S t, S r, S th, S ph) const {
    const Node& n = at(i);
    switch (n.kind) {
      case Kind::Literal: return S(n.value);
      case Kind::VarT: return t;
      case Kind::VarR: return r;
      case Kind::VarTheta: return th;
      case Kind::VarPhi: return ph;
      case Kind::Pi: return S(3.141592653589793238462643383279502884L);
      case Kind::Neg: return -eval_value_node<S>(n.a, t, r, th, ph);
      case Kind::Add: return eval_value_node<S>(n.a, t, r, th, ph) + eval_value_node<S>(n.b, t, r, th, ph);
      case Kind::Sub: return eval_value_node<S>(n.a, t, r, th, ph) - eval_value_node<S>(n.b, t, r, th, ph);
      case Kind::Mul: return eval_value_node<S>(n.a, t, r, th, ph) * eval_value_node<S>(n.b, t, r, th, ph);
      case Kind::Div: {
        S den = eval_value_node<S>(n.b, t, r, th, ph);
        if (den == S(0)) throw DomainError("division by zero", n.offset);
        return eval_value_node<S>(n.a, t, r, th, ph) / den;
      }
      case Kind::Pow: {
        S base = eval_value_node<S>(n.a, t, r, th, ph);
        long long k;
        if (syntactic_int(n.b, &k)) {
          if (base == S(0) && k < 0)
            throw DomainError("zero base with negative exponent", n.offset);
          return std::pow(base, S(static_cast<double>(k)));
        }
        S expo = eval_value_node<S>(n.b, t, r, th, ph);
        if (base <= S(0))
          throw DomainError("non-integer power of non-positive base", n.offset);
        return std::pow(base, expo);
      }
      case Kind::Call: {
        S x = eval_value_node<S>(n.a, t, r, th, ph);
        switch (n.fn) {
          case FuncId::Sin: return std::sin(x);
          case FuncId::Cos: return std::cos(x);
          case FuncId::Tan: return std::tan(x);
          case FuncId::Exp: return std::exp(x);
          case FuncId::Log:
            if (x <= S(0)) throw DomainError("log of non-positive value", n.offset);
            return std::log(x);
          case FuncId::Sqrt:
            if (x < S(0)) throw DomainError("sqrt of negative value", n.offset);
            return std::sqrt(x);
          case FuncId::Sinh: return std::sinh(x);
          case FuncId::Cosh: return std::cosh(x);
          case FuncId::Tanh: return std::tanh(x);
        }
        break;
      }
    }
    throw DomainError("malformed expression node", n.offset);
  }

  // ----------------------------------------------------------------------
  // Printing (minimal parentheses, round-trip stable)
  // ----------------------------------------------------------------------

  static int precedence(Kind k) {
    switch (k) {
      case Kind::Add: case Kind::Sub: return 1;
      case Kind::Mul: case Kind::Div: return 2;
      case Kind::Neg: return 3;
      case Kind::Pow: return 4;
      default: return 5;
    }
  }

  static std::string literal_to_string(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
  }

  std::string print(int i, int parent_prec) const {
    const Node& n = at(i);
    const int prec = precedence(n.kind);
    std::string body;
    switch (n.kind) {
      case Kind::Literal:
        body = literal_to_string(n.value);
        // negative literals print with a leading '-': guard like Neg
        if (n.value < 0 && parent_prec > 1) return "(" + body + ")";
        return body;
      case Kind::VarT: return "t";
      case Kind::VarR: return "r";
      case Kind::VarTheta: return "theta";
      case Kind::VarPhi: return "phi";
      case Kind::Pi: return "pi";
      // right operands print one level tighter so left-associative reparsing
      // reproduces the same tree
      case Kind::Add:
        body = print(n.a, prec) + " + " + print(n.b, prec + 1);
        break;
      case Kind::Sub:
        body = print(n.a, prec) + " - " + print(n.b, prec + 1);
        break;
      case Kind::Mul:
        body = print(n.a, prec) + "*" + print(n.b, prec + 1);
        break;
      case Kind::Div:
        body = print(n.a, prec) + "/" + print(n.b, prec + 1);
        break;
      case Kind::Neg:
        body = "-" + print(n.a, prec + 1);
        break;
      case Kind::Pow:
        // left operand needs the tighter context (a^b^c is a^(b^c))
        body = print(n.a, prec + 1) + "^" + print(n.b, prec);
        break;
      case Kind::Call: {
        static const char* names[] = {"sin", "cos", "tan", "exp", "log",
                                      "sqrt", "sinh", "cosh", "tanh"};
        return std::string(names[static_cast<int>(n.fn)]) + "(" + print(n.a, 0) + ")";
      }
    }
    if (prec < parent_prec) return "(" + body + ")";
    return body;
  }
};

}  // namespace mag
