#include "wickdisc/holoexpr.hpp"

#include <cctype>
#include <cmath>

namespace wickdisc {

namespace {

using Node = HoloExpr::Node;
using NodePtr = HoloExpr::NodePtr;

NodePtr make_node(Node n) { return std::make_shared<const Node>(std::move(n)); }

NodePtr make_const(std::complex<double> v) {
  Node n;
  n.kind = Node::Kind::Const;
  n.value = v;
  return make_node(std::move(n));
}

NodePtr make_binary(Node::Kind k, NodePtr a, NodePtr b) {
  Node n;
  n.kind = k;
  n.a = std::move(a);
  n.b = std::move(b);
  return make_node(std::move(n));
}

struct Parser {
  const std::string& s;
  size_t pos = 0;
  int max_var = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  bool consume(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    while (true) {
      skip_ws();
      if (consume('+')) {
        lhs = make_binary(Node::Kind::Add, lhs, parse_product());
      } else if (consume('-')) {
        lhs = make_binary(Node::Kind::Sub, lhs, parse_product());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    while (true) {
      skip_ws();
      if (consume('*')) {
        lhs = make_binary(Node::Kind::Mul, lhs, parse_unary());
      } else if (consume('/')) {
        lhs = make_binary(Node::Kind::Div, lhs, parse_unary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    skip_ws();
    if (consume('-')) {
      Node n;
      n.kind = Node::Kind::Neg;
      n.a = parse_unary();
      return make_node(std::move(n));
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    skip_ws();
    if (!consume('^')) return base;
    skip_ws();
    bool neg = consume('-');
    skip_ws();
    size_t start = pos;
    long e = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      e = e * 10 + (s[pos] - '0');
      ++pos;
    }
    if (pos == start) fail("expected integer exponent after '^'");
    Node n;
    n.kind = Node::Kind::Pow;
    n.exponent = static_cast<int>(neg ? -e : e);
    n.a = std::move(base);
    return make_node(std::move(n));
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of expression");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      NodePtr inner = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    size_t start = pos;
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.')) {
      ++pos;
    }
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
      size_t save = pos;
      ++pos;
      if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      } else {
        pos = save;  // 'e' belongs to something else
      }
    }
    try {
      return make_const(std::stod(s.substr(start, pos - start)));
    } catch (const std::exception&) {
      pos = start;
      fail("bad number literal");
    }
  }

  NodePtr parse_ident() {
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
    }
    std::string name = s.substr(start, pos - start);
    if (name == "i") return make_const({0.0, 1.0});
    if (name == "exp") {
      skip_ws();
      if (!consume('(')) {
        pos = start;
        fail("expected '(' after exp");
      }
      NodePtr arg = parse_sum();
      skip_ws();
      if (!consume(')')) fail("expected ')'");
      Node n;
      n.kind = Node::Kind::Exp;
      n.a = std::move(arg);
      return make_node(std::move(n));
    }
    if ((name[0] == 'x' || name[0] == 'y') && name.size() > 1) {
      int idx = 0;
      bool digits = true;
      for (size_t k = 1; k < name.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(name[k]))) {
          digits = false;
          break;
        }
        idx = idx * 10 + (name[k] - '0');
      }
      if (digits && idx >= 1) {
        max_var = std::max(max_var, idx);
        Node n;
        n.kind = Node::Kind::Var;
        n.is_y = (name[0] == 'y');
        n.var_index = idx;
        return make_node(std::move(n));
      }
    }
    pos = start;
    fail("unknown identifier '" + name + "'");
  }
};

std::complex<double> eval_node(const Node& n, const std::vector<std::complex<double>>& x,
                               const std::vector<std::complex<double>>& y) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Const: return n.value;
    case K::Var: {
      const auto& v = n.is_y ? y : x;
      return v.at(static_cast<size_t>(n.var_index - 1));
    }
    case K::Add: return eval_node(*n.a, x, y) + eval_node(*n.b, x, y);
    case K::Sub: return eval_node(*n.a, x, y) - eval_node(*n.b, x, y);
    case K::Mul: return eval_node(*n.a, x, y) * eval_node(*n.b, x, y);
    case K::Div: {
      std::complex<double> den = eval_node(*n.b, x, y);
      if (std::abs(den) < 1e-300) throw std::domain_error("division by zero in expression");
      return eval_node(*n.a, x, y) / den;
    }
    case K::Neg: return -eval_node(*n.a, x, y);
    case K::Pow: {
      std::complex<double> base = eval_node(*n.a, x, y);
      int e = n.exponent;
      if (e < 0) {
        if (std::abs(base) < 1e-300) throw std::domain_error("zero base with negative exponent");
        base = 1.0 / base;
        e = -e;
      }
      std::complex<double> r = 1.0;
      while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
      }
      return r;
    }
    case K::Exp: return std::exp(eval_node(*n.a, x, y));
  }
  throw std::logic_error("bad expression node");
}

}  // namespace

std::complex<double> HoloExpr::eval(const std::vector<std::complex<double>>& x,
                                    const std::vector<std::complex<double>>& y) const {
  if (!root_) return 0.0;
  if (static_cast<int>(x.size()) < n_min_ || static_cast<int>(y.size()) < n_min_) {
    throw std::invalid_argument("expression references coordinates beyond the given dimension");
  }
  return eval_node(*root_, x, y);
}

std::complex<double> HoloExpr::eval_at(const ChartPoint& pt) const {
  if (pt.chart == chart_) return eval(pt.x, pt.y);
  ChartPoint moved = chart_transition(pt, chart_);
  return eval(moved.x, moved.y);
}

HoloExpr parse_expr(const std::string& text, ChartId chart) {
  Parser p(text);
  NodePtr root = p.parse_sum();
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("unexpected trailing input", p.pos);
  return HoloExpr(root, p.max_var, chart, text);
}

}  // namespace wickdisc
