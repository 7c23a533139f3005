#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "wickdisc/charts.hpp"

namespace wickdisc {

/// Syntax error with the byte offset of the offending token.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  size_t offset;
};

/// Holomorphic expression over the chart variables x1..xn, y1..yn: complex
/// literals, + - * /, integer powers and exp, tagged with the chart its
/// variables refer to.
class HoloExpr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    enum class Kind { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Exp } kind;
    std::complex<double> value;  // Const
    bool is_y = false;           // Var: x_k or y_k
    int var_index = 0;           // Var: 1-based k
    int exponent = 0;            // Pow
    NodePtr a, b;
  };

  HoloExpr() = default;
  HoloExpr(NodePtr root, int n_min, ChartId chart, std::string text)
      : root_(std::move(root)), n_min_(n_min), chart_(chart), text_(std::move(text)) {}

  ChartId chart() const { return chart_; }
  /// Smallest n the expression is meaningful for (largest variable index seen).
  int min_dimension() const { return n_min_; }
  const std::string& text() const { return text_; }

  /// Evaluate with the given chart coordinates; throws on division by (near) zero.
  std::complex<double> eval(const std::vector<std::complex<double>>& x,
                            const std::vector<std::complex<double>>& y) const;

  /// Evaluate at a chart point, transitioning into the tagged chart if needed.
  std::complex<double> eval_at(const ChartPoint& pt) const;

 private:
  NodePtr root_;
  int n_min_ = 0;
  ChartId chart_ = ChartId::Std;
  std::string text_;
};

/// Recursive-descent parser; standard precedence, right-associative ^ with
/// integer exponents, function call exp(.). Reports the byte offset on error.
HoloExpr parse_expr(const std::string& text, ChartId chart = ChartId::Std);

}  // namespace wickdisc
