#include "wickdisc/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wickdisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_quadrature_args(double radius, int nodes) {
  if (nodes < 4) throw std::invalid_argument("quadrature needs at least 4 nodes per circle");
  if (radius <= 0) throw std::invalid_argument("quadrature radius must be positive");
}

std::vector<std::complex<double>> circle_nodes(double radius, int nodes) {
  std::vector<std::complex<double>> pts(static_cast<size_t>(nodes));
  for (int j = 0; j < nodes; ++j) {
    double th = kTwoPi * j / nodes;
    pts[static_cast<size_t>(j)] = std::polar(radius, th);
  }
  return pts;
}

/// Runs body(x, y) over the full torus grid (nodes^{2n} points).
template <typename F>
void for_torus(int n, const std::vector<std::complex<double>>& circle, F&& body) {
  int nodes = static_cast<int>(circle.size());
  std::vector<int> idx(static_cast<size_t>(2 * n), 0);
  std::vector<std::complex<double>> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) {
      x[static_cast<size_t>(i)] = circle[static_cast<size_t>(idx[static_cast<size_t>(i)])];
      y[static_cast<size_t>(i)] = circle[static_cast<size_t>(idx[static_cast<size_t>(n + i)])];
    }
    body(x, y, idx);
    int k = 2 * n - 1;
    while (k >= 0) {
      if (++idx[static_cast<size_t>(k)] < nodes) break;
      idx[static_cast<size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

std::complex<double> monomial_weight(const std::vector<std::complex<double>>& x,
                                     const std::vector<std::complex<double>>& y,
                                     const MultiIndex& P, const MultiIndex& Q) {
  // prod x_i^{-P_i} y_i^{-Q_i}
  std::complex<double> w = 1.0;
  for (int i = 0; i < P.size(); ++i) {
    for (int k = 0; k < P[i]; ++k) w /= x[static_cast<size_t>(i)];
    for (int k = 0; k < Q[i]; ++k) w /= y[static_cast<size_t>(i)];
  }
  return w;
}

}  // namespace

Evaluator make_evaluator(const HoloExpr& expr) {
  return [expr](const ChartPoint& pt) { return expr.eval_at(pt); };
}

Evaluator make_evaluator(const DiscPoly& poly) {
  return [poly](const ChartPoint& pt) { return eval_discpoly_at(poly, pt); };
}

std::complex<double> extract_coeff(const Evaluator& f, const MultiIndex& P, const MultiIndex& Q,
                                   double radius, int nodes) {
  check_quadrature_args(radius, nodes);
  if (P.size() != Q.size()) throw std::invalid_argument("key length mismatch");
  int n = P.size();
  ChartId chart = P.total() >= Q.total() ? ChartId::P : ChartId::Q;
  auto circle = circle_nodes(radius, nodes);
  std::complex<double> acc = 0.0;
  ChartPoint pt;
  pt.chart = chart;
  for_torus(n, circle, [&](const auto& x, const auto& y, const auto&) {
    pt.x = x;
    pt.y = y;
    acc += f(pt) * monomial_weight(x, y, P, Q);
  });
  return acc / std::pow(static_cast<double>(nodes), 2 * n);
}

std::complex<double> extract_coeff_std(const Evaluator& f, const MultiIndex& P,
                                       const MultiIndex& Q, double radius, int nodes) {
  check_quadrature_args(radius, nodes);
  if (P.size() != Q.size()) throw std::invalid_argument("key length mismatch");
  int n = P.size();
  if (radius >= 1.0 / std::sqrt(static_cast<double>(n))) {
    throw std::invalid_argument("std-chart extraction radius must lie in (0, 1/sqrt(n))");
  }
  int m = std::max(P.total(), Q.total());
  auto circle = circle_nodes(radius, nodes);
  std::complex<double> acc = 0.0;
  ChartPoint pt;
  pt.chart = ChartId::Std;
  for_torus(n, circle, [&](const auto& x, const auto& y, const auto&) {
    std::complex<double> s = 0.0;
    for (int i = 0; i < n; ++i) s += x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)];
    std::complex<double> factor = 1.0 - s;  // nonzero: |x.y| <= n r^2 < 1
    std::complex<double> fac_pow = 1.0;
    for (int k = 0; k < m - 1; ++k) fac_pow *= factor;
    if (m == 0) fac_pow = 1.0 / factor;
    pt.x = x;
    pt.y = y;
    acc += f(pt) * monomial_weight(x, y, P, Q) * fac_pow;
  });
  return acc / std::pow(static_cast<double>(nodes), 2 * n);
}

TruncatedSeries expand(const Evaluator& f, int n, int max_degree, double radius, int nodes,
                       double tail_rho, double drop_tol) {
  check_quadrature_args(radius, nodes);
  if (n < 1) throw std::invalid_argument("dimension must be >= 1");
  auto circle = circle_nodes(radius, nodes);

  // One grid pass per chart, reused by every coefficient in that branch.
  auto grid_values = [&](ChartId chart) {
    std::vector<std::complex<double>> vals;
    vals.reserve(static_cast<size_t>(std::pow(nodes, 2 * n)));
    ChartPoint pt;
    pt.chart = chart;
    for_torus(n, circle, [&](const auto& x, const auto& y, const auto&) {
      pt.x = x;
      pt.y = y;
      vals.push_back(f(pt));
    });
    return vals;
  };
  std::vector<std::complex<double>> vals_p = grid_values(ChartId::P);
  std::vector<std::complex<double>> vals_q = grid_values(ChartId::Q);

  TruncatedSeries out{DiscPoly(n), max_degree, 0.0, tail_rho, radius, nodes};
  auto keys = indices_up_to_total(n, max_degree);
  for (const MultiIndex& P : keys) {
    for (const MultiIndex& Q : keys) {
      const auto& vals = P.total() >= Q.total() ? vals_p : vals_q;
      std::complex<double> acc = 0.0;
      size_t at = 0;
      for_torus(n, circle, [&](const auto& x, const auto& y, const auto&) {
        acc += vals[at++] * monomial_weight(x, y, P, Q);
      });
      acc /= std::pow(static_cast<double>(nodes), 2 * n);
      if (std::abs(acc) > drop_tol) {
        out.body.add_term(P, Q, Coeff(QScalar(Rat(acc.real()), Rat(acc.imag()))));
      }
    }
  }
  out.tail_bound = tail_estimate(f, n, tail_rho, max_degree);
  return out;
}

double tail_estimate(const Evaluator& f, int n, double rho, int max_degree, int grid) {
  if (rho <= 0) throw std::invalid_argument("tail radius must be positive");
  if (grid < 2) grid = 2;
  auto circle = circle_nodes(2.0 * rho, grid);
  double sup = 0.0;
  for (ChartId chart : {ChartId::P, ChartId::Q}) {
    ChartPoint pt;
    pt.chart = chart;
    for_torus(n, circle, [&](const auto& x, const auto& y, const auto&) {
      pt.x = x;
      pt.y = y;
      sup = std::max(sup, std::abs(f(pt)));
    });
  }
  // sum over dropped keys (max(|P|,|Q|) > max_degree implies |P+Q| > max_degree;
  // the stated factor sums the layers beyond twice the truncation degree).
  double tail = 0.0;
  for (int k = 2 * max_degree + 1; k <= 2 * max_degree + 400; ++k) {
    double layer = binomial(static_cast<unsigned>(2 * n - 1 + k), static_cast<unsigned>(k)).get_d();
    double term = layer * std::pow(0.5, k);
    tail += term;
    if (term < 1e-300) break;
  }
  return std::pow(2.0, 2 * n + 2) * sup * tail;
}

TruncatedSeries star_series(const TruncatedSeries& a, const TruncatedSeries& b,
                            const QScalar& hbar) {
  HMode mode = HMode::fixed(hbar);
  TruncatedSeries out;
  out.body = star(a.body, b.body, mode);
  out.max_degree = a.max_degree + b.max_degree;
  out.rho = a.rho;
  out.radius = a.radius;
  out.nodes = a.nodes;
  double na = a.body.is_zero() ? 0.0 : norm_disc(a.body, a.rho);
  double nb = b.body.is_zero() ? 0.0 : norm_disc(b.body, b.rho);
  out.tail_bound = a.tail_bound * (nb + b.tail_bound) + na * b.tail_bound;
  return out;
}

}  // namespace wickdisc
