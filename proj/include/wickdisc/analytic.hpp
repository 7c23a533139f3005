#pragma once

#include <functional>

#include "wickdisc/holoexpr.hpp"

namespace wickdisc {

/// A function on the doubled disc, callable at points of any chart. Must be
/// safe to call from concurrent contexts when extraction is parallelized.
using Evaluator = std::function<std::complex<double>(const ChartPoint&)>;

Evaluator make_evaluator(const HoloExpr& expr);
Evaluator make_evaluator(const DiscPoly& poly);

/// Truncated Schauder expansion: a disc polynomial body of filtration degree
/// <= max_degree together with a bound on the dropped coefficient mass
/// sum |f'_{r,P,Q}| rho^{|P+Q|} over the keys beyond the truncation.
struct TruncatedSeries {
  DiscPoly body = DiscPoly(1);
  int max_degree = 0;
  double tail_bound = 0.0;
  double rho = 1.0;      // the radius the tail bound refers to
  double radius = 0.0;   // quadrature radius
  int nodes = 0;
};

/// Basis coefficient f'_{r,P,Q}(f) by the tensor-product trapezoidal rule with
/// `nodes` points per circle of the given radius, using the P-chart integrand
/// when |P| >= |Q| and the Q-chart integrand otherwise. Exact on trigonometric
/// polynomials once `nodes` exceeds their degree.
std::complex<double> extract_coeff(const Evaluator& f, const MultiIndex& P, const MultiIndex& Q,
                                   double radius, int nodes);

/// Same functional through the standard-chart formula with the extra factor
/// (1 - x.y)^{max(|P|,|Q|) - 1}; radius restricted to (0, 1/sqrt(n)).
std::complex<double> extract_coeff_std(const Evaluator& f, const MultiIndex& P,
                                       const MultiIndex& Q, double radius, int nodes);

/// Expand f into the fundamental basis up to the filtration degree, with the
/// quadrature grid evaluated once per chart and reused for every coefficient.
/// Coefficients below drop_tol are discarded.
TruncatedSeries expand(const Evaluator& f, int n, int max_degree, double radius, int nodes,
                       double tail_rho = 1.0, double drop_tol = 1e-13);

/// Heuristic tail bound: 2^{2n+2} * (sampled sup of |f| over the images of the
/// polydiscs of radius 2 rho in the P- and Q-charts) * sum over dropped keys of
/// 2^{-|P+Q|}. Rigorous only when the sampled sup is certified by the caller.
double tail_estimate(const Evaluator& f, int n, double rho, int max_degree, int grid = 32);

/// Star product of truncations: the body product is exact; the tail bounds
/// combine through the weighted norms of the bodies.
TruncatedSeries star_series(const TruncatedSeries& a, const TruncatedSeries& b,
                            const QScalar& hbar);

}  // namespace wickdisc
