#pragma once

#include <complex>
#include <vector>

#include "wickdisc/disc.hpp"

namespace wickdisc {

enum class ChartId { Std, P, Q };

const char* chart_name(ChartId id);
ChartId chart_from_name(const std::string& name);

/// A point of the doubled disc in one of the three holomorphic charts. The
/// std chart requires x.y != 1; a std point with y = conj(x) represents the
/// diagonal embedding of a disc point.
template <typename C>
struct BasicChartPoint {
  ChartId chart = ChartId::Std;
  std::vector<C> x, y;

  int n() const { return static_cast<int>(x.size()); }
};

using ChartPoint = BasicChartPoint<std::complex<double>>;
using ChartPointExact = BasicChartPoint<QScalar>;

ChartPoint diagonal_point(const std::vector<std::complex<double>>& w);
ChartPointExact diagonal_point_exact(const std::vector<QScalar>& w);

/// Whether the std point is (numerically) on the diagonal y = conj(x).
bool is_diagonal_std(const ChartPoint& pt, double tol = 1e-12);

/// Monomial f_{P,Q} (|P| = |Q|, length n+1) in the given chart:
///   std:  x^{P'} y^{Q'} / (1 - x.y)^{|P|}
///   P:    (1 + x.y)^{P_0} x^{P'} y^{Q'}
///   Q:    (1 + x.y)^{Q_0} x^{P'} y^{Q'}
std::complex<double> eval_fhat(const MultiIndex& P, const MultiIndex& Q, const ChartPoint& pt);
QScalar eval_fhat_exact(const MultiIndex& P, const MultiIndex& Q, const ChartPointExact& pt);

/// Evaluation functional: sum of coefficients times the lifted fundamental
/// monomials at the point. Agrees with eval_disc on diagonal std points.
std::complex<double> eval_discpoly_at(const DiscPoly& a, const ChartPoint& pt);
QScalar eval_discpoly_at_exact(const DiscPoly& a, const ChartPointExact& pt);

/// Change of chart; throws on domain violations (vanishing 1 - x.y in the
/// std chart or 1 + x.y leaving the P/Q overlap).
ChartPoint chart_transition(const ChartPoint& src, ChartId dst);
ChartPointExact chart_transition_exact(const ChartPointExact& src, ChartId dst);

using CMatrix = std::vector<std::vector<std::complex<double>>>;
using QMatrixData = std::vector<std::vector<QScalar>>;

/// M^{mu nu} = f_{E_mu, E_nu} at the point; satisfies h_{mu nu} M^{mu nu} = -1
/// and the rank-one relations M^{mu nu} M^{rho sigma} = M^{mu sigma} M^{rho nu}.
CMatrix matrix_embed(const ChartPoint& pt);
QMatrixData matrix_embed_exact(const ChartPointExact& pt);

/// Reconstruct the chart point from an embedded matrix: p^mu = A^{mu rho},
/// q^nu = A^{rho nu}/A^{rho rho} for a nonvanishing diagonal entry. Verifies
/// the two constraint families within the tolerance first.
ChartPoint point_from_matrix(const CMatrix& A, double tol = 1e-9);

/// Exact-mode reconstruction for rational matrices; the constraints are
/// checked as equalities.
ChartPointExact point_from_matrix_exact(const QMatrixData& A);

}  // namespace wickdisc
