#include "wickdisc/charts.hpp"

#include <cmath>
#include <stdexcept>

namespace wickdisc {

namespace {

template <typename C>
C dot(const std::vector<C>& a, const std::vector<C>& b) {
  C s{};
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

template <typename C>
C cpow(const C& base, int k) {
  C r{1};
  for (int i = 0; i < k; ++i) r = r * base;
  return r;
}

bool near_zero(const std::complex<double>& v) { return std::abs(v) < 1e-14; }
bool near_zero(const QScalar& v) { return v.is_zero(); }

template <typename C>
C eval_fhat_impl(const MultiIndex& P, const MultiIndex& Q, const BasicChartPoint<C>& pt) {
  if (P.size() != pt.n() + 1 || Q.size() != pt.n() + 1) {
    throw std::invalid_argument("eval_fhat expects ambient indices of length n+1");
  }
  if (P.total() != Q.total()) {
    throw std::domain_error("eval_fhat requires |P| = |Q|");
  }
  C s = dot(pt.x, pt.y);
  C mono{1};
  for (int i = 1; i <= pt.n(); ++i) {
    mono = mono * cpow(pt.x[static_cast<size_t>(i - 1)], P[i]);
    mono = mono * cpow(pt.y[static_cast<size_t>(i - 1)], Q[i]);
  }
  switch (pt.chart) {
    case ChartId::Std: {
      C denom = C{1} - s;
      if (near_zero(denom)) throw std::domain_error("std chart point on the locus x.y = 1");
      return mono / cpow(denom, P.total());
    }
    case ChartId::P:
      return cpow(C{1} + s, P[0]) * mono;
    case ChartId::Q:
      return cpow(C{1} + s, Q[0]) * mono;
  }
  throw std::logic_error("bad chart id");
}

template <typename C>
C eval_discpoly_impl(const DiscPoly& a, const BasicChartPoint<C>& pt, C (*to_c)(const QScalar&)) {
  if (a.n() != pt.n()) throw std::invalid_argument("point dimension mismatch");
  C s{};
  for (const auto& [key, c] : a.terms()) {
    auto [P, Q] = fundamental_key(key.P, key.Q);
    s += to_c(c.numeric()) * eval_fhat_impl(P, Q, pt);
  }
  return s;
}

template <typename C>
BasicChartPoint<C> transition_impl(const BasicChartPoint<C>& src, ChartId dst) {
  if (src.chart == dst) return src;
  C s = dot(src.x, src.y);
  BasicChartPoint<C> out;
  out.chart = dst;
  out.x = src.x;
  out.y = src.y;
  auto scale = [&](std::vector<C>& v, const C& f) {
    for (auto& c : v) c = c * f;
  };
  // On the level set, x^0 y^0 = 1/(1 - x.y) in std coordinates and 1 + x.y in
  // P/Q coordinates, which fixes all six transitions.
  if (src.chart == ChartId::Std) {
    C denom = C{1} - s;
    if (near_zero(denom)) throw std::domain_error("transition domain violation: x.y = 1");
    if (dst == ChartId::P) {
      scale(out.x, C{1} / denom);
    } else {
      scale(out.y, C{1} / denom);
    }
    return out;
  }
  C x0y0 = C{1} + s;
  if (near_zero(x0y0)) throw std::domain_error("transition domain violation: 1 + x.y = 0");
  if (src.chart == ChartId::P) {
    if (dst == ChartId::Std) {
      scale(out.x, C{1} / x0y0);
    } else {  // P -> Q
      scale(out.x, C{1} / x0y0);
      scale(out.y, x0y0);
    }
  } else {  // src == Q
    if (dst == ChartId::Std) {
      scale(out.y, C{1} / x0y0);
    } else {  // Q -> P
      scale(out.x, x0y0);
      scale(out.y, C{1} / x0y0);
    }
  }
  return out;
}

std::complex<double> qscalar_to_complex(const QScalar& q) { return q.to_complex(); }
QScalar qscalar_identity(const QScalar& q) { return q; }

}  // namespace

const char* chart_name(ChartId id) {
  switch (id) {
    case ChartId::Std: return "std";
    case ChartId::P: return "p";
    case ChartId::Q: return "q";
  }
  return "?";
}

ChartId chart_from_name(const std::string& name) {
  if (name == "std") return ChartId::Std;
  if (name == "p" || name == "P") return ChartId::P;
  if (name == "q" || name == "Q") return ChartId::Q;
  throw std::invalid_argument("unknown chart '" + name + "' (expected std, p or q)");
}

ChartPoint diagonal_point(const std::vector<std::complex<double>>& w) {
  ChartPoint pt;
  pt.chart = ChartId::Std;
  pt.x = w;
  pt.y.reserve(w.size());
  for (const auto& wi : w) pt.y.push_back(std::conj(wi));
  return pt;
}

ChartPointExact diagonal_point_exact(const std::vector<QScalar>& w) {
  ChartPointExact pt;
  pt.chart = ChartId::Std;
  pt.x = w;
  pt.y.reserve(w.size());
  for (const auto& wi : w) pt.y.push_back(wi.conj());
  return pt;
}

bool is_diagonal_std(const ChartPoint& pt, double tol) {
  if (pt.chart != ChartId::Std) return false;
  for (size_t i = 0; i < pt.x.size(); ++i) {
    if (std::abs(pt.y[i] - std::conj(pt.x[i])) > tol) return false;
  }
  return true;
}

std::complex<double> eval_fhat(const MultiIndex& P, const MultiIndex& Q, const ChartPoint& pt) {
  return eval_fhat_impl(P, Q, pt);
}

QScalar eval_fhat_exact(const MultiIndex& P, const MultiIndex& Q, const ChartPointExact& pt) {
  return eval_fhat_impl(P, Q, pt);
}

std::complex<double> eval_discpoly_at(const DiscPoly& a, const ChartPoint& pt) {
  return eval_discpoly_impl(a, pt, &qscalar_to_complex);
}

QScalar eval_discpoly_at_exact(const DiscPoly& a, const ChartPointExact& pt) {
  return eval_discpoly_impl(a, pt, &qscalar_identity);
}

ChartPoint chart_transition(const ChartPoint& src, ChartId dst) {
  return transition_impl(src, dst);
}

ChartPointExact chart_transition_exact(const ChartPointExact& src, ChartId dst) {
  return transition_impl(src, dst);
}

CMatrix matrix_embed(const ChartPoint& pt) {
  int len = pt.n() + 1;
  CMatrix m(static_cast<size_t>(len), std::vector<std::complex<double>>(static_cast<size_t>(len)));
  for (int mu = 0; mu < len; ++mu) {
    for (int nu = 0; nu < len; ++nu) {
      m[static_cast<size_t>(mu)][static_cast<size_t>(nu)] =
          eval_fhat(MultiIndex::unit(len, mu), MultiIndex::unit(len, nu), pt);
    }
  }
  return m;
}

QMatrixData matrix_embed_exact(const ChartPointExact& pt) {
  int len = pt.n() + 1;
  QMatrixData m(static_cast<size_t>(len), std::vector<QScalar>(static_cast<size_t>(len)));
  for (int mu = 0; mu < len; ++mu) {
    for (int nu = 0; nu < len; ++nu) {
      m[static_cast<size_t>(mu)][static_cast<size_t>(nu)] =
          eval_fhat_exact(MultiIndex::unit(len, mu), MultiIndex::unit(len, nu), pt);
    }
  }
  return m;
}

ChartPoint point_from_matrix(const CMatrix& A, double tol) {
  size_t len = A.size();
  if (len < 2) throw std::invalid_argument("matrix too small");
  for (const auto& row : A) {
    if (row.size() != len) throw std::invalid_argument("matrix must be square");
  }
  double scale = 0;
  for (const auto& row : A)
    for (const auto& v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0) throw std::domain_error("zero matrix is not an embedded point");

  // Constraint family 1: h_{mu nu} A^{mu nu} = -1.
  std::complex<double> tr = -A[0][0];
  for (size_t i = 1; i < len; ++i) tr += A[i][i];
  if (std::abs(tr + 1.0) > tol * std::max(1.0, scale)) {
    throw std::domain_error("matrix violates the trace constraint h A = -1");
  }
  // Constraint family 2: A^{mu nu} A^{rho sigma} = A^{mu sigma} A^{rho nu}.
  for (size_t mu = 0; mu < len; ++mu) {
    for (size_t nu = 0; nu < len; ++nu) {
      for (size_t rho = 0; rho < len; ++rho) {
        for (size_t sigma = 0; sigma < len; ++sigma) {
          std::complex<double> d = A[mu][nu] * A[rho][sigma] - A[mu][sigma] * A[rho][nu];
          if (std::abs(d) > tol * scale * scale) {
            throw std::domain_error("matrix violates the rank-one constraints");
          }
        }
      }
    }
  }
  // Pick the largest diagonal entry as the normalization index.
  size_t rho = 0;
  double best = 0;
  for (size_t i = 0; i < len; ++i) {
    if (std::abs(A[i][i]) > best) {
      best = std::abs(A[i][i]);
      rho = i;
    }
  }
  if (best <= tol * scale) {
    throw std::domain_error("all diagonal entries vanish; point not representable");
  }
  std::vector<std::complex<double>> p(len), q(len);
  for (size_t mu = 0; mu < len; ++mu) p[mu] = A[mu][rho];
  for (size_t nu = 0; nu < len; ++nu) q[nu] = A[rho][nu] / A[rho][rho];

  ChartPoint pt;
  auto drop0 = [](const std::vector<std::complex<double>>& v) {
    return std::vector<std::complex<double>>(v.begin() + 1, v.end());
  };
  double eps = tol * std::max(1.0, scale);
  if (std::abs(p[0]) > eps && std::abs(q[0]) > eps) {
    pt.chart = ChartId::Std;
    pt.x = drop0(p);
    pt.y = drop0(q);
    for (size_t i = 0; i < pt.x.size(); ++i) {
      pt.x[i] /= p[0];
      pt.y[i] /= q[0];
    }
  } else if (std::abs(q[0]) > eps) {
    pt.chart = ChartId::P;
    pt.x = drop0(p);
    pt.y = drop0(q);
    for (size_t i = 0; i < pt.x.size(); ++i) {
      pt.x[i] *= q[0];
      pt.y[i] /= q[0];
    }
  } else if (std::abs(p[0]) > eps) {
    pt.chart = ChartId::Q;
    pt.x = drop0(p);
    pt.y = drop0(q);
    for (size_t i = 0; i < pt.x.size(); ++i) {
      pt.x[i] /= p[0];
      pt.y[i] *= p[0];
    }
  } else {
    throw std::domain_error("point lies outside the supported charts (x0 = y0 = 0)");
  }
  return pt;
}

ChartPointExact point_from_matrix_exact(const QMatrixData& A) {
  size_t len = A.size();
  if (len < 2) throw std::invalid_argument("matrix too small");
  for (const auto& row : A) {
    if (row.size() != len) throw std::invalid_argument("matrix must be square");
  }
  QScalar tr = -A[0][0];
  for (size_t i = 1; i < len; ++i) tr += A[i][i];
  if (!(tr == QScalar(-1))) {
    throw std::domain_error("matrix violates the trace constraint h A = -1");
  }
  for (size_t mu = 0; mu < len; ++mu) {
    for (size_t nu = 0; nu < len; ++nu) {
      for (size_t rho = 0; rho < len; ++rho) {
        for (size_t sigma = 0; sigma < len; ++sigma) {
          if (!(A[mu][nu] * A[rho][sigma] == A[mu][sigma] * A[rho][nu])) {
            throw std::domain_error("matrix violates the rank-one constraints");
          }
        }
      }
    }
  }
  size_t rho = len;
  for (size_t i = 0; i < len; ++i) {
    if (!A[i][i].is_zero()) {
      rho = i;
      break;
    }
  }
  if (rho == len) throw std::domain_error("all diagonal entries vanish; point not representable");
  std::vector<QScalar> p(len), q(len);
  for (size_t mu = 0; mu < len; ++mu) p[mu] = A[mu][rho];
  for (size_t nu = 0; nu < len; ++nu) q[nu] = A[rho][nu] / A[rho][rho];

  ChartPointExact pt;
  auto drop0 = [](const std::vector<QScalar>& v) {
    return std::vector<QScalar>(v.begin() + 1, v.end());
  };
  pt.x = drop0(p);
  pt.y = drop0(q);
  if (!p[0].is_zero() && !q[0].is_zero()) {
    pt.chart = ChartId::Std;
    for (size_t i = 0; i + 1 < len; ++i) {
      pt.x[i] = pt.x[i] / p[0];
      pt.y[i] = pt.y[i] / q[0];
    }
  } else if (!q[0].is_zero()) {
    pt.chart = ChartId::P;
    for (size_t i = 0; i + 1 < len; ++i) {
      pt.x[i] = pt.x[i] * q[0];
      pt.y[i] = pt.y[i] / q[0];
    }
  } else if (!p[0].is_zero()) {
    pt.chart = ChartId::Q;
    for (size_t i = 0; i + 1 < len; ++i) {
      pt.x[i] = pt.x[i] / p[0];
      pt.y[i] = pt.y[i] * p[0];
    }
  } else {
    throw std::domain_error("point lies outside the supported charts (x0 = y0 = 0)");
  }
  return pt;
}

}  // namespace wickdisc
