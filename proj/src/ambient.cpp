#include "wickdisc/ambient.hpp"

#include <cmath>
#include <stdexcept>

namespace wickdisc {

namespace {

void check_same_n(const AmbientPoly& a, const AmbientPoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ambient dimension mismatch");
}

int h_sign(int mu) { return mu == 0 ? -1 : 1; }

/// (-1)^{T_0} (2 hbar)^{|T|} T! in the requested mode.
Coeff wick_weight(const HMode& mode, const MultiIndex& T) {
  unsigned t = static_cast<unsigned>(T.total());
  mpz_class tf = multi_factorial(T);
  bool neg = (T[0] % 2) != 0;
  if (!mode.is_symbolic()) {
    QScalar w = qpow(QScalar(2) * mode.hbar(), t) * QScalar(Rat(tf));
    return Coeff(neg ? -w : w);
  }
  // (2 hbar)^{|T|} = z^{-|T|}
  ZPoly num = ZPoly::constant(neg ? -tf : tf);
  return Coeff(SymScalar(RationalFnZ(std::move(num), ZPoly::monomial(t))));
}

}  // namespace

AmbientPoly AmbientPoly::constant(int n, Coeff c) {
  AmbientPoly p(n);
  p.add_term(MultiIndex::zero(n + 1), MultiIndex::zero(n + 1), c);
  return p;
}

AmbientPoly AmbientPoly::monomial(int n, MultiIndex P, MultiIndex Q, Coeff c) {
  AmbientPoly p(n);
  p.add_term(P, Q, c);
  return p;
}

void AmbientPoly::add_term(const MultiIndex& P, const MultiIndex& Q, const Coeff& c) {
  if (P.size() != index_len() || Q.size() != index_len()) {
    throw std::invalid_argument("ambient term index length must be n+1");
  }
  accumulate_term(terms_, TermKey{P, Q}, c);
}

bool AmbientPoly::is_u1_invariant() const {
  for (const auto& [key, c] : terms_) {
    if (key.P.total() != key.Q.total()) return false;
  }
  return true;
}

int AmbientPoly::degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.P.total() + key.Q.total());
  return d;
}

bool AmbientPoly::has_symbolic_coeff() const {
  for (const auto& [key, c] : terms_) {
    if (c.symbolic()) return true;
  }
  return false;
}

AmbientPoly AmbientPoly::scaled(const Coeff& c) const {
  AmbientPoly out(n_);
  for (const auto& [key, v] : terms_) out.add_term(key.P, key.Q, v * c);
  return out;
}

AmbientPoly operator+(const AmbientPoly& a, const AmbientPoly& b) {
  check_same_n(a, b);
  AmbientPoly out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.P, key.Q, c);
  return out;
}

AmbientPoly operator-(const AmbientPoly& a, const AmbientPoly& b) {
  check_same_n(a, b);
  AmbientPoly out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.P, key.Q, -c);
  return out;
}

AmbientPoly g_element(int n) {
  AmbientPoly g(n);
  for (int mu = 0; mu <= n; ++mu) {
    MultiIndex e = MultiIndex::unit(n + 1, mu);
    g.add_term(e, e, Coeff(QScalar(Rat(h_sign(mu)))));
  }
  return g;
}

AmbientPoly wick_star(const AmbientPoly& a, const AmbientPoly& b, const HMode& mode) {
  check_same_n(a, b);
  AmbientPoly out(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Coeff cab = ca * cb;
      for (const MultiIndex& T : indices_in_box(cmin(ka.P, kb.Q))) {
        Coeff w = wick_weight(mode, T);
        if (w.is_zero()) continue;  // hbar = 0 and |T| > 0
        mpz_class binp = multi_binom(ka.P, T);
        mpz_class bins = multi_binom(kb.Q, T);
        Coeff c = cab * w * Coeff(QScalar(Rat(binp * bins)));
        out.add_term(ka.P + kb.P - T, ka.Q + kb.Q - T, c);
      }
    }
  }
  return out;
}

AmbientPoly mul_ambient(const AmbientPoly& a, const AmbientPoly& b) {
  check_same_n(a, b);
  AmbientPoly out(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add_term(ka.P + kb.P, ka.Q + kb.Q, ca * cb);
    }
  }
  return out;
}

AmbientPoly poisson_ambient(const AmbientPoly& a, const AmbientPoly& b) {
  check_same_n(a, b);
  AmbientPoly out(a.n());
  const Coeff two_i(QScalar(Rat(0), Rat(2)));
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      Coeff cab = ca * cb * two_i;
      for (int mu = 0; mu <= a.n(); ++mu) {
        // 2i h^{mu mu} (P_mu S_mu - R_mu Q_mu) d_{P+R-E_mu, Q+S-E_mu}
        long w = static_cast<long>(ka.P[mu]) * kb.Q[mu] -
                 static_cast<long>(kb.P[mu]) * ka.Q[mu];
        if (w == 0) continue;
        MultiIndex e = MultiIndex::unit(a.n() + 1, mu);
        out.add_term(ka.P + kb.P - e, ka.Q + kb.Q - e,
                     cab * Coeff(QScalar(Rat(h_sign(mu) * w))));
      }
    }
  }
  return out;
}

AmbientPoly involution_ambient(const AmbientPoly& a) {
  AmbientPoly out(a.n());
  for (const auto& [key, c] : a.terms()) out.add_term(key.Q, key.P, c.conj());
  return out;
}

QMatrix::QMatrix(int dim)
    : e_(static_cast<size_t>(dim), std::vector<QScalar>(static_cast<size_t>(dim))) {
  if (dim <= 0) throw std::invalid_argument("matrix dimension must be positive");
}

QMatrix::QMatrix(std::vector<std::vector<QScalar>> entries) : e_(std::move(entries)) {
  if (e_.empty()) throw std::invalid_argument("empty matrix");
  for (const auto& row : e_) {
    if (row.size() != e_.size()) throw std::invalid_argument("matrix must be square");
  }
}

QMatrix QMatrix::identity(int dim) {
  QMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = QScalar(1);
  return m;
}

QMatrix QMatrix::zero(int dim) { return QMatrix(dim); }

QMatrix QMatrix::conj_transpose() const {
  QMatrix m(dim());
  for (int r = 0; r < dim(); ++r) {
    for (int c = 0; c < dim(); ++c) m.at(c, r) = at(r, c).conj();
  }
  return m;
}

QScalar QMatrix::trace() const {
  QScalar t;
  for (int i = 0; i < dim(); ++i) t += at(i, i);
  return t;
}

QScalar QMatrix::det() const {
  // Cofactor expansion; matrices here are at most (n+1) x (n+1) with small n.
  if (dim() == 1) return at(0, 0);
  QScalar d;
  for (int c = 0; c < dim(); ++c) {
    if (at(0, c).is_zero()) continue;
    QMatrix minor(dim() - 1);
    for (int r = 1; r < dim(); ++r) {
      int cc = 0;
      for (int k = 0; k < dim(); ++k) {
        if (k == c) continue;
        minor.at(r - 1, cc++) = at(r, k);
      }
    }
    QScalar term = at(0, c) * minor.det();
    d = (c % 2 == 0) ? d + term : d - term;
  }
  return d;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      QScalar s;
      for (int k = 0; k < a.dim(); ++k) s += a.at(r, k) * b.at(k, c);
      m.at(r, c) = s;
    }
  }
  return m;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m.at(r, c) = a.at(r, c) - b.at(r, c);
  return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  QMatrix m(a.dim());
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) m.at(r, c) = a.at(r, c) + b.at(r, c);
  return m;
}

namespace {

QMatrix h_matrix(int dim) {
  QMatrix h(dim);
  for (int i = 0; i < dim; ++i) h.at(i, i) = QScalar(Rat(i == 0 ? -1 : 1));
  return h;
}

}  // namespace

bool LieElement::is_u1n() const {
  QMatrix h = h_matrix(u.dim());
  return u.conj_transpose() * h == QMatrix::zero(u.dim()) - (h * u);
}

bool LieElement::is_su1n() const { return is_u1n() && u.trace().is_zero(); }

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
  return LieElement(a.u * b.u - b.u * a.u);
}

bool GroupElement::is_u1n() const {
  QMatrix h = h_matrix(U.dim());
  return U.conj_transpose() * h * U == h;
}

bool GroupElement::is_su1n() const { return is_u1n() && U.det() == QScalar(1); }

AmbientPoly moment_map(const LieElement& u) {
  if (!u.is_u1n()) throw std::domain_error("moment map argument is not in u(1,n)");
  int n = u.n();
  AmbientPoly out(n);
  // (1/2i) h_{nu nu} u^nu_rho d_{E_rho, E_nu}
  const QScalar half_over_i = QScalar(1) / QScalar(Rat(0), Rat(2));
  for (int nu = 0; nu <= n; ++nu) {
    for (int rho = 0; rho <= n; ++rho) {
      QScalar c = half_over_i * QScalar(Rat(h_sign(nu))) * u.u.at(nu, rho);
      if (c.is_zero()) continue;
      out.add_term(MultiIndex::unit(n + 1, rho), MultiIndex::unit(n + 1, nu), Coeff(c));
    }
  }
  return out;
}

double norm_ambient(const AmbientPoly& a, double rho) {
  if (rho <= 0) throw std::invalid_argument("norm radius must be positive");
  double s = 0;
  for (const auto& [key, c] : a.terms()) {
    int k = key.P.total() + key.Q.total();
    double fac = std::sqrt(factorial(static_cast<unsigned>(k)).get_d());
    s += c.numeric().abs() * std::pow(rho, k) * fac;
  }
  return s;
}

AmbientPoly act_ambient(const GroupElement& U, const AmbientPoly& a) {
  if (U.n() != a.n()) throw std::invalid_argument("group element dimension mismatch");
  if (!U.is_u1n()) throw std::domain_error("group element is not in U(1,n)");
  int n = a.n();
  int len = n + 1;
  // Substituted linear forms: z^mu -> sum_nu U^mu_nu z^nu and the conjugate.
  std::vector<AmbientPoly> zsub, zbsub;
  for (int mu = 0; mu < len; ++mu) {
    AmbientPoly f(n), fb(n);
    for (int nu = 0; nu < len; ++nu) {
      f.add_term(MultiIndex::unit(len, nu), MultiIndex::zero(len), Coeff(U.U.at(mu, nu)));
      fb.add_term(MultiIndex::zero(len), MultiIndex::unit(len, nu),
                  Coeff(U.U.at(mu, nu).conj()));
    }
    zsub.push_back(std::move(f));
    zbsub.push_back(std::move(fb));
  }
  AmbientPoly out(n);
  for (const auto& [key, c] : a.terms()) {
    AmbientPoly term = AmbientPoly::constant(n, c);
    for (int mu = 0; mu < len; ++mu) {
      for (int k = 0; k < key.P[mu]; ++k) term = mul_ambient(term, zsub[static_cast<size_t>(mu)]);
      for (int k = 0; k < key.Q[mu]; ++k) term = mul_ambient(term, zbsub[static_cast<size_t>(mu)]);
    }
    out = out + term;
  }
  return out;
}

}  // namespace wickdisc
