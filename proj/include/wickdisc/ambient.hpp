#pragma once

#include <vector>

#include "wickdisc/common.hpp"

namespace wickdisc {

/// Sparse polynomial on C^{1+n} in the monomial basis d_{P,Q} = z^P conj(z)^Q,
/// with P, Q of length n+1. The pre-reduction algebra.
class AmbientPoly {
 public:
  explicit AmbientPoly(int n) : n_(n) {}

  static AmbientPoly constant(int n, Coeff c);
  static AmbientPoly monomial(int n, MultiIndex P, MultiIndex Q, Coeff c = Coeff(1));

  int n() const { return n_; }
  int index_len() const { return n_ + 1; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& P, const MultiIndex& Q, const Coeff& c);

  /// True iff every stored term has |P| = |Q| (U(1)-invariance).
  bool is_u1_invariant() const;
  /// Max |P| + |Q| over the support; -1 for zero.
  int degree() const;
  bool has_symbolic_coeff() const;

  AmbientPoly scaled(const Coeff& c) const;
  bool operator==(const AmbientPoly&) const = default;

 private:
  int n_;
  TermMap terms_;
};

AmbientPoly operator+(const AmbientPoly& a, const AmbientPoly& b);
AmbientPoly operator-(const AmbientPoly& a, const AmbientPoly& b);

/// g = -d_{E0,E0} + sum_i d_{Ei,Ei}; the constraint function of the level set.
AmbientPoly g_element(int n);

/// Wick star product on monomials:
/// d_{P,Q} * d_{R,S} = sum_{T <= min(P,S)} (-1)^{T_0} (2 hbar)^{|T|} T!
///                     C(P,T) C(S,T) d_{P+R-T, Q+S-T}.
/// Symbolic mode keeps (2 hbar)^{|T|} as z^{-|T|}.
AmbientPoly wick_star(const AmbientPoly& a, const AmbientPoly& b, const HMode& mode);

/// Commutative pointwise product (the hbar = 0 specialization of the above).
AmbientPoly mul_ambient(const AmbientPoly& a, const AmbientPoly& b);

/// {a,b} = 2i h^{mu nu} (da/dz^mu db/dzbar^nu - db/dz^mu da/dzbar^nu),
/// h = diag(-1, 1, ..., 1), by exact term differentiation.
AmbientPoly poisson_ambient(const AmbientPoly& a, const AmbientPoly& b);

/// d_{P,Q} -> d_{Q,P} with conjugated coefficients (pointwise conjugation).
AmbientPoly involution_ambient(const AmbientPoly& a);

/// Square matrix of exact complex entries; shared by Lie-algebra and group
/// elements acting on C^{1+n}.
class QMatrix {
 public:
  explicit QMatrix(int dim);
  QMatrix(std::vector<std::vector<QScalar>> entries);

  static QMatrix identity(int dim);
  static QMatrix zero(int dim);

  int dim() const { return static_cast<int>(e_.size()); }
  const QScalar& at(int r, int c) const { return e_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  QScalar& at(int r, int c) { return e_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }

  QMatrix conj_transpose() const;
  QScalar trace() const;
  QScalar det() const;

  bool operator==(const QMatrix&) const = default;

 private:
  std::vector<std::vector<QScalar>> e_;
};

QMatrix operator*(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
QMatrix operator+(const QMatrix& a, const QMatrix& b);

/// u in u(1,n): u^dagger h = -h u with h = diag(-1, 1, ..., 1).
struct LieElement {
  QMatrix u;
  explicit LieElement(QMatrix m) : u(std::move(m)) {}
  int n() const { return u.dim() - 1; }
  bool is_u1n() const;
  bool is_su1n() const;  // additionally trace u = 0
};

LieElement lie_bracket(const LieElement& a, const LieElement& b);

/// U in U(1,n): U^dagger h U = h.
struct GroupElement {
  QMatrix U;
  explicit GroupElement(QMatrix m) : U(std::move(m)) {}
  int n() const { return U.dim() - 1; }
  bool is_u1n() const;
  bool is_su1n() const;  // additionally det U = 1
};

/// J(u) = (1/2i) h_{mu nu} u^mu_rho d_{E_rho, E_nu}; throws unless u in u(1,n).
AmbientPoly moment_map(const LieElement& u);

/// sum |a_{P,Q}| rho^{|P+Q|} sqrt(|P+Q|!). Numeric coefficients only; floating
/// point with per-term relative rounding well below 1e-12.
double norm_ambient(const AmbientPoly& a, double rho);

/// Pullback a -> a o (r -> U r), expanded multinomially; exact.
AmbientPoly act_ambient(const GroupElement& U, const AmbientPoly& a);

}  // namespace wickdisc
