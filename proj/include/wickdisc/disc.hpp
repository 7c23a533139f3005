#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "wickdisc/ambient.hpp"

namespace wickdisc {

/// Sparse element of P(D_n) in the fundamental basis: the key (P, Q), with P
/// and Q of length n, denotes f_{r,P,Q} with chart form
/// w^P conj(w)^Q / (1 - w.conj(w))^{max(|P|,|Q|)}.
class DiscPoly {
 public:
  explicit DiscPoly(int n) : n_(n) {}

  static DiscPoly constant(int n, Coeff c);
  static DiscPoly fundamental(int n, MultiIndex P, MultiIndex Q, Coeff c = Coeff(1));

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const MultiIndex& P, const MultiIndex& Q, const Coeff& c);

  /// Max over the support of max(|P|, |Q|); -1 for zero.
  int filtration_degree() const;
  bool has_symbolic_coeff() const;

  DiscPoly scaled(const Coeff& c) const;
  bool operator==(const DiscPoly&) const = default;

 private:
  int n_;
  TermMap terms_;
};

DiscPoly operator+(const DiscPoly& a, const DiscPoly& b);
DiscPoly operator-(const DiscPoly& a, const DiscPoly& b);

/// Lift a fundamental key to the monomial key on C^{1+n}:
/// (P,Q) -> ((max(|Q|-|P|,0), P), (max(|P|-|Q|,0), Q)), so f_{r,P,Q} = f_{lift}.
std::pair<MultiIndex, MultiIndex> fundamental_key(const MultiIndex& P, const MultiIndex& Q);

/// Expansion of the monomial f_{P,Q} (P, Q of length n+1, |P| = |Q|) into
/// fundamental monomials:
/// f_{P,Q} = sum_{|T| <= min(P_0,Q_0)} C(min(P_0,Q_0), |T|) (|T|!/T!) f_{r,P'+T,Q'+T}.
DiscPoly from_fpq(int n, const MultiIndex& P, const MultiIndex& Q, const Coeff& c = Coeff(1));

/// Commutative pointwise product on the fundamental basis; same-sign cases
/// multiply additively, the mixed case expands with the binomial sum.
DiscPoly mul_disc(const DiscPoly& a, const DiscPoly& b);

/// The reduced star product. Fixed hbar must avoid the poles -1/(2m); hbar = 0
/// is admitted as an extension and is defined as the pointwise product.
DiscPoly star(const DiscPoly& a, const DiscPoly& b, const HMode& mode);

/// Deformed reduction: d_{P,Q} -> prod_{k<|P|} (1 + 2 hbar k) f_{P,Q}, expanded
/// into the fundamental basis. Input must be U(1)-invariant.
DiscPoly reduce(const AmbientPoly& a, const HMode& mode);

/// Right inverse of the reduction map:
/// f_{r,P,Q} -> d_{lift} / prod_{k<max(|P|,|Q|)} (1 + 2 hbar k).
AmbientPoly unreduce(const DiscPoly& a, const HMode& mode);

/// Pointwise complex conjugation: f_{r,P,Q} -> f_{r,Q,P}, coefficients
/// conjugated (z treated as real in symbolic mode).
DiscPoly involution(const DiscPoly& a);

/// Exact first-order term in hbar of i (a * b - b * a), computed symbolically.
/// Inputs must have hbar-independent coefficients.
DiscPoly poisson_disc(const DiscPoly& a, const DiscPoly& b);

/// sum a_{P,Q} w^P conj(w)^Q / (1 - w.conj(w))^{max(|P|,|Q|)}.
std::complex<double> eval_disc(const DiscPoly& a, const std::vector<std::complex<double>>& w);
QScalar eval_disc_exact(const DiscPoly& a, const std::vector<QScalar>& w);

/// sum |a_{P,Q}| rho^{|P+Q|}. Numeric coefficients only; floating point with
/// per-term relative rounding well below 1e-12.
double norm_disc(const DiscPoly& a, double rho);

/// Induced Moebius action: reduce(act_ambient(U, unreduce(a))) at hbar = 0;
/// requires U in SU(1,n).
DiscPoly act_mobius(const GroupElement& U, const DiscPoly& a);

/// Reduced moment map for u in su(1,n).
DiscPoly moment_disc(const LieElement& u);

/// Pullback of the holomorphic involution of the doubled disc (n = 1 only):
/// on lifted keys, f_{(P0,P1),(Q0,Q1)} -> (-1)^{P1+Q0} f_{(P1,P0),(Q1,Q0)}.
DiscPoly sigma_pullback(const DiscPoly& a);

}  // namespace wickdisc
