#include "wickdisc/disc.hpp"

#include <cmath>
#include <stdexcept>

namespace wickdisc {

namespace {

void check_same_n(const DiscPoly& a, const DiscPoly& b) {
  if (a.n() != b.n()) throw std::invalid_argument("disc dimension mismatch");
}

void check_admissible(const HMode& mode) {
  if (!mode.admissible()) {
    throw std::domain_error("hbar = " + mode.hbar().to_string() +
                            " is a pole of the deformation (hbar = -1/(2m))");
  }
}

/// prod_{k=0}^{m-1} (1 + 2 hbar k), the scale between d_{P,Q} and f_{P,Q}
/// under the deformed reduction. Equals (2 hbar)^m (z)_m.
Coeff reduction_factor(const HMode& mode, unsigned m) {
  if (!mode.is_symbolic()) {
    QScalar r(1);
    for (unsigned k = 0; k < m; ++k) {
      r *= QScalar(1) + QScalar(Rat(2 * static_cast<long>(k))) * mode.hbar();
    }
    return Coeff(r);
  }
  if (m <= 1) return Coeff(1);
  // prod_{k=1}^{m-1} (z + k) / z^{m-1}, already in lowest terms.
  return Coeff(SymScalar(RationalFnZ(RationalFnZ::rising_range(1, m), ZPoly::monomial(m - 1))));
}

Coeff reduction_factor_inverse(const HMode& mode, unsigned m) {
  if (!mode.is_symbolic()) {
    QScalar r = reduction_factor(mode, m).numeric();
    if (r.is_zero()) {
      throw std::domain_error("reduction factor vanishes at hbar = " + mode.hbar().to_string());
    }
    return Coeff(QScalar(1) / r);
  }
  if (m <= 1) return Coeff(1);
  return Coeff(SymScalar(RationalFnZ(ZPoly::monomial(m - 1), RationalFnZ::rising_range(1, m))));
}

/// (-1)^{T_0} T! (z)_{p+s-t} / ((z)_p (z)_s) with t = |T|, in the given mode.
Coeff star_ratio(const HMode& mode, unsigned p, unsigned s, const MultiIndex& T) {
  unsigned t = static_cast<unsigned>(T.total());
  unsigned m = p + s - t;
  mpz_class tf = multi_factorial(T);
  bool neg = (T[0] % 2) != 0;
  if (!mode.is_symbolic()) {
    QScalar z0 = QScalar(1) / (QScalar(2) * mode.hbar());
    QScalar den = pochhammer(z0, p) * pochhammer(z0, s);
    if (den.is_zero()) {
      // Unreachable for hbar in H; kept for callers that bypass the gate.
      throw std::domain_error("star coefficient pole at hbar = " + mode.hbar().to_string());
    }
    QScalar r = pochhammer(z0, m) * QScalar(Rat(tf)) / den;
    return Coeff(neg ? -r : r);
  }
  // (z)_m / ((z)_p (z)_s) = prod_{i=hi}^{m-1} (z+i) / (z)_lo with hi = max(p,s),
  // lo = min(p,s); numerator and denominator share no roots.
  unsigned hi = std::max(p, s);
  unsigned lo = std::min(p, s);
  ZPoly num = RationalFnZ::rising_range(hi, m) * (neg ? mpz_class(-tf) : tf);
  ZPoly den = RationalFnZ::rising_range(0, lo);
  return Coeff(SymScalar(RationalFnZ(std::move(num), std::move(den))));
}

}  // namespace

DiscPoly DiscPoly::constant(int n, Coeff c) {
  DiscPoly p(n);
  p.add_term(MultiIndex::zero(n), MultiIndex::zero(n), c);
  return p;
}

DiscPoly DiscPoly::fundamental(int n, MultiIndex P, MultiIndex Q, Coeff c) {
  DiscPoly p(n);
  p.add_term(P, Q, c);
  return p;
}

void DiscPoly::add_term(const MultiIndex& P, const MultiIndex& Q, const Coeff& c) {
  if (P.size() != n_ || Q.size() != n_) {
    throw std::invalid_argument("disc term index length must be n");
  }
  accumulate_term(terms_, TermKey{P, Q}, c);
}

int DiscPoly::filtration_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, std::max(key.P.total(), key.Q.total()));
  return d;
}

bool DiscPoly::has_symbolic_coeff() const {
  for (const auto& [key, c] : terms_) {
    if (c.symbolic()) return true;
  }
  return false;
}

DiscPoly DiscPoly::scaled(const Coeff& c) const {
  DiscPoly out(n_);
  for (const auto& [key, v] : terms_) out.add_term(key.P, key.Q, v * c);
  return out;
}

DiscPoly operator+(const DiscPoly& a, const DiscPoly& b) {
  check_same_n(a, b);
  DiscPoly out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.P, key.Q, c);
  return out;
}

DiscPoly operator-(const DiscPoly& a, const DiscPoly& b) {
  check_same_n(a, b);
  DiscPoly out = a;
  for (const auto& [key, c] : b.terms()) out.add_term(key.P, key.Q, -c);
  return out;
}

std::pair<MultiIndex, MultiIndex> fundamental_key(const MultiIndex& P, const MultiIndex& Q) {
  int dp = P.total(), dq = Q.total();
  return {P.prepend(std::max(dq - dp, 0)), Q.prepend(std::max(dp - dq, 0))};
}

DiscPoly from_fpq(int n, const MultiIndex& P, const MultiIndex& Q, const Coeff& c) {
  if (P.size() != n + 1 || Q.size() != n + 1) {
    throw std::invalid_argument("from_fpq expects ambient indices of length n+1");
  }
  if (P.total() != Q.total()) {
    throw std::domain_error("f_{P,Q} requires |P| = |Q| (U(1)-invariance)");
  }
  DiscPoly out(n);
  if (c.is_zero()) return out;
  int m = std::min(P[0], Q[0]);
  MultiIndex Pp = P.drop_front(), Qp = Q.drop_front();
  for (int k = 0; k <= m; ++k) {
    mpz_class outer = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    for (const MultiIndex& T : indices_with_total(n, k)) {
      // C(m,|T|) |T|!/T!
      mpz_class w = outer * factorial(static_cast<unsigned>(k)) / multi_factorial(T);
      out.add_term(Pp + T, Qp + T, c * Coeff(QScalar(Rat(w))));
    }
  }
  return out;
}

namespace {

/// Mixed-sign case of the pointwise product: |P| >= |Q| and |R| <= |S|.
void mul_mixed(DiscPoly& out, const MultiIndex& P, const MultiIndex& Q, const MultiIndex& R,
               const MultiIndex& S, const Coeff& c) {
  int n = P.size();
  int m = std::min(S.total() - R.total(), P.total() - Q.total());
  for (int k = 0; k <= m; ++k) {
    mpz_class outer = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
    for (const MultiIndex& T : indices_with_total(n, k)) {
      mpz_class w = outer * factorial(static_cast<unsigned>(k)) / multi_factorial(T);
      out.add_term(P + R + T, Q + S + T, c * Coeff(QScalar(Rat(w))));
    }
  }
}

}  // namespace

DiscPoly mul_disc(const DiscPoly& a, const DiscPoly& b) {
  check_same_n(a, b);
  DiscPoly out(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    int dp = ka.P.total(), dq = ka.Q.total();
    for (const auto& [kb, cb] : b.terms()) {
      int dr = kb.P.total(), ds = kb.Q.total();
      Coeff c = ca * cb;
      if ((dp >= dq && dr >= ds) || (dp <= dq && dr <= ds)) {
        out.add_term(ka.P + kb.P, ka.Q + kb.Q, c);
      } else if (dp >= dq) {
        mul_mixed(out, ka.P, ka.Q, kb.P, kb.Q, c);
      } else {
        mul_mixed(out, kb.P, kb.Q, ka.P, ka.Q, c);
      }
    }
  }
  return out;
}

DiscPoly star(const DiscPoly& a, const DiscPoly& b, const HMode& mode) {
  check_same_n(a, b);
  check_admissible(mode);
  if (mode.is_zero_hbar()) return mul_disc(a, b);
  DiscPoly out(a.n());
  for (const auto& [ka, ca] : a.terms()) {
    auto [P, Q] = fundamental_key(ka.P, ka.Q);
    unsigned p = static_cast<unsigned>(P.total());
    for (const auto& [kb, cb] : b.terms()) {
      auto [R, S] = fundamental_key(kb.P, kb.Q);
      unsigned s = static_cast<unsigned>(S.total());
      Coeff cab = ca * cb;
      for (const MultiIndex& T : indices_in_box(cmin(P, S))) {
        Coeff w = star_ratio(mode, p, s, T);
        mpz_class bins = multi_binom(P, T) * multi_binom(S, T);
        out = out + from_fpq(a.n(), P + R - T, Q + S - T,
                             cab * w * Coeff(QScalar(Rat(bins))));
      }
    }
  }
  return out;
}

DiscPoly reduce(const AmbientPoly& a, const HMode& mode) {
  check_admissible(mode);
  if (!a.is_u1_invariant()) {
    throw std::domain_error("reduction requires a U(1)-invariant polynomial (|P| = |Q|)");
  }
  DiscPoly out(a.n());
  for (const auto& [key, c] : a.terms()) {
    Coeff factor = reduction_factor(mode, static_cast<unsigned>(key.P.total()));
    out = out + from_fpq(a.n(), key.P, key.Q, c * factor);
  }
  return out;
}

AmbientPoly unreduce(const DiscPoly& a, const HMode& mode) {
  check_admissible(mode);
  AmbientPoly out(a.n());
  for (const auto& [key, c] : a.terms()) {
    auto [P, Q] = fundamental_key(key.P, key.Q);
    Coeff inv = reduction_factor_inverse(mode, static_cast<unsigned>(P.total()));
    out.add_term(P, Q, c * inv);
  }
  return out;
}

DiscPoly involution(const DiscPoly& a) {
  DiscPoly out(a.n());
  for (const auto& [key, c] : a.terms()) out.add_term(key.Q, key.P, c.conj());
  return out;
}

DiscPoly poisson_disc(const DiscPoly& a, const DiscPoly& b) {
  check_same_n(a, b);
  if (a.has_symbolic_coeff() || b.has_symbolic_coeff()) {
    throw std::invalid_argument("poisson_disc requires hbar-independent coefficients");
  }
  HMode sym = HMode::symbolic();
  DiscPoly comm = star(a, b, sym) - star(b, a, sym);
  DiscPoly out(a.n());
  const QScalar i = QScalar::i();
  for (const auto& [key, c] : comm.terms()) {
    std::vector<QScalar> t = (Coeff(i) * c).taylor_hbar0(1);
    if (!t[0].is_zero()) {
      throw std::logic_error("star commutator does not vanish at hbar = 0");
    }
    out.add_term(key.P, key.Q, Coeff(t[1]));
  }
  return out;
}

std::complex<double> eval_disc(const DiscPoly& a, const std::vector<std::complex<double>>& w) {
  if (static_cast<int>(w.size()) != a.n()) throw std::invalid_argument("point dimension mismatch");
  std::complex<double> ww(0);
  for (const auto& wi : w) ww += wi * std::conj(wi);
  std::complex<double> denom_base = 1.0 - ww;
  if (std::abs(denom_base) < 1e-14) {
    throw std::domain_error("evaluation on the singular locus w.conj(w) = 1");
  }
  std::complex<double> s(0);
  for (const auto& [key, c] : a.terms()) {
    std::complex<double> t = c.numeric().to_complex();
    for (int j = 0; j < a.n(); ++j) {
      for (int k = 0; k < key.P[j]; ++k) t *= w[static_cast<size_t>(j)];
      for (int k = 0; k < key.Q[j]; ++k) t *= std::conj(w[static_cast<size_t>(j)]);
    }
    int m = std::max(key.P.total(), key.Q.total());
    for (int k = 0; k < m; ++k) t /= denom_base;
    s += t;
  }
  return s;
}

QScalar eval_disc_exact(const DiscPoly& a, const std::vector<QScalar>& w) {
  if (static_cast<int>(w.size()) != a.n()) throw std::invalid_argument("point dimension mismatch");
  QScalar ww;
  for (const auto& wi : w) ww += wi * wi.conj();
  QScalar denom_base = QScalar(1) - ww;
  if (denom_base.is_zero()) {
    throw std::domain_error("evaluation on the singular locus w.conj(w) = 1");
  }
  QScalar s;
  for (const auto& [key, c] : a.terms()) {
    QScalar t = c.numeric();
    for (int j = 0; j < a.n(); ++j) {
      t *= qpow(w[static_cast<size_t>(j)], static_cast<unsigned>(key.P[j]));
      t *= qpow(w[static_cast<size_t>(j)].conj(), static_cast<unsigned>(key.Q[j]));
    }
    int m = std::max(key.P.total(), key.Q.total());
    s += t / qpow(denom_base, static_cast<unsigned>(m));
  }
  return s;
}

double norm_disc(const DiscPoly& a, double rho) {
  if (rho <= 0) throw std::invalid_argument("norm radius must be positive");
  double s = 0;
  for (const auto& [key, c] : a.terms()) {
    s += c.numeric().abs() * std::pow(rho, key.P.total() + key.Q.total());
  }
  return s;
}

DiscPoly act_mobius(const GroupElement& U, const DiscPoly& a) {
  if (U.n() != a.n()) throw std::invalid_argument("group element dimension mismatch");
  if (!U.is_su1n()) throw std::domain_error("Moebius action requires U in SU(1,n)");
  HMode zero = HMode::fixed(Rat(0));
  return reduce(act_ambient(U, unreduce(a, zero)), zero);
}

DiscPoly moment_disc(const LieElement& u) {
  if (!u.is_su1n()) throw std::domain_error("disc moment map requires u in su(1,n)");
  return reduce(moment_map(u), HMode::fixed(Rat(0)));
}

DiscPoly sigma_pullback(const DiscPoly& a) {
  if (a.n() != 1) throw std::invalid_argument("sigma_pullback is defined for n = 1 only");
  DiscPoly out(1);
  for (const auto& [key, c] : a.terms()) {
    auto [P, Q] = fundamental_key(key.P, key.Q);
    bool neg = ((P[1] + Q[0]) % 2) != 0;
    MultiIndex Ps{P[1], P[0]}, Qs{Q[1], Q[0]};
    out = out + from_fpq(1, Ps, Qs, neg ? -c : c);
  }
  return out;
}

}  // namespace wickdisc
