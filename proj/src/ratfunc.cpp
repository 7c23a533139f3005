#include "wickdisc/ratfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wickdisc {

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

ZPoly ZPoly::constant(mpz_class c) {
  ZPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

ZPoly ZPoly::monomial(unsigned deg, mpz_class c) {
  ZPoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, mpz_class(0));
    p.c_[deg] = std::move(c);
  }
  return p;
}

ZPoly ZPoly::linear(mpz_class a0, mpz_class a1) {
  return ZPoly(std::vector<mpz_class>{std::move(a0), std::move(a1)});
}

mpz_class ZPoly::coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= c_.size()) return 0;
  return c_[static_cast<size_t>(k)];
}

const mpz_class& ZPoly::lead() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

void ZPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZPoly ZPoly::derivative() const {
  if (c_.size() <= 1) return ZPoly();
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * mpz_class(static_cast<long>(k));
  return ZPoly(std::move(d));
}

mpz_class ZPoly::content() const {
  mpz_class g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly ZPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class g = content();
  std::vector<mpz_class> d(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) d[k] = c_[k] / g;
  return ZPoly(std::move(d));
}

ZPoly ZPoly::shifted_arg(const mpz_class& a) const {
  // p(z + a), accumulating powers of (z + a).
  ZPoly result;
  ZPoly power = ZPoly::constant(1);
  ZPoly base = ZPoly::linear(a, 1);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) result = result + power * c_[k];
    if (k + 1 < c_.size()) power = power * base;
  }
  return result;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return ZPoly();
  if (degree() < d.degree()) throw std::domain_error("inexact polynomial division");
  // Long division over Q, then check integrality and zero remainder.
  std::vector<Rat> rem(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) rem[k] = Rat(c_[k]);
  int dd = d.degree();
  Rat dl{d.lead()};
  int qd = degree() - dd;
  std::vector<Rat> q(static_cast<size_t>(qd) + 1);
  for (int k = qd; k >= 0; --k) {
    Rat t = rem[static_cast<size_t>(k + dd)] / dl;
    q[static_cast<size_t>(k)] = t;
    if (t != 0) {
      for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= t * Rat(d.coeff(j));
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("inexact polynomial division");
  }
  std::vector<mpz_class> out(q.size());
  for (size_t k = 0; k < q.size(); ++k) {
    if (q[k].get_den() != 1) throw std::domain_error("inexact polynomial division");
    out[k] = q[k].get_num();
  }
  return ZPoly(std::move(out));
}

std::string ZPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    const mpz_class& c = c_[k];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    mpz_class a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  std::vector<mpz_class> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (size_t k = 0; k < c.size(); ++k)
    c[k] = a.coeff(static_cast<int>(k)) - b.coeff(static_cast<int>(k));
  return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a) {
  std::vector<mpz_class> c(a.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = -a.coeffs()[k];
  return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  std::vector<mpz_class> c(a.coeffs().size() + b.coeffs().size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const mpz_class& s) {
  if (s == 0) return ZPoly();
  std::vector<mpz_class> c(a.coeffs().size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs()[k] * s;
  return ZPoly(std::move(c));
}

namespace {

// Pseudo-remainder: repeatedly cancel the leading term of r against b.
ZPoly pseudo_rem(ZPoly r, const ZPoly& b) {
  const mpz_class& bl = b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    ZPoly zk_b = ZPoly::monomial(static_cast<unsigned>(k)) * b;
    r = r * bl - zk_b * r.lead();
  }
  return r;
}

}  // namespace

ZPoly poly_gcd(const ZPoly& a, const ZPoly& b) {
  ZPoly x = a.primitive();
  ZPoly y = b.primitive();
  if (x.is_zero()) std::swap(x, y);
  if (y.is_zero()) {
    if (x.is_zero()) return ZPoly();
    return x.lead() < 0 ? -x : x;
  }
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    ZPoly r = pseudo_rem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.lead() < 0 ? -x : x;
}

RationalFnZ::RationalFnZ(const Rat& value)
    : num_(ZPoly::constant(value.get_num())), den_(ZPoly::constant(value.get_den())) {}

RationalFnZ::RationalFnZ(ZPoly num) : num_(std::move(num)), den_(ZPoly::constant(1)) {}

RationalFnZ::RationalFnZ(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RationalFnZ::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly::constant(1);
    return;
  }
  ZPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
  if (cg > 1) {
    num_ = num_.divexact(ZPoly::constant(cg));
    den_ = den_.divexact(ZPoly::constant(cg));
  }
  if (den_.lead() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

ZPoly RationalFnZ::rising_range(unsigned lo, unsigned hi) {
  ZPoly p = ZPoly::constant(1);
  for (unsigned k = lo; k < hi; ++k) p = p * ZPoly::linear(static_cast<long>(k), 1);
  return p;
}

RationalFnZ RationalFnZ::pochhammer_poly(unsigned m) {
  return RationalFnZ(rising_range(0, m));
}

Rat RationalFnZ::as_rational() const {
  if (!is_constant()) throw std::invalid_argument("rational function is not constant");
  if (num_.is_zero()) return Rat(0);
  return make_rat(num_.coeff(0), den_.coeff(0));
}

Rat RationalFnZ::eval_q(const Rat& z0) const {
  Rat d = den_.eval(z0);
  if (d == 0) throw std::domain_error("rational function pole at z = " + rat_to_string(z0));
  return num_.eval(z0) / d;
}

QScalar RationalFnZ::eval_q(const QScalar& z0) const {
  QScalar d = den_.eval(z0);
  if (d.is_zero()) throw std::domain_error("rational function pole at z = " + z0.to_string());
  return num_.eval(z0) / d;
}

std::string RationalFnZ::to_string() const {
  if (den_.is_constant() && den_.coeff(0) == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFnZ operator+(const RationalFnZ& a, const RationalFnZ& b) {
  return RationalFnZ(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFnZ operator-(const RationalFnZ& a, const RationalFnZ& b) {
  return RationalFnZ(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RationalFnZ operator-(const RationalFnZ& a) {
  if (a.is_zero()) return a;
  return RationalFnZ(-a.num(), a.den());
}

RationalFnZ operator*(const RationalFnZ& a, const RationalFnZ& b) {
  if (a.is_zero() || b.is_zero()) return RationalFnZ();
  return RationalFnZ(a.num() * b.num(), a.den() * b.den());
}

RationalFnZ operator/(const RationalFnZ& a, const RationalFnZ& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  return RationalFnZ(a.num() * b.den(), a.den() * b.num());
}

RationalFnZ rf_arith(const RationalFnZ& a, const RationalFnZ& b, RfOp op) {
  switch (op) {
    case RfOp::Add: return a + b;
    case RfOp::Sub: return a - b;
    case RfOp::Mul: return a * b;
    case RfOp::Div: return a / b;
  }
  throw std::invalid_argument("bad RfOp");
}

QScalar pochhammer(const QScalar& z0, unsigned m) {
  QScalar r(1);
  for (unsigned k = 0; k < m; ++k) r *= z0 + QScalar(Rat(static_cast<long>(k)));
  return r;
}

namespace {

// Laurent coefficient of u^{-1} of num(u - m) / (u^r * rest(u - m)) at u = 0,
// i.e. the coefficient of u^{r-1} in the Taylor series of num_s / rest_s.
Rat laurent_residue(const ZPoly& num, const ZPoly& rest, unsigned m, unsigned r) {
  mpz_class shift = -static_cast<long>(m);
  ZPoly num_s = num.shifted_arg(shift);
  ZPoly rest_s = rest.shifted_arg(shift);
  // rest(-m) != 0 by construction.
  std::vector<Rat> series(r, Rat(0));  // Taylor coefficients of num_s / rest_s
  Rat d0{rest_s.coeff(0)};
  for (unsigned k = 0; k < r; ++k) {
    Rat acc{num_s.coeff(static_cast<int>(k))};
    for (unsigned j = 0; j < k; ++j) acc -= series[j] * Rat(rest_s.coeff(static_cast<int>(k - j)));
    series[k] = acc / d0;
  }
  return series[r - 1];
}

}  // namespace

HbarPoleReport poles_in_hbar(const RationalFnZ& f) {
  HbarPoleReport report;
  ZPoly work = f.den().primitive();
  if (work.is_zero() || work.is_constant()) return report;

  // Root z = 0: pole at hbar -> infinity, reported separately.
  while (!work.is_zero() && work.coeff(0) == 0) {
    ++report.infinity_order;
    work = work.divexact(ZPoly::monomial(1));
  }

  // Integer roots z = -m, m >= 1. Any such m divides the constant term, and
  // search is capped well above the degrees star products can produce.
  struct Root {
    unsigned m;
    unsigned order;
  };
  std::vector<Root> roots;
  if (work.degree() > 0) {
    mpz_class c0 = work.coeff(0);
    const unsigned long cap = 1u << 20;
    // Cauchy bound on |roots|: 1 + max|c_k| / |lead|.
    mpz_class maxc = 0;
    for (const auto& c : work.coeffs()) {
      mpz_class a = abs(c);
      if (a > maxc) maxc = a;
    }
    mpz_class bound_z = 1 + maxc / abs(work.lead()) + 1;
    unsigned long bound =
        bound_z.fits_ulong_p() ? std::min(bound_z.get_ui(), cap) : cap;
    for (unsigned long m = 1; m <= bound && work.degree() > 0; ++m) {
      if (!mpz_divisible_ui_p(c0.get_mpz_t(), m)) continue;
      ZPoly lin = ZPoly::linear(static_cast<long>(m), 1);
      unsigned order = 0;
      while (work.degree() > 0 && work.eval(Rat(-static_cast<long>(m))) == 0) {
        work = work.divexact(lin);
        ++order;
      }
      if (order > 0) {
        roots.push_back({static_cast<unsigned>(m), order});
        if (work.degree() > 0) c0 = work.coeff(0);
      }
    }
  }
  if (work.degree() > 0) report.anomalies.push_back(work.to_string());

  for (const Root& root : roots) {
    HbarPole pole;
    pole.m = root.m;
    pole.order = root.order;
    pole.hbar_location = make_rat(-1, 2 * static_cast<long>(root.m));
    // den = (z+m)^order * rest with rest(-m) != 0.
    ZPoly power = ZPoly::constant(1);
    ZPoly lin = ZPoly::linear(static_cast<long>(root.m), 1);
    for (unsigned k = 0; k < root.order; ++k) power = power * lin;
    ZPoly rest = f.den().divexact(power);
    pole.residue_z = laurent_residue(f.num(), rest, root.m, root.order);
    if (root.order == 1) {
      // z = 1/(2 hbar): d hbar/d z at z = -m is -1/(2 m^2).
      pole.residue_hbar = pole.residue_z * make_rat(-1, 2 * static_cast<long>(root.m) *
                                                            static_cast<long>(root.m));
      pole.residue_hbar_valid = true;
    }
    report.poles.push_back(std::move(pole));
  }
  return report;
}

namespace {

// The substitution z = 1/(2 hbar) turns num/den into a quotient of
// polynomials in hbar after clearing (2 hbar)^M, M = max degree.
void hbar_form(const RationalFnZ& f, std::vector<mpz_class>& nh, std::vector<mpz_class>& dh) {
  int m = std::max(f.num().degree(), f.den().degree());
  nh.assign(static_cast<size_t>(m) + 1, mpz_class(0));
  dh.assign(static_cast<size_t>(m) + 1, mpz_class(0));
  mpz_class two_pow = 1;
  for (int j = 0; j <= m; ++j) {
    nh[static_cast<size_t>(j)] = f.num().coeff(m - j) * two_pow;
    dh[static_cast<size_t>(j)] = f.den().coeff(m - j) * two_pow;
    two_pow *= 2;
  }
}

}  // namespace

std::vector<Rat> taylor_at_hbar0(const RationalFnZ& f, unsigned order) {
  if (f.is_zero()) return std::vector<Rat>(order + 1, Rat(0));
  std::vector<mpz_class> nh, dh;
  hbar_form(f, nh, dh);
  if (dh[0] == 0) {
    throw std::domain_error(
        "pole at hbar = 0: numerator z-degree exceeds denominator z-degree");
  }
  std::vector<Rat> out(order + 1, Rat(0));
  Rat d0{dh[0]};
  for (unsigned k = 0; k <= order; ++k) {
    Rat acc = k < nh.size() ? Rat(nh[k]) : Rat(0);
    for (unsigned j = 0; j < k; ++j) {
      size_t idx = k - j;
      if (idx < dh.size()) acc -= out[j] * Rat(dh[idx]);
    }
    out[k] = acc / d0;
  }
  return out;
}

QScalar eval_at_hbar(const RationalFnZ& f, const QScalar& hbar) {
  if (hbar.is_zero()) {
    throw std::domain_error("hbar = 0 is not a point of the z-picture; use taylor_at_hbar0");
  }
  QScalar z0 = QScalar(1) / (QScalar(2) * hbar);
  QScalar d = f.den().eval(z0);
  if (d.is_zero()) {
    throw std::domain_error("coefficient has a pole at hbar = " + hbar.to_string());
  }
  return f.num().eval(z0) / d;
}

std::vector<Rat> as_hbar_polynomial(const RationalFnZ& f) {
  if (f.is_zero()) return {Rat(0)};
  std::vector<mpz_class> nh, dh;
  hbar_form(f, nh, dh);
  if (dh[0] == 0) return {};
  // Exact division of the hbar-forms; empty when a remainder is left.
  std::vector<Rat> num(nh.size()), den(dh.size());
  for (size_t k = 0; k < nh.size(); ++k) num[k] = Rat(nh[k]);
  for (size_t k = 0; k < dh.size(); ++k) den[k] = Rat(dh[k]);
  while (!num.empty() && num.back() == 0) num.pop_back();
  while (!den.empty() && den.back() == 0) den.pop_back();
  if (num.empty()) return {Rat(0)};
  if (num.size() < den.size()) return {};
  std::vector<Rat> q(num.size() - den.size() + 1, Rat(0));
  std::vector<Rat> rem = num;
  for (size_t k = q.size(); k-- > 0;) {
    Rat t = rem[k + den.size() - 1] / den.back();
    q[k] = t;
    if (t != 0) {
      for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= t * den[j];
    }
  }
  for (const auto& r : rem) {
    if (r != 0) return {};
  }
  return q;
}

}  // namespace wickdisc
