#include "wickdisc/coeff.hpp"

#include <stdexcept>

namespace wickdisc {

std::string SymScalar::to_string() const {
  if (im.is_zero()) return re.to_string();
  return "(" + re.to_string() + ") + i*(" + im.to_string() + ")";
}

SymScalar operator+(const SymScalar& a, const SymScalar& b) {
  return SymScalar(a.re + b.re, a.im + b.im);
}

SymScalar operator-(const SymScalar& a, const SymScalar& b) {
  return SymScalar(a.re - b.re, a.im - b.im);
}

SymScalar operator-(const SymScalar& a) { return SymScalar(-a.re, -a.im); }

SymScalar operator*(const SymScalar& a, const SymScalar& b) {
  return SymScalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

SymScalar operator/(const SymScalar& a, const SymScalar& b) {
  RationalFnZ n = b.re * b.re + b.im * b.im;
  if (n.is_zero()) throw std::domain_error("division by zero symbolic coefficient");
  return SymScalar((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

bool Coeff::is_zero() const {
  if (symbolic()) return std::get<SymScalar>(v_).is_zero();
  return std::get<QScalar>(v_).is_zero();
}

QScalar Coeff::numeric() const {
  if (!symbolic()) return std::get<QScalar>(v_);
  const SymScalar& s = std::get<SymScalar>(v_);
  if (!s.is_constant()) {
    throw std::invalid_argument("coefficient is symbolic in hbar where a number is required");
  }
  return s.as_qscalar();
}

SymScalar Coeff::sym() const {
  if (symbolic()) return std::get<SymScalar>(v_);
  return SymScalar(std::get<QScalar>(v_));
}

Coeff Coeff::conj() const {
  if (symbolic()) return Coeff(std::get<SymScalar>(v_).conj());
  return Coeff(std::get<QScalar>(v_).conj());
}

QScalar Coeff::eval_hbar(const QScalar& hbar) const {
  if (!symbolic()) return std::get<QScalar>(v_);
  const SymScalar& s = std::get<SymScalar>(v_);
  if (s.is_constant()) return s.as_qscalar();
  return eval_at_hbar(s.re, hbar) + QScalar::i() * eval_at_hbar(s.im, hbar);
}

std::vector<QScalar> Coeff::taylor_hbar0(unsigned order) const {
  std::vector<QScalar> out(order + 1);
  if (!symbolic()) {
    out[0] = std::get<QScalar>(v_);
    return out;
  }
  const SymScalar& s = std::get<SymScalar>(v_);
  std::vector<Rat> re = taylor_at_hbar0(s.re, order);
  std::vector<Rat> im = taylor_at_hbar0(s.im, order);
  for (unsigned k = 0; k <= order; ++k) out[k] = QScalar(re[k], im[k]);
  return out;
}

bool Coeff::operator==(const Coeff& o) const {
  if (symbolic() == o.symbolic()) return v_ == o.v_;
  // Numeric vs symbolic: equal iff the symbolic side is that constant.
  const Coeff& s = symbolic() ? *this : o;
  const Coeff& q = symbolic() ? o : *this;
  const SymScalar& sv = std::get<SymScalar>(s.v_);
  return sv.is_constant() && sv.as_qscalar() == std::get<QScalar>(q.v_);
}

std::string Coeff::to_string() const {
  if (symbolic()) return std::get<SymScalar>(v_).to_string();
  return std::get<QScalar>(v_).to_string();
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (!a.symbolic() && !b.symbolic())
    return Coeff(std::get<QScalar>(a.v_) + std::get<QScalar>(b.v_));
  return Coeff(a.sym() + b.sym());
}

Coeff operator-(const Coeff& a, const Coeff& b) {
  if (!a.symbolic() && !b.symbolic())
    return Coeff(std::get<QScalar>(a.v_) - std::get<QScalar>(b.v_));
  return Coeff(a.sym() - b.sym());
}

Coeff operator-(const Coeff& a) {
  if (!a.symbolic()) return Coeff(-std::get<QScalar>(a.v_));
  return Coeff(-std::get<SymScalar>(a.v_));
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (!a.symbolic() && !b.symbolic())
    return Coeff(std::get<QScalar>(a.v_) * std::get<QScalar>(b.v_));
  return Coeff(a.sym() * b.sym());
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (!a.symbolic() && !b.symbolic())
    return Coeff(std::get<QScalar>(a.v_) / std::get<QScalar>(b.v_));
  return Coeff(a.sym() / b.sym());
}

bool HMode::admissible() const {
  if (symbolic_) return true;
  if (hbar_.is_zero()) return true;
  if (!hbar_.is_real()) return true;
  // Excluded points: hbar = -1/(2m), m >= 1.
  Rat q = -1 / (2 * hbar_.re);
  return !(q > 0 && q.get_den() == 1);
}

}  // namespace wickdisc
