#pragma once

#include <variant>
#include <vector>

#include "wickdisc/ratfunc.hpp"

namespace wickdisc {

/// Complex-valued rational function of z: re(z) + i*im(z) with real rational
/// parts. Conjugation treats z as real (hbar real).
struct SymScalar {
  RationalFnZ re, im;

  SymScalar() = default;
  SymScalar(RationalFnZ r) : re(std::move(r)) {}  // NOLINT
  SymScalar(RationalFnZ r, RationalFnZ i) : re(std::move(r)), im(std::move(i)) {}
  explicit SymScalar(const QScalar& q) : re(q.re), im(q.im) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_constant() const { return re.is_constant() && im.is_constant(); }
  QScalar as_qscalar() const { return QScalar(re.as_rational(), im.as_rational()); }
  SymScalar conj() const { return SymScalar(re, -im); }

  bool operator==(const SymScalar&) const = default;

  std::string to_string() const;
};

SymScalar operator+(const SymScalar& a, const SymScalar& b);
SymScalar operator-(const SymScalar& a, const SymScalar& b);
SymScalar operator-(const SymScalar& a);
SymScalar operator*(const SymScalar& a, const SymScalar& b);
SymScalar operator/(const SymScalar& a, const SymScalar& b);

/// Polynomial term coefficient: an exact Gaussian rational in fixed-hbar mode,
/// or a symbolic function of z = 1/(2 hbar) when hbar is left free. Mixed
/// arithmetic promotes to symbolic.
class Coeff {
 public:
  Coeff() : v_(QScalar()) {}
  Coeff(long v) : v_(QScalar(v)) {}  // NOLINT
  Coeff(QScalar q) : v_(std::move(q)) {}  // NOLINT
  Coeff(SymScalar s) : v_(std::move(s)) {}  // NOLINT
  Coeff(RationalFnZ r) : v_(SymScalar(std::move(r))) {}  // NOLINT

  bool symbolic() const { return std::holds_alternative<SymScalar>(v_); }
  bool is_zero() const;

  /// The numeric value; throws for genuinely hbar-dependent coefficients.
  QScalar numeric() const;
  SymScalar sym() const;

  Coeff conj() const;
  QScalar eval_hbar(const QScalar& hbar) const;
  std::vector<QScalar> taylor_hbar0(unsigned order) const;

  bool operator==(const Coeff& o) const;

  std::string to_string() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);

 private:
  std::variant<QScalar, SymScalar> v_;
};

inline Coeff& operator+=(Coeff& a, const Coeff& b) { return a = a + b; }
inline Coeff& operator*=(Coeff& a, const Coeff& b) { return a = a * b; }

/// Deformation-parameter mode: a fixed exact hbar, or symbolic z = 1/(2 hbar).
class HMode {
 public:
  static HMode fixed(QScalar hbar) { return HMode(false, std::move(hbar)); }
  static HMode fixed(const Rat& hbar) { return HMode(false, QScalar(hbar)); }
  static HMode symbolic() { return HMode(true, QScalar()); }

  bool is_symbolic() const { return symbolic_; }
  const QScalar& hbar() const { return hbar_; }
  bool is_zero_hbar() const { return !symbolic_ && hbar_.is_zero(); }

  /// True for hbar in H u {0}: everything except the poles -1/(2m), m >= 1.
  bool admissible() const;

 private:
  HMode(bool s, QScalar h) : symbolic_(s), hbar_(std::move(h)) {}
  bool symbolic_;
  QScalar hbar_;
};

}  // namespace wickdisc
