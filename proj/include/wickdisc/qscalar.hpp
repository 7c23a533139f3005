#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace wickdisc {

using Rat = mpq_class;

/// mpq_class(p, q) does not canonicalize on its own.
inline Rat make_rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& s);
std::string rat_to_string(const Rat& r);

/// Exact complex number with rational real and imaginary parts. Closed under
/// the field operations and conjugation; the coefficient domain for all
/// fixed-hbar computations.
struct QScalar {
  Rat re, im;

  QScalar() : re(0), im(0) {}
  QScalar(long v) : re(v), im(0) {}  // NOLINT: implicit by design
  QScalar(Rat r) : re(std::move(r)), im(0) {}
  QScalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  explicit QScalar(const mpz_class& z) : re(z), im(0) {}

  static QScalar i() { return QScalar(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  QScalar conj() const { return QScalar(re, -im); }
  Rat norm2() const { return re * re + im * im; }

  double abs() const { return std::hypot(re.get_d(), im.get_d()); }
  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  bool operator==(const QScalar&) const = default;

  std::string to_string() const;
};

inline QScalar operator+(const QScalar& a, const QScalar& b) {
  return QScalar(a.re + b.re, a.im + b.im);
}
inline QScalar operator-(const QScalar& a, const QScalar& b) {
  return QScalar(a.re - b.re, a.im - b.im);
}
inline QScalar operator-(const QScalar& a) { return QScalar(-a.re, -a.im); }
inline QScalar operator*(const QScalar& a, const QScalar& b) {
  return QScalar(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline QScalar operator/(const QScalar& a, const QScalar& b) {
  Rat n = b.norm2();
  if (n == 0) throw std::domain_error("division by zero");
  return QScalar((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}
inline QScalar& operator+=(QScalar& a, const QScalar& b) { return a = a + b; }
inline QScalar& operator-=(QScalar& a, const QScalar& b) { return a = a - b; }
inline QScalar& operator*=(QScalar& a, const QScalar& b) { return a = a * b; }

QScalar qpow(const QScalar& a, unsigned k);

}  // namespace wickdisc
