#pragma once

#include <string>
#include <vector>

#include "wickdisc/qscalar.hpp"

namespace wickdisc {

/// Dense univariate polynomial over Z in the variable z, lowest degree first.
/// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<mpz_class> coeffs);
  ZPoly(std::initializer_list<long> coeffs);

  static ZPoly constant(mpz_class c);
  static ZPoly monomial(unsigned deg, mpz_class c = 1);
  /// a0 + a1 z
  static ZPoly linear(mpz_class a0, mpz_class a1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  mpz_class coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& lead() const;

  template <typename T>
  T eval(const T& x) const {
    T r{};
    for (size_t i = c_.size(); i-- > 0;) r = r * x + T(c_[i]);
    return r;
  }

  ZPoly derivative() const;
  /// gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  mpz_class content() const;
  ZPoly primitive() const;
  /// p(z + a) by exact Taylor shift.
  ZPoly shifted_arg(const mpz_class& a) const;
  /// Exact quotient; throws if the division leaves a remainder.
  ZPoly divexact(const ZPoly& d) const;

  bool operator==(const ZPoly&) const = default;

  std::string to_string(const char* var = "z") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const mpz_class& s);

/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly poly_gcd(const ZPoly& a, const ZPoly& b);

/// Exact rational function of z = 1/(2 hbar), stored as a gcd-reduced
/// quotient of integer polynomials with positive leading denominator
/// coefficient. All star-product coefficients live here in symbolic mode;
/// their denominators factor over the linear polynomials z + k with k in N_0,
/// which pole extraction checks rather than assumes.
class RationalFnZ {
 public:
  RationalFnZ() : num_(), den_(ZPoly::constant(1)) {}
  RationalFnZ(const Rat& value);  // NOLINT: constants embed implicitly
  RationalFnZ(long value) : RationalFnZ(Rat(value)) {}
  explicit RationalFnZ(ZPoly num);
  RationalFnZ(ZPoly num, ZPoly den);

  /// Pochhammer polynomial (z)_m = z (z+1) ... (z+m-1).
  static RationalFnZ pochhammer_poly(unsigned m);
  /// prod_{k=lo}^{hi-1} (z + k); 1 when hi <= lo.
  static ZPoly rising_range(unsigned lo, unsigned hi);

  const ZPoly& num() const { return num_; }
  const ZPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat as_rational() const;  // throws unless constant

  /// Exact value at rational z0; throws on a denominator root.
  Rat eval_q(const Rat& z0) const;
  QScalar eval_q(const QScalar& z0) const;

  bool operator==(const RationalFnZ&) const = default;

  std::string to_string() const;

 private:
  void normalize();
  ZPoly num_, den_;
};

RationalFnZ operator+(const RationalFnZ& a, const RationalFnZ& b);
RationalFnZ operator-(const RationalFnZ& a, const RationalFnZ& b);
RationalFnZ operator-(const RationalFnZ& a);
RationalFnZ operator*(const RationalFnZ& a, const RationalFnZ& b);
RationalFnZ operator/(const RationalFnZ& a, const RationalFnZ& b);

enum class RfOp { Add, Sub, Mul, Div };
RationalFnZ rf_arith(const RationalFnZ& a, const RationalFnZ& b, RfOp op);

/// Rising factorial at a fixed exact argument.
QScalar pochhammer(const QScalar& z0, unsigned m);

/// A denominator root z = -m (m >= 1) seen through z = 1/(2 hbar): a pole of
/// the coefficient at hbar = -1/(2m).
struct HbarPole {
  unsigned m = 0;
  Rat hbar_location;      // -1/(2m)
  unsigned order = 1;
  Rat residue_z;          // Laurent coefficient of (z + m)^{-1} at z = -m
  Rat residue_hbar;       // residue in the hbar variable; valid for simple poles
  bool residue_hbar_valid = false;
};

struct HbarPoleReport {
  std::vector<HbarPole> poles;  // ascending m
  /// Multiplicity of the denominator root z = 0, i.e. a pole at hbar -> infinity;
  /// reported separately from the finite-hbar poles.
  unsigned infinity_order = 0;
  /// Leftover denominator factor with no roots in -N_0 (within the search
  /// range); nonempty contradicts the expected pole structure.
  std::vector<std::string> anomalies;
  bool clean() const { return anomalies.empty(); }
};

HbarPoleReport poles_in_hbar(const RationalFnZ& f);

/// Exact Taylor coefficients in hbar at hbar = 0, after substituting
/// z = 1/(2 hbar); throws if the substituted function has a pole at 0.
std::vector<Rat> taylor_at_hbar0(const RationalFnZ& f, unsigned order);

/// Exact value at z = 1/(2 hbar); hbar = 0 is rejected (use taylor_at_hbar0),
/// as is any hbar hitting a denominator root.
QScalar eval_at_hbar(const RationalFnZ& f, const QScalar& hbar);

/// The function as a polynomial in hbar when it is one (empty otherwise),
/// lowest degree first. Used for the cosmetic hbar-view only.
std::vector<Rat> as_hbar_polynomial(const RationalFnZ& f);

}  // namespace wickdisc
