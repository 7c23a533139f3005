#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace wickdisc {

/// Tuple of nonnegative integer exponents. Immutable value type with a dense
/// encoding; componentwise order and arithmetic as needed by the product
/// formulas. Length is n+1 for ambient indices and n for disc indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries);

  static MultiIndex zero(int len);
  static MultiIndex unit(int len, int i);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  /// |P|, the sum of the entries.
  int total() const;

  /// P with the 0-component dropped.
  MultiIndex drop_front() const;
  /// (k, P_0, ..., P_{end}).
  MultiIndex prepend(int k) const;

  bool is_zero() const;

  bool operator==(const MultiIndex&) const = default;

  std::string to_string() const;

 private:
  std::vector<int> e_;
};

/// Componentwise P <= Q (partial order); requires equal lengths.
bool leq(const MultiIndex& p, const MultiIndex& q);
/// Componentwise minimum.
MultiIndex cmin(const MultiIndex& p, const MultiIndex& q);
MultiIndex operator+(const MultiIndex& p, const MultiIndex& q);
/// Componentwise difference; throws if any entry would go negative.
MultiIndex operator-(const MultiIndex& p, const MultiIndex& q);

/// Strict lexicographic order (used only for canonical iteration).
bool lex_less(const MultiIndex& p, const MultiIndex& q);

int total_degree(const MultiIndex& p);

/// Product over components of binomial(P_i, T_i); zero when any T_i > P_i.
mpz_class multi_binom(const MultiIndex& p, const MultiIndex& t);

/// T! = product of component factorials.
mpz_class multi_factorial(const MultiIndex& t);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

/// All indices of the given length with |P| = k, in lexicographic order.
std::vector<MultiIndex> indices_with_total(int len, int k);
/// All indices of the given length with |P| <= k, in graded lexicographic order.
std::vector<MultiIndex> indices_up_to_total(int len, int k);
/// All T with 0 <= T <= bound componentwise, in lexicographic order.
std::vector<MultiIndex> indices_in_box(const MultiIndex& bound);

}  // namespace wickdisc
