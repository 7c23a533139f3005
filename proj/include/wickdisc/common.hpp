#pragma once

#include <map>

#include "wickdisc/coeff.hpp"
#include "wickdisc/multiindex.hpp"

namespace wickdisc {

/// (P, Q) pair indexing a monomial; ordered graded-lexicographically, which
/// fixes the canonical term order everywhere (iteration, serialization).
struct TermKey {
  MultiIndex P, Q;
  bool operator==(const TermKey&) const = default;
};

struct TermKeyLess {
  bool operator()(const TermKey& a, const TermKey& b) const {
    int ga = a.P.total() + a.Q.total();
    int gb = b.P.total() + b.Q.total();
    if (ga != gb) return ga < gb;
    if (a.P != b.P) return lex_less(a.P, b.P);
    return lex_less(a.Q, b.Q);
  }
};

using TermMap = std::map<TermKey, Coeff, TermKeyLess>;

/// Accumulate c into m[key], erasing the entry when it cancels to zero.
void accumulate_term(TermMap& m, const TermKey& key, const Coeff& c);

}  // namespace wickdisc
