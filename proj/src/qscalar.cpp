#include "wickdisc/qscalar.hpp"

#include <cctype>

namespace wickdisc {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw std::invalid_argument("bad rational literal '" + s + "'");
    }
  }
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

std::string QScalar::to_string() const {
  if (im == 0) return rat_to_string(re);
  return rat_to_string(re) + (im > 0 ? "+" : "") + rat_to_string(im) + "i";
}

QScalar qpow(const QScalar& a, unsigned k) {
  QScalar r(1);
  QScalar base = a;
  while (k) {
    if (k & 1u) r *= base;
    base *= base;
    k >>= 1u;
  }
  return r;
}

}  // namespace wickdisc
