#include "wickdisc/common.hpp"

namespace wickdisc {

void accumulate_term(TermMap& m, const TermKey& key, const Coeff& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace wickdisc
