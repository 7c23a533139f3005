#include "wickdisc/multiindex.hpp"

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wickdisc {

namespace {

void check_nonnegative(const std::vector<int>& e) {
  for (int v : e) {
    if (v < 0) throw std::invalid_argument("multi-index entries must be nonnegative");
  }
}

void check_same_length(const MultiIndex& p, const MultiIndex& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("multi-index length mismatch: " + p.to_string() + " vs " +
                                q.to_string());
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : e_(std::move(entries)) {
  check_nonnegative(e_);
}

MultiIndex::MultiIndex(std::initializer_list<int> entries) : e_(entries) {
  check_nonnegative(e_);
}

MultiIndex MultiIndex::zero(int len) { return MultiIndex(std::vector<int>(static_cast<size_t>(len), 0)); }

MultiIndex MultiIndex::unit(int len, int i) {
  std::vector<int> e(static_cast<size_t>(len), 0);
  e.at(static_cast<size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::total() const { return std::accumulate(e_.begin(), e_.end(), 0); }

MultiIndex MultiIndex::drop_front() const {
  if (e_.empty()) throw std::invalid_argument("drop_front on empty multi-index");
  return MultiIndex(std::vector<int>(e_.begin() + 1, e_.end()));
}

MultiIndex MultiIndex::prepend(int k) const {
  std::vector<int> e;
  e.reserve(e_.size() + 1);
  e.push_back(k);
  e.insert(e.end(), e_.begin(), e_.end());
  return MultiIndex(std::move(e));
}

bool MultiIndex::is_zero() const {
  for (int v : e_) {
    if (v != 0) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ',';
    os << e_[i];
  }
  os << ')';
  return os.str();
}

bool leq(const MultiIndex& p, const MultiIndex& q) {
  check_same_length(p, q);
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return true;
}

MultiIndex cmin(const MultiIndex& p, const MultiIndex& q) {
  check_same_length(p, q);
  std::vector<int> e(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) e[static_cast<size_t>(i)] = std::min(p[i], q[i]);
  return MultiIndex(std::move(e));
}

MultiIndex operator+(const MultiIndex& p, const MultiIndex& q) {
  check_same_length(p, q);
  std::vector<int> e(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) e[static_cast<size_t>(i)] = p[i] + q[i];
  return MultiIndex(std::move(e));
}

MultiIndex operator-(const MultiIndex& p, const MultiIndex& q) {
  check_same_length(p, q);
  std::vector<int> e(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) {
    if (p[i] < q[i]) {
      throw std::invalid_argument("multi-index difference " + p.to_string() + " - " +
                                  q.to_string() + " has a negative entry");
    }
    e[static_cast<size_t>(i)] = p[i] - q[i];
  }
  return MultiIndex(std::move(e));
}

bool lex_less(const MultiIndex& p, const MultiIndex& q) {
  return std::lexicographical_compare(p.entries().begin(), p.entries().end(),
                                      q.entries().begin(), q.entries().end());
}

int total_degree(const MultiIndex& p) { return p.total(); }

mpz_class multi_binom(const MultiIndex& p, const MultiIndex& t) {
  check_same_length(p, t);
  mpz_class r = 1;
  for (int i = 0; i < p.size(); ++i) {
    if (t[i] > p[i]) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p[i]), static_cast<unsigned long>(t[i]));
    r *= b;
  }
  return r;
}

mpz_class multi_factorial(const MultiIndex& t) {
  mpz_class r = 1;
  for (int i = 0; i < t.size(); ++i) r *= factorial(static_cast<unsigned>(t[i]));
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::vector<MultiIndex> indices_with_total(int len, int k) {
  std::vector<MultiIndex> out;
  if (len == 0) {
    if (k == 0) out.push_back(MultiIndex(std::vector<int>{}));
    return out;
  }
  std::vector<int> cur(static_cast<size_t>(len), 0);
  // Descend lexicographically: leading entry from k down would be reverse-lex;
  // build in increasing lex order instead.
  std::function<void(int, int)> rec = [&](int pos, int rest) {
    if (pos == len - 1) {
      cur[static_cast<size_t>(pos)] = rest;
      out.push_back(MultiIndex(cur));
      return;
    }
    for (int v = 0; v <= rest; ++v) {
      cur[static_cast<size_t>(pos)] = v;
      rec(pos + 1, rest - v);
    }
  };
  rec(0, k);
  return out;
}

std::vector<MultiIndex> indices_up_to_total(int len, int k) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= k; ++d) {
    auto layer = indices_with_total(len, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<MultiIndex> indices_in_box(const MultiIndex& bound) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<size_t>(bound.size()), 0);
  while (true) {
    out.push_back(MultiIndex(cur));
    int i = bound.size() - 1;
    while (i >= 0) {
      if (cur[static_cast<size_t>(i)] < bound[i]) {
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < bound.size(); ++j) cur[static_cast<size_t>(j)] = 0;
        break;
      }
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace wickdisc
