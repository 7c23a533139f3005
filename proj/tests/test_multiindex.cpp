#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wickdisc/multiindex.hpp"

using namespace wickdisc;

TEST_CASE("total degree") {
  CHECK(total_degree(MultiIndex{0, 0}) == 0);
  CHECK(total_degree(MultiIndex{1, 2, 3}) == 6);
  CHECK(total_degree(MultiIndex::unit(2, 1)) == 1);
}

TEST_CASE("multi binomial") {
  CHECK(multi_binom(MultiIndex{2, 1}, MultiIndex{1, 1}) == 2);
  CHECK(multi_binom(MultiIndex{5, 7, 2}, MultiIndex::zero(3)) == 1);
  CHECK(multi_binom(MultiIndex{3, 4}, MultiIndex{3, 4}) == 1);
  CHECK(multi_binom(MultiIndex{1, 1}, MultiIndex{2, 0}) == 0);
  CHECK_THROWS_AS(multi_binom(MultiIndex{1, 1}, MultiIndex{1}), std::invalid_argument);
}

TEST_CASE("multi factorial") {
  CHECK(multi_factorial(MultiIndex{0, 0}) == 1);
  CHECK(multi_factorial(MultiIndex{2, 1}) == 2);
  CHECK(multi_factorial(MultiIndex{3}) == 6);
  CHECK(factorial(6) == 720);
}

TEST_CASE("componentwise order and arithmetic") {
  MultiIndex p{2, 1}, q{3, 1};
  CHECK(leq(p, q));
  CHECK_FALSE(leq(q, p));
  CHECK(cmin(MultiIndex{2, 0}, MultiIndex{1, 4}) == MultiIndex{1, 0});
  CHECK(p + q == MultiIndex{5, 2});
  CHECK(q - p == MultiIndex{1, 0});
  CHECK_THROWS_AS(p - q, std::invalid_argument);
}

// Vandermonde on components: sum_T C(P,T) C(S,K-T) = C(P+S,K).
TEST_CASE("binomial convolution identity") {
  for (int p0 = 0; p0 <= 4; ++p0) {
    for (int p1 = 0; p1 <= 4; ++p1) {
      MultiIndex P{p0, p1};
      for (int s0 = 0; s0 <= 4; ++s0) {
        for (int s1 = 0; s1 <= 4; ++s1) {
          MultiIndex S{s0, s1};
          for (const MultiIndex& K : indices_in_box(P + S)) {
            mpz_class sum = 0;
            for (const MultiIndex& T : indices_in_box(cmin(K, P))) {
              if (!leq(K - T, S)) continue;
              sum += multi_binom(P, T) * multi_binom(S, K - T);
            }
            CHECK(sum == multi_binom(P + S, K));
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration counts match the stars-and-bars formula") {
  for (int len = 1; len <= 4; ++len) {
    for (int k = 0; k <= 6; ++k) {
      auto v = indices_with_total(len, k);
      CHECK(mpz_class(static_cast<long>(v.size())) ==
            binomial(static_cast<unsigned>(len - 1 + k), static_cast<unsigned>(k)));
      for (const auto& m : v) CHECK(m.total() == k);
    }
  }
}

TEST_CASE("box enumeration is lexicographic and complete") {
  auto box = indices_in_box(MultiIndex{2, 1});
  REQUIRE(box.size() == 6);
  CHECK(box.front() == MultiIndex{0, 0});
  CHECK(box.back() == MultiIndex{2, 1});
  for (size_t i = 1; i < box.size(); ++i) CHECK(lex_less(box[i - 1], box[i]));
}
