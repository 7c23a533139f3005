#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wickdisc/coeff.hpp"
#include "wickdisc/multiindex.hpp"

using namespace wickdisc;

namespace {

RationalFnZ rf(std::initializer_list<long> num, std::initializer_list<long> den) {
  return RationalFnZ(ZPoly(num), ZPoly(den));
}

RationalFnZ random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-4, 4);
  auto poly = [&](int deg) {
    std::vector<mpz_class> v;
    for (int k = 0; k <= deg; ++k) v.emplace_back(c(rng));
    return ZPoly(std::move(v));
  };
  ZPoly den;
  while (den.is_zero()) den = poly(2);
  return RationalFnZ(poly(3), den);
}

}  // namespace

TEST_CASE("qscalar field operations") {
  QScalar a(make_rat(1, 2), make_rat(-1, 3));
  QScalar b(make_rat(2, 5), make_rat(3, 4));
  CHECK((a * b) / b == a);
  CHECK(a + (-a) == QScalar(0));
  CHECK(a.conj().conj() == a);
  CHECK((a * a.conj()).im == 0);
  CHECK_THROWS_AS(a / QScalar(0), std::domain_error);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(QScalar(make_rat(7, 3)), 0) == QScalar(1));
  CHECK(pochhammer(QScalar(1), 3) == QScalar(6));
  CHECK(RationalFnZ::pochhammer_poly(2) == RationalFnZ(ZPoly{0, 1, 1}));  // z + z^2
  CHECK(RationalFnZ::pochhammer_poly(0) == RationalFnZ(1));
}

TEST_CASE("rational function arithmetic and canonical form") {
  RationalFnZ a = rf({1, 1}, {0, 1});  // (z+1)/z
  RationalFnZ b = rf({0, 1}, {1, 1});  // z/(z+1)
  CHECK(a * b == RationalFnZ(1));
  RationalFnZ inv_z = rf({1}, {0, 1});
  CHECK(inv_z + inv_z == rf({2}, {0, 1}));
  // (z)_2 / ((z)_1 (z)_1) = (z+1)/z
  RationalFnZ p2 = RationalFnZ::pochhammer_poly(2);
  RationalFnZ p1 = RationalFnZ::pochhammer_poly(1);
  CHECK(p2 / (p1 * p1) == a);
  CHECK(rf_arith(a, b, RfOp::Mul) == RationalFnZ(1));
  CHECK_THROWS_AS(a / RationalFnZ(0), std::domain_error);
  // Canonical normalization keeps the denominator's leading coefficient positive.
  RationalFnZ c = rf({1}, {0, -2});
  CHECK(c.den().lead() > 0);
}

TEST_CASE("random field laws") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    RationalFnZ a = random_rf(rng), b = random_rf(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("evaluation at fixed hbar") {
  RationalFnZ a = rf({1, 1}, {0, 1});  // (z+1)/z
  CHECK(eval_at_hbar(a, QScalar(make_rat(1, 2))) == QScalar(2));
  CHECK(eval_at_hbar(rf({1}, {0, 1}), QScalar(make_rat(1, 4))) == QScalar(make_rat(1, 2)));
  CHECK(eval_at_hbar(RationalFnZ(make_rat(5, 7)), QScalar(make_rat(9, 11))) ==
        QScalar(make_rat(5, 7)));
  // 1/(z+2) has a pole at z = -2, i.e. hbar = -1/4.
  CHECK_THROWS_AS(eval_at_hbar(rf({1}, {2, 1}), QScalar(make_rat(-1, 4))), std::domain_error);
  CHECK_THROWS_AS(eval_at_hbar(a, QScalar(0)), std::domain_error);
}

TEST_CASE("taylor expansion at hbar = 0") {
  auto t = taylor_at_hbar0(rf({1, 1}, {0, 1}), 1);  // (z+1)/z = 1 + 2 hbar
  REQUIRE(t.size() == 2);
  CHECK(t[0] == 1);
  CHECK(t[1] == 2);
  t = taylor_at_hbar0(rf({1}, {0, 1}), 1);  // 1/z = 2 hbar
  CHECK(t[0] == 0);
  CHECK(t[1] == 2);
  t = taylor_at_hbar0(RationalFnZ(1), 1);
  CHECK(t[0] == 1);
  CHECK(t[1] == 0);
  // z itself blows up at hbar = 0.
  CHECK_THROWS_AS(taylor_at_hbar0(RationalFnZ(ZPoly{0, 1}), 2), std::domain_error);
}

TEST_CASE("taylor matches evaluation to first order") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 50; ++iter) {
    RationalFnZ f = random_rf(rng);
    // Keep to functions regular at hbar = 0.
    if (f.num().degree() > f.den().degree()) continue;
    std::vector<Rat> t;
    try {
      t = taylor_at_hbar0(f, 1);
    } catch (const std::domain_error&) {
      continue;
    }
    double c0 = t[0].get_d(), c1 = t[1].get_d();
    double prev_err = -1;
    bool ok = true;
    for (double h : {1e-3, 5e-4, 2.5e-4}) {
      QScalar v = eval_at_hbar(f, QScalar(Rat(h)));
      double err = std::abs(v.re.get_d() - (c0 + c1 * h));
      if (prev_err >= 0 && err > 0.30 * prev_err + 1e-13) ok = false;  // ~O(h^2) decay
      prev_err = err;
    }
    CHECK(ok);
  }
}

TEST_CASE("pole report in the hbar picture") {
  // (z+1)/z: no finite pole, z = 0 flagged as hbar -> infinity.
  auto rep = poles_in_hbar(rf({1, 1}, {0, 1}));
  CHECK(rep.poles.empty());
  CHECK(rep.infinity_order == 1);
  CHECK(rep.clean());

  // (z+2)(z+3)/(z(z+1)): simple pole at hbar = -1/2 with z-residue -2.
  RationalFnZ f(ZPoly{2, 1} * ZPoly{3, 1}, ZPoly{0, 1} * ZPoly{1, 1});
  rep = poles_in_hbar(f);
  REQUIRE(rep.poles.size() == 1);
  CHECK(rep.poles[0].m == 1);
  CHECK(rep.poles[0].hbar_location == make_rat(-1, 2));
  CHECK(rep.poles[0].order == 1);
  CHECK(rep.poles[0].residue_z == -2);
  CHECK(rep.poles[0].residue_hbar_valid);
  CHECK(rep.poles[0].residue_hbar == 1);  // -2 * (-1/2)
  CHECK(rep.infinity_order == 1);

  CHECK(poles_in_hbar(RationalFnZ(1)).poles.empty());

  // A root off -N_0 is an anomaly.
  rep = poles_in_hbar(rf({1}, {-1, 1}));  // 1/(z-1)
  CHECK_FALSE(rep.clean());

  // Double pole has the right order and Laurent residue:
  // (z+2)/(z+1)^2 = ((z+1)+1)/(z+1)^2 -> residue 1 at z = -1.
  rep = poles_in_hbar(RationalFnZ(ZPoly{2, 1}, ZPoly{1, 1} * ZPoly{1, 1}));
  REQUIRE(rep.poles.size() == 1);
  CHECK(rep.poles[0].order == 2);
  CHECK(rep.poles[0].residue_z == 1);
  CHECK_FALSE(rep.poles[0].residue_hbar_valid);
}

TEST_CASE("pole bookkeeping is consistent under arithmetic") {
  std::mt19937_64 rng(5);
  auto pole_set = [](const RationalFnZ& f) {
    std::vector<unsigned> ms;
    for (const auto& p : poles_in_hbar(f).poles) ms.push_back(p.m);
    return ms;
  };
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<unsigned> mk(0, 3);
    auto factored = [&] {
      RationalFnZ f(1);
      for (unsigned m = 0; m <= 3; ++m) {
        if (mk(rng) == 0) f = f / RationalFnZ(ZPoly::linear(static_cast<long>(m), 1));
      }
      return f;
    };
    RationalFnZ a = factored(), b = factored();
    auto pa = pole_set(a), pb = pole_set(b), pab = pole_set(a * b);
    for (unsigned m : pab) {
      bool in_union = false;
      for (unsigned x : pa) in_union |= (x == m);
      for (unsigned x : pb) in_union |= (x == m);
      CHECK(in_union);
    }
  }
}

TEST_CASE("pole residues of the pochhammer ratios match the closed form") {
  // (z)_{j+k-t} / ((z)_j (z)_k) has simple poles at z = -m for
  // m in {0, ..., min(j,k)-1} with residue
  // (-1)^m (j+k-t-m-1)! / (m! (j-m-1)! (k-m-1)!); the z = 0 member shows up
  // as the pole at hbar -> infinity.
  for (unsigned j = 1; j <= 4; ++j) {
    for (unsigned k = 1; k <= 4; ++k) {
      for (unsigned t = 0; t <= std::min(j, k); ++t) {
        RationalFnZ ratio = RationalFnZ::pochhammer_poly(j + k - t) /
                            (RationalFnZ::pochhammer_poly(j) * RationalFnZ::pochhammer_poly(k));
        HbarPoleReport rep = poles_in_hbar(ratio);
        CHECK(rep.clean());
        // The m = 0 member of the pole family sits at z = 0, i.e. at
        // hbar -> infinity, and survives every cancellation since j, k >= 1.
        CHECK(rep.infinity_order == 1u);
        for (const auto& pole : rep.poles) {
          REQUIRE(pole.order == 1);
          unsigned m = pole.m;
          REQUIRE(m < std::min(j, k));
          Rat expect = Rat(factorial(j + k - t - m - 1)) /
                       Rat(factorial(m) * factorial(j - m - 1) * factorial(k - m - 1));
          if (m % 2 == 1) expect = -expect;
          CHECK(pole.residue_z == expect);
        }
      }
    }
  }
}

TEST_CASE("two-sided pochhammer growth bound over a finite range") {
  // alpha, omega derived from the sampled quotients (z0+k)/(k+1).
  std::vector<Rat> hbars = {make_rat(1, 2), make_rat(1, 3), make_rat(1, 5), Rat(1)};
  unsigned m_max = 30;
  Rat alpha, omega;
  bool first = true;
  for (const Rat& h : hbars) {
    Rat z0 = Rat(1) / (2 * h);
    for (unsigned k = 0; k < m_max; ++k) {
      Rat q = (z0 + static_cast<long>(k)) / (static_cast<long>(k) + 1);
      if (first) {
        alpha = omega = q;
        first = false;
      } else {
        alpha = std::min(alpha, q);
        omega = std::max(omega, q);
      }
    }
  }
  for (const Rat& h : hbars) {
    QScalar z0 = QScalar(1) / (QScalar(2) * QScalar(h));
    Rat ap(1), op(1);
    for (unsigned m = 1; m <= m_max; ++m) {
      ap *= alpha;
      op *= omega;
      Rat poch = pochhammer(z0, m).re;
      Rat fac{factorial(m)};
      CHECK(ap * fac <= poch);
      CHECK(poch <= op * fac);
    }
  }
}

TEST_CASE("symbolic scalar complex arithmetic") {
  SymScalar i_over_z(RationalFnZ(0), rf({1}, {0, 1}));
  SymScalar z_plus_1(rf({1, 1}, {1}));
  SymScalar prod = i_over_z * z_plus_1;
  CHECK(prod.re.is_zero());
  CHECK(prod.im == rf({1, 1}, {0, 1}));
  CHECK(prod.conj() == SymScalar(RationalFnZ(0), -rf({1, 1}, {0, 1})));

  Coeff a(QScalar(make_rat(1, 2)));
  Coeff b(SymScalar(rf({1}, {0, 1})));
  Coeff c = a * b;  // promotes
  CHECK(c.symbolic());
  CHECK(c.eval_hbar(QScalar(make_rat(1, 2))) == QScalar(make_rat(1, 2)));
  CHECK_THROWS_AS(b.numeric(), std::invalid_argument);
  CHECK(Coeff(QScalar(3)) == Coeff(SymScalar(RationalFnZ(Rat(3)))));
}

TEST_CASE("hbar polynomial view") {
  CHECK(as_hbar_polynomial(rf({1, 1}, {0, 1})) == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(as_hbar_polynomial(rf({1}, {0, 1})) == std::vector<Rat>{Rat(0), Rat(2)});
  CHECK(as_hbar_polynomial(rf({1}, {1, 1})).empty());  // 1/(z+1) is rational in hbar
}
