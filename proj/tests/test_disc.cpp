#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wickdisc/verify.hpp"

using namespace wickdisc;
using namespace wickdisc::testing;

namespace {

const HMode kSym = HMode::symbolic();
const HMode kHalf = HMode::fixed(make_rat(1, 2));
const HMode kThird = HMode::fixed(make_rat(1, 3));
const HMode kZero = HMode::fixed(Rat(0));

Coeff rfz(std::initializer_list<long> num, std::initializer_list<long> den) {
  return Coeff(RationalFnZ(ZPoly(num), ZPoly(den)));
}

std::vector<std::vector<QScalar>> sample_points_n1() {
  return {
      {QScalar(make_rat(1, 2))},
      {QScalar(make_rat(-1, 3), make_rat(1, 4))},
      {QScalar(make_rat(2, 5), make_rat(-1, 7))},
      {QScalar(Rat(0))},
  };
}

std::vector<std::vector<QScalar>> sample_points_n2() {
  return {
      {QScalar(make_rat(1, 3)), QScalar(make_rat(-1, 4), make_rat(1, 5))},
      {QScalar(Rat(0)), QScalar(make_rat(1, 2))},
  };
}

GroupElement boost_su11(int n) {
  QMatrix U = QMatrix::identity(n + 1);
  U.at(0, 0) = QScalar(make_rat(5, 4));
  U.at(0, 1) = QScalar(make_rat(3, 4));
  U.at(1, 0) = QScalar(make_rat(3, 4));
  U.at(1, 1) = QScalar(make_rat(5, 4));
  return GroupElement(U);
}

}  // namespace

TEST_CASE("fundamental key lifting") {
  auto [p1, q1] = fundamental_key(MultiIndex{1}, MultiIndex{0});
  CHECK(p1 == MultiIndex{0, 1});
  CHECK(q1 == MultiIndex{1, 0});
  auto [p2, q2] = fundamental_key(MultiIndex{0}, MultiIndex{1});
  CHECK(p2 == MultiIndex{1, 0});
  CHECK(q2 == MultiIndex{0, 1});
  auto [p3, q3] = fundamental_key(MultiIndex{1}, MultiIndex{1});
  CHECK(p3 == MultiIndex{0, 1});
  CHECK(q3 == MultiIndex{0, 1});
}

TEST_CASE("monomial expansion into the fundamental basis") {
  // f_{(1,1),(1,1)} = f_{r,1,1} + f_{r,2,2}
  DiscPoly e = from_fpq(1, MultiIndex{1, 1}, MultiIndex{1, 1});
  CHECK(e == fund(1, {1}, {1}) + fund(1, {2}, {2}));

  // P_0 = 0: single term.
  CHECK(from_fpq(1, MultiIndex{0, 2}, MultiIndex{1, 1}) == fund(1, {2}, {1}));

  // n = 2 worked example.
  DiscPoly e2 = from_fpq(2, MultiIndex{1, 1, 0}, MultiIndex{1, 0, 1});
  CHECK(e2 == fund(2, {1, 0}, {0, 1}) + fund(2, {2, 0}, {1, 1}) + fund(2, {1, 1}, {0, 2}));

  CHECK_THROWS_AS(from_fpq(1, MultiIndex{1, 0}, MultiIndex{0, 0}), std::domain_error);

  // Chart oracle: the expansion and the monomial form agree pointwise.
  for (const auto& w : sample_points_n1()) {
    for (const auto& P : indices_up_to_total(2, 3)) {
      for (const auto& Q : indices_up_to_total(2, 3)) {
        if (P.total() != Q.total()) continue;
        CHECK(eval_disc_exact(from_fpq(1, P, Q), w) == fpq_chart_value(P, Q, w));
      }
    }
  }
  for (const auto& w : sample_points_n2()) {
    for (const auto& P : indices_up_to_total(3, 2)) {
      for (const auto& Q : indices_up_to_total(3, 2)) {
        if (P.total() != Q.total()) continue;
        CHECK(eval_disc_exact(from_fpq(2, P, Q), w) == fpq_chart_value(P, Q, w));
      }
    }
  }
}

TEST_CASE("pointwise product cases") {
  CHECK(mul_disc(fund(1, {1}, {0}), fund(1, {0}, {1})) == fund(1, {1}, {1}) + fund(1, {2}, {2}));
  CHECK(mul_disc(fund(1, {1}, {0}), fund(1, {2}, {1})) == fund(1, {3}, {1}));
  DiscPoly a = fund(1, {2}, {1}) + fund(1, {0}, {1}).scaled(Coeff(QScalar(make_rat(2, 3))));
  CHECK(mul_disc(DiscPoly::constant(1, Coeff(1)), a) == a);

  // Chart oracle across all degree-2 fundamental pairs, both dimensions.
  for (int n = 1; n <= 2; ++n) {
    auto pts = n == 1 ? sample_points_n1() : sample_points_n2();
    auto keys = indices_up_to_total(n, 2);
    for (const auto& P : keys) {
      for (const auto& Q : keys) {
        DiscPoly f1 = DiscPoly::fundamental(n, P, Q);
        for (const auto& R : keys) {
          for (const auto& S : keys) {
            DiscPoly f2 = DiscPoly::fundamental(n, R, S);
            DiscPoly prod = mul_disc(f1, f2);
            for (const auto& w : pts) {
              CHECK(eval_disc_exact(prod, w) ==
                    fund_chart_value(P, Q, w) * fund_chart_value(R, S, w));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("star product worked examples") {
  // a = f_{r,0,1}, hbar = 1/2: a * a = 2 f_{r,0,2}.
  DiscPoly a = fund(1, {0}, {1});
  CHECK(star(a, a, kHalf) == fund(1, {0}, {2}).scaled(Coeff(2)));

  // f_{r,1,1} * f_{r,1,1} = (1+2hbar) f_{r,2,2} + 2hbar f_{r,1,1}.
  DiscPoly f11 = fund(1, {1}, {1});
  DiscPoly expect = fund(1, {2}, {2}).scaled(rfz({1, 1}, {0, 1})) +
                    fund(1, {1}, {1}).scaled(rfz({1}, {0, 1}));
  CHECK(star(f11, f11, kSym) == expect);

  // Unit.
  CHECK(star(a, DiscPoly::constant(1, Coeff(1)), kSym) == a);

  // f_{r,1,0} * f_{r,0,1} = (1+2h)(f11+f22) + 2h(1+f11).
  DiscPoly left = fund(1, {1}, {0});
  DiscPoly expect2 = (fund(1, {1}, {1}) + fund(1, {2}, {2})).scaled(rfz({1, 1}, {0, 1})) +
                     (DiscPoly::constant(1, Coeff(1)) + fund(1, {1}, {1}))
                         .scaled(rfz({1}, {0, 1}));
  CHECK(star(left, a, kSym) == expect2);

  // hbar = 0 degenerates to the pointwise product.
  CHECK(star(left, a, kZero) == mul_disc(left, a));

  // Poles of the deformation are rejected up front.
  CHECK_THROWS_AS(star(a, a, HMode::fixed(make_rat(-1, 2))), std::domain_error);
}

TEST_CASE("deformed reduction") {
  AmbientPoly d11 = AmbientPoly::monomial(1, MultiIndex{0, 1}, MultiIndex{0, 1});
  CHECK(reduce(d11, kSym) == fund(1, {1}, {1}));
  CHECK(reduce(d11, kThird) == fund(1, {1}, {1}));

  for (int n = 1; n <= 2; ++n) {
    AmbientPoly gp1 = g_element(n) + AmbientPoly::constant(n, Coeff(1));
    CHECK(reduce(gp1, kSym).is_zero());
    CHECK(reduce(gp1, kHalf).is_zero());
    CHECK(reduce(AmbientPoly::constant(n, Coeff(1)), kSym) ==
          DiscPoly::constant(n, Coeff(1)));
  }
  CHECK_THROWS_AS(reduce(AmbientPoly::monomial(1, MultiIndex{0, 1}, MultiIndex{0, 0}), kSym),
                  std::domain_error);
}

TEST_CASE("unreduce is a right inverse") {
  CHECK(unreduce(fund(1, {1}, {1}), kSym) ==
        AmbientPoly::monomial(1, MultiIndex{0, 1}, MultiIndex{0, 1}));

  // f_{r,2,2} -> d_{(0,2),(0,2)} / (1 + 2 hbar).
  AmbientPoly lifted = unreduce(fund(1, {2}, {2}), kSym);
  AmbientPoly expect =
      AmbientPoly::monomial(1, MultiIndex{0, 2}, MultiIndex{0, 2}).scaled(
          Coeff(RationalFnZ(ZPoly{0, 1}, ZPoly{1, 1})));  // z/(z+1)
  CHECK(lifted == expect);

  std::mt19937_64 rng(41);
  for (int n = 1; n <= 2; ++n) {
    for (int iter = 0; iter < 4; ++iter) {
      DiscPoly a = random_disc_poly(n, 3, rng);
      CHECK(reduce(unreduce(a, kSym), kSym) == a);
      CHECK(reduce(unreduce(a, kThird), kThird) == a);
      CHECK(reduce(unreduce(a, kZero), kZero) == a);
    }
  }
}

TEST_CASE("star equals the reduction pipeline") {
  std::mt19937_64 rng(43);
  for (int n = 1; n <= 2; ++n) {
    for (int iter = 0; iter < 3; ++iter) {
      DiscPoly a = random_disc_poly(n, 2, rng);
      DiscPoly b = random_disc_poly(n, 2, rng);
      for (const HMode* mode : {&kSym, &kThird}) {
        CHECK(star(a, b, *mode) ==
              reduce(wick_star(unreduce(a, *mode), unreduce(b, *mode), *mode), *mode));
      }
    }
  }
}

TEST_CASE("involution") {
  CHECK(involution(fund(1, {1}, {0})) == fund(1, {0}, {1}));
  DiscPoly i_f11 = fund(1, {1}, {1}).scaled(Coeff(QScalar::i()));
  CHECK(involution(i_f11) == fund(1, {1}, {1}).scaled(Coeff(-QScalar::i())));
  std::mt19937_64 rng(47);
  DiscPoly a = random_disc_poly(1, 3, rng);
  CHECK(involution(involution(a)) == a);
}

TEST_CASE("star involution law") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 5; ++iter) {
    DiscPoly a = random_disc_poly(1, 2, rng), b = random_disc_poly(1, 2, rng);
    CHECK(involution(star(a, b, kThird)) ==
          star(involution(b), involution(a), kThird));
    CHECK(involution(star(a, b, kSym)) == star(involution(b), involution(a), kSym));
  }
}

TEST_CASE("poisson bracket on the disc") {
  // {f_{r,1,0}, f_{r,0,1}} = 2i (1 + 2 f_{r,1,1}).
  DiscPoly bracket = poisson_disc(fund(1, {1}, {0}), fund(1, {0}, {1}));
  DiscPoly expect = (DiscPoly::constant(1, Coeff(1)) + fund(1, {1}, {1}).scaled(Coeff(2)))
                        .scaled(Coeff(QScalar(Rat(0), Rat(2))));
  CHECK(bracket == expect);

  std::mt19937_64 rng(59);
  DiscPoly a = random_disc_poly(1, 2, rng);
  CHECK(poisson_disc(a, a).is_zero());
  CHECK(poisson_disc(DiscPoly::constant(1, Coeff(1)), a).is_zero());

  DiscPoly sym = fund(1, {1}, {1}).scaled(rfz({1}, {0, 1}));
  CHECK_THROWS_AS(poisson_disc(sym, a), std::invalid_argument);
}

TEST_CASE("disc bracket matches the chart Poisson tensor") {
  // For a = f_{r,1,0}, b = f_{r,0,1} the chart tensor gives
  // {a,b}(w) = 2i (1 + w conj(w)) / (1 - w conj(w)).
  DiscPoly bracket = poisson_disc(fund(1, {1}, {0}), fund(1, {0}, {1}));
  for (const auto& w : sample_points_n1()) {
    QScalar ww = w[0] * w[0].conj();
    QScalar expect = QScalar(Rat(0), Rat(2)) * (QScalar(1) + ww) / (QScalar(1) - ww);
    CHECK(eval_disc_exact(bracket, w) == expect);
  }
}

TEST_CASE("evaluation") {
  CHECK(eval_disc_exact(fund(1, {0}, {1}), {QScalar(make_rat(1, 2))}) ==
        QScalar(make_rat(2, 3)));
  CHECK(eval_disc_exact(DiscPoly::constant(1, Coeff(1)), {QScalar(make_rat(9, 10))}) ==
        QScalar(1));
  // f_{r,0,m} at w = 1/sqrt(2) -> 2^{m/2} (floating point).
  std::vector<std::complex<double>> w = {1.0 / std::sqrt(2.0)};
  for (int m = 1; m <= 8; ++m) {
    DiscPoly f = fund(1, {0}, {m});
    CHECK(eval_disc(f, w).real() == doctest::Approx(std::pow(2.0, m / 2.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eval_disc_exact(fund(1, {1}, {1}), {QScalar(Rat(1))}), std::domain_error);
}

TEST_CASE("norm") {
  CHECK(norm_disc(fund(2, {1, 0}, {0, 2}), 2.0) == doctest::Approx(8.0));
  DiscPoly a = fund(1, {1}, {0}).scaled(Coeff(2)) + fund(1, {2}, {2}).scaled(Coeff(3));
  CHECK(norm_disc(a, 2.0) == doctest::Approx(52.0));
  CHECK(norm_disc(DiscPoly(1), 3.0) == 0.0);
}

TEST_CASE("filtration") {
  CHECK(fund(1, {2}, {1}).filtration_degree() == 2);
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 5; ++iter) {
    DiscPoly a = random_disc_poly(1, 2, rng), b = random_disc_poly(1, 2, rng);
    DiscPoly prod = star(a, b, kSym);
    CHECK(prod.filtration_degree() <= a.filtration_degree() + b.filtration_degree());
  }
}

TEST_CASE("moebius action") {
  GroupElement id(QMatrix::identity(2));
  DiscPoly a = fund(1, {1}, {0});
  CHECK(act_mobius(id, a) == a);

  QMatrix m(2);
  m.at(0, 0) = -QScalar::i();
  m.at(1, 1) = QScalar::i();
  CHECK(act_mobius(GroupElement(m), a) == a.scaled(Coeff(-1)));

  // Not in SU(1,1): diag(i, 1) has determinant i.
  QMatrix bad(2);
  bad.at(0, 0) = QScalar::i();
  bad.at(1, 1) = QScalar(1);
  CHECK_THROWS_AS(act_mobius(GroupElement(bad), a), std::domain_error);

  // Pullback consistency: (a <| U)(w) = a(U |> w) for the rational boost.
  GroupElement U = boost_su11(1);
  std::mt19937_64 rng(67);
  DiscPoly poly = random_disc_poly(1, 2, rng);
  DiscPoly acted = act_mobius(U, poly);
  for (const auto& w : sample_points_n1()) {
    // U |> w = (c + A w)/(alpha + b w) with alpha=A=5/4, b=c=3/4.
    QScalar num = QScalar(make_rat(3, 4)) + QScalar(make_rat(5, 4)) * w[0];
    QScalar den = QScalar(make_rat(5, 4)) + QScalar(make_rat(3, 4)) * w[0];
    std::vector<QScalar> uw = {num / den};
    CHECK(eval_disc_exact(acted, w) == eval_disc_exact(poly, uw));
  }
}

TEST_CASE("moebius equivariance of the star product") {
  GroupElement U = boost_su11(1);
  std::mt19937_64 rng(71);
  for (int iter = 0; iter < 3; ++iter) {
    DiscPoly a = random_disc_poly(1, 2, rng), b = random_disc_poly(1, 2, rng);
    CHECK(act_mobius(U, star(a, b, kSym)) == star(act_mobius(U, a), act_mobius(U, b), kSym));
    CHECK(act_mobius(U, star(a, b, kThird)) ==
          star(act_mobius(U, a), act_mobius(U, b), kThird));
  }
}

TEST_CASE("disc moment map") {
  QMatrix m(2);
  m.at(0, 0) = QScalar::i();
  m.at(1, 1) = -QScalar::i();
  DiscPoly j = moment_disc(LieElement(m));
  DiscPoly expect = (DiscPoly::constant(1, Coeff(1)) + fund(1, {1}, {1}).scaled(Coeff(2)))
                        .scaled(Coeff(QScalar(make_rat(-1, 2))));
  CHECK(j == expect);

  // Psi_0(g) = -1 via the full moment map of 2i * identity.
  QMatrix two_i = QMatrix::identity(2);
  for (int i = 0; i < 2; ++i) two_i.at(i, i) = QScalar(Rat(0), Rat(2));
  CHECK(reduce(moment_map(LieElement(two_i)), kZero) ==
        DiscPoly::constant(1, Coeff(-1)));

  // 2i * identity is in u(1,1) but not su(1,1): the disc moment map rejects it.
  CHECK_THROWS_AS(moment_disc(LieElement(two_i)), std::domain_error);
}

TEST_CASE("quantum moment map on the disc") {
  std::vector<QMatrix> basis;
  {
    QMatrix u1(2);
    u1.at(0, 0) = QScalar::i();
    u1.at(1, 1) = -QScalar::i();
    QMatrix u2(2);
    u2.at(0, 1) = QScalar::i();
    u2.at(1, 0) = -QScalar::i();
    QMatrix u3(2);
    u3.at(0, 1) = QScalar(1);
    u3.at(1, 0) = QScalar(1);
    basis = {u1, u2, u3};
  }
  std::mt19937_64 rng(73);
  DiscPoly a = random_disc_poly(1, 2, rng);
  for (const auto& m : basis) {
    DiscPoly j = moment_disc(LieElement(m));
    DiscPoly comm = star(a, j, kSym) - star(j, a, kSym);
    // Every coefficient of i [a, J(u)] is exactly hbar * (constant), i.e.
    // multiplying by 2z leaves a constant.
    Coeff i_over_hbar(SymScalar(RationalFnZ(0), RationalFnZ(ZPoly{0, 2})));
    DiscPoly quotient = comm.scaled(i_over_hbar);
    for (const auto& [key, c] : quotient.terms()) {
      bool hbar_dependent = c.symbolic() && !c.sym().is_constant();
      CHECK_FALSE(hbar_dependent);
    }
    CHECK(quotient == poisson_disc(a, j));
  }
}

TEST_CASE("sigma pullback") {
  CHECK(sigma_pullback(fund(1, {0}, {1})) == fund(1, {1}, {0}));
  CHECK(sigma_pullback(DiscPoly::constant(1, Coeff(1))) == DiscPoly::constant(1, Coeff(1)));
  DiscPoly expect = (DiscPoly::constant(1, Coeff(1)) + fund(1, {1}, {1})).scaled(Coeff(-1));
  CHECK(sigma_pullback(fund(1, {1}, {1})) == expect);
  CHECK_THROWS_AS(sigma_pullback(DiscPoly::constant(2, Coeff(1))), std::invalid_argument);

  std::mt19937_64 rng(79);
  for (int iter = 0; iter < 4; ++iter) {
    DiscPoly a = random_disc_poly(1, 3, rng);
    CHECK(sigma_pullback(sigma_pullback(a)) == a);
    CHECK(sigma_pullback(involution(a)) == involution(sigma_pullback(a)));
  }
}

TEST_CASE("sigma equivariance of the star product") {
  std::mt19937_64 rng(83);
  for (int iter = 0; iter < 3; ++iter) {
    DiscPoly a = random_disc_poly(1, 2, rng), b = random_disc_poly(1, 2, rng);
    CHECK(sigma_pullback(star(a, b, kSym)) ==
          star(sigma_pullback(a), sigma_pullback(b), kSym));
  }
}

TEST_CASE("star associativity") {
  auto keys = indices_up_to_total(1, 2);
  std::vector<DiscPoly> basis;
  for (const auto& P : keys) {
    for (const auto& Q : keys) basis.push_back(DiscPoly::fundamental(1, P, Q));
  }
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int iter = 0; iter < 40; ++iter) {
    const DiscPoly& a = basis[pick(rng)];
    const DiscPoly& b = basis[pick(rng)];
    const DiscPoly& c = basis[pick(rng)];
    CHECK(star(star(a, b, kSym), c, kSym) == star(a, star(b, c, kSym), kSym));
    CHECK(star(star(a, b, kThird), c, kThird) == star(a, star(b, c, kThird), kThird));
  }
}

TEST_CASE("star associativity sampled in two dimensions") {
  // Symbolic triples sampled from the degree <= 2 basis (n = 2) and the
  // degree <= 3 basis (n = 1).
  std::mt19937_64 rng(211);
  for (int n = 1; n <= 2; ++n) {
    int degree = n == 1 ? 3 : 2;
    auto keys = indices_up_to_total(n, degree);
    std::vector<DiscPoly> basis;
    for (const auto& P : keys) {
      for (const auto& Q : keys) basis.push_back(DiscPoly::fundamental(n, P, Q));
    }
    std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
    for (int iter = 0; iter < 25; ++iter) {
      const DiscPoly& a = basis[pick(rng)];
      const DiscPoly& b = basis[pick(rng)];
      const DiscPoly& c = basis[pick(rng)];
      CHECK(star(star(a, b, kSym), c, kSym) == star(a, star(b, c, kSym), kSym));
    }
  }
}

TEST_CASE("basis dimension counts") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = 0; m <= 4; ++m) {
      auto all = indices_up_to_total(n, m);
      mpz_class expect = binomial(static_cast<unsigned>(n + m), static_cast<unsigned>(m));
      CHECK(mpz_class(static_cast<long>(all.size() * all.size())) == expect * expect);
    }
  }
}

TEST_CASE("reduction norm estimates with constructive constants") {
  // Finite hbar range K = {1/2, 1/4, 1/3, 1/8}; r_max = 1, r_min = 1/4.
  std::vector<Rat> hbars = {make_rat(1, 2), make_rat(1, 4), make_rat(1, 3), make_rat(1, 8)};
  double r_max = 1.0, r_min = 0.25;
  unsigned m_max = 12;
  double alpha = 1e300, omega = 0;
  for (const Rat& h : hbars) {
    Rat z0 = Rat(1) / (2 * h);
    for (unsigned k = 0; k < m_max; ++k) {
      double q = Rat((z0 + static_cast<long>(k)) / (static_cast<long>(k) + 1)).get_d();
      alpha = std::min(alpha, q);
      omega = std::max(omega, q);
    }
  }
  std::mt19937_64 rng(97);
  for (int n = 1; n <= 2; ++n) {
    double rho = 1.25;
    double rho_fwd = rho * std::sqrt(omega * r_max * (1 + n));
    double rho_bwd = std::max(2.0 * rho * rho / (r_min * alpha), 1.0);
    for (const Rat& h : hbars) {
      HMode mode = HMode::fixed(h);
      for (int iter = 0; iter < 3; ++iter) {
        DiscPoly b = random_disc_poly(n, 2, rng);
        AmbientPoly a(n);
        // Random invariant ambient polynomial.
        for (const auto& P : indices_up_to_total(n + 1, 2)) {
          for (const auto& Q : indices_up_to_total(n + 1, 2)) {
            if (P.total() != Q.total()) continue;
            std::uniform_int_distribution<int> num(-3, 3);
            a.add_term(P, Q, Coeff(QScalar(Rat(num(rng)))));
          }
        }
        CHECK(norm_disc(reduce(a, mode), rho) <= norm_ambient(a, rho_fwd) * (1 + 1e-9));
        CHECK(norm_ambient(unreduce(b, mode), rho) <= norm_disc(b, rho_bwd) * (1 + 1e-9));
      }
    }
  }
}
