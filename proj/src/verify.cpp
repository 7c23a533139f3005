#include "wickdisc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include <Eigen/Dense>

namespace wickdisc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<TermKey> basis_keys(int n, int max_degree) {
  std::vector<TermKey> keys;
  auto all = indices_up_to_total(n, max_degree);
  for (const auto& P : all) {
    for (const auto& Q : all) keys.push_back(TermKey{P, Q});
  }
  std::sort(keys.begin(), keys.end(), [](const TermKey& a, const TermKey& b) {
    return TermKeyLess{}(a, b);
  });
  return keys;
}

/// Least-squares slope of log(sup) against log(hbar), ignoring zero sups.
double loglog_slope(const std::vector<double>& hbars, const std::vector<double>& sups) {
  std::vector<double> xs, ys;
  for (size_t i = 0; i < hbars.size(); ++i) {
    if (sups[i] > 0) {
      xs.push_back(std::log(hbars[i]));
      ys.push_back(std::log(sups[i]));
    }
  }
  if (xs.size() < 2) return 1.0;  // identically-zero deviation: trivially linear
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0, den = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

}  // namespace

double CompactSample::rho() const {
  if (points.empty()) throw std::invalid_argument("empty compact sample");
  int n = points.front().n();
  double m = 0;
  for (const auto& pt : points) {
    for (int mu = 0; mu <= n; ++mu) {
      for (int nu = 0; nu <= n; ++nu) {
        m = std::max(m, std::abs(eval_fhat(MultiIndex::unit(n + 1, mu),
                                           MultiIndex::unit(n + 1, nu), pt)));
      }
    }
  }
  return 2.0 + m;
}

CompactSample default_compact_sample(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CompactSample sample;
  for (int k = 0; k < count; ++k) {
    std::vector<std::complex<double>> x(static_cast<size_t>(n)), y(static_cast<size_t>(n));
    if (k % 2 == 0) {
      // Diagonal point: y = conj(x), inside the disc.
      double cap = 0.65 / std::sqrt(static_cast<double>(n));
      for (auto& xi : x) xi = {cap * unit(rng), cap * unit(rng)};
      for (size_t i = 0; i < x.size(); ++i) y[i] = std::conj(x[i]);
    } else {
      // Generic off-diagonal point with |x.y| well below 1.
      double cap = 0.45 / std::sqrt(static_cast<double>(n));
      for (auto& xi : x) xi = {cap * unit(rng), cap * unit(rng)};
      for (auto& yi : y) yi = {cap * unit(rng), cap * unit(rng)};
    }
    ChartPoint pt;
    pt.chart = ChartId::Std;
    pt.x = std::move(x);
    pt.y = std::move(y);
    sample.points.push_back(std::move(pt));
  }
  return sample;
}

nlohmann::json Report::to_json(bool include_runtime) const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed;
  j["seed"] = seed;
  if (include_runtime) j["runtime_ms"] = runtime_ms;
  j["details"] = details;
  return j;
}

std::string Report::to_json_line(bool include_runtime) const {
  return to_json(include_runtime).dump();
}

namespace {

/// Exact positive-semidefiniteness of a Hermitian matrix of Gaussian
/// rationals via the LDL^T pivoting scheme: every Schur-complement pivot must
/// be a nonnegative real, and a zero pivot forces its whole row to vanish.
bool exact_psd(std::vector<std::vector<QScalar>> a) {
  size_t dim = a.size();
  for (size_t k = 0; k < dim; ++k) {
    const QScalar& piv = a[k][k];
    if (piv.im != 0 || piv.re < 0) return false;
    if (piv.re == 0) {
      for (size_t j = k + 1; j < dim; ++j) {
        if (!a[k][j].is_zero() || !a[j][k].is_zero()) return false;
      }
      continue;
    }
    for (size_t i = k + 1; i < dim; ++i) {
      for (size_t j = k + 1; j < dim; ++j) {
        a[i][j] = a[i][j] - a[i][k] * a[k][j] / piv;
      }
    }
  }
  return true;
}

}  // namespace

Report check_positivity_gram(const std::vector<QScalar>& w, const QScalar& hbar, int max_degree) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "positivity-gram";
  int n = static_cast<int>(w.size());
  Rat ww(0);
  for (const auto& wi : w) ww += wi.norm2();
  if (!(ww < 1)) throw std::domain_error("positivity check requires a point in the open disc");
  if (!hbar.is_real() || hbar.re < 0) {
    throw std::domain_error("positivity check requires hbar >= 0");
  }
  HMode mode = HMode::fixed(hbar);
  auto keys = basis_keys(n, max_degree);
  size_t dim = keys.size();
  std::vector<std::vector<QScalar>> gram(dim, std::vector<QScalar>(dim));
  for (size_t r = 0; r < dim; ++r) {
    DiscPoly fr = involution(DiscPoly::fundamental(n, keys[r].P, keys[r].Q));
    for (size_t c = 0; c < dim; ++c) {
      DiscPoly fc = DiscPoly::fundamental(n, keys[c].P, keys[c].Q);
      gram[r][c] = eval_disc_exact(star(fr, fc, mode), w);
    }
  }
  // Diagonal equilibration before the eigensolve: the congruence
  // D G D preserves semidefiniteness while keeping entries O(1), so the
  // tolerance is meaningful even when the raw matrix norm is large.
  std::vector<double> scale(dim, 1.0);
  for (size_t i = 0; i < dim; ++i) {
    double d = gram[i][i].abs();
    if (d > 0) scale[i] = 1.0 / std::sqrt(d);
  }
  Eigen::MatrixXcd scaled(static_cast<int>(dim), static_cast<int>(dim));
  Eigen::MatrixXcd raw(static_cast<int>(dim), static_cast<int>(dim));
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < dim; ++c) {
      std::complex<double> v = gram[r][c].to_complex();
      raw(static_cast<int>(r), static_cast<int>(c)) = v;
      scaled(static_cast<int>(r), static_cast<int>(c)) = v * scale[r] * scale[c];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(scaled);
  double min_eig = solver.eigenvalues().minCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> raw_solver(raw);
  double min_eig_raw = raw_solver.eigenvalues().minCoeff();
  bool certified = exact_psd(gram);
  rep.passed = min_eig >= -1e-10;
  rep.details["dimension"] = dim;
  rep.details["min_eigenvalue"] = min_eig;
  rep.details["min_eigenvalue_raw"] = min_eig_raw;
  rep.details["exact_psd"] = certified;
  rep.details["hbar"] = hbar.to_string();
  rep.details["max_degree"] = max_degree;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report classical_limit_scan(const DiscPoly& a, const DiscPoly& b, const CompactSample& sample,
                            const std::vector<Rat>& hbar_grid) {
  auto t0 = Clock::now();
  if (hbar_grid.empty()) throw std::invalid_argument("empty hbar grid");
  Report rep;
  rep.suite = "classical-limit";
  int n = a.n();
  double rho = sample.rho();
  double norm_a = norm_disc(a, 4.0 * rho);
  double norm_b = norm_disc(b, 4.0 * rho);
  double bound_scale = std::pow(2.0, 1 + n) * norm_a * norm_b;

  DiscPoly pointwise = mul_disc(a, b);
  DiscPoly bracket = poisson_disc(a, b);
  std::vector<double> hbars, sup_prod, sup_comm;
  bool bounds_ok = true;
  for (const Rat& h : hbar_grid) {
    if (!(h > 0 && h <= Rat(1, 2))) {
      throw std::invalid_argument("hbar grid must lie in (0, 1/2]");
    }
    HMode mode = HMode::fixed(h);
    DiscPoly prod_dev = star(a, b, mode) - pointwise;
    DiscPoly comm = star(a, b, mode) - star(b, a, mode);
    // i/hbar [a,b] - {a,b}
    DiscPoly comm_dev = comm.scaled(Coeff(QScalar::i() / QScalar(h))) - bracket;
    double s1 = 0, s2 = 0;
    for (const auto& pt : sample.points) {
      s1 = std::max(s1, std::abs(eval_discpoly_at(prod_dev, pt)));
      s2 = std::max(s2, std::abs(eval_discpoly_at(comm_dev, pt)));
    }
    double hd = h.get_d();
    hbars.push_back(hd);
    sup_prod.push_back(s1);
    sup_comm.push_back(s2);
    double slack = 1.0 + 1e-9;
    if (s1 > 2.0 * hd * bound_scale * slack) bounds_ok = false;
    if (s2 > 16.0 * hd * bound_scale * slack) bounds_ok = false;
  }
  double slope_prod = loglog_slope(hbars, sup_prod);
  double slope_comm = loglog_slope(hbars, sup_comm);
  bool slope_ok = std::abs(slope_prod - 1.0) <= 0.1 && std::abs(slope_comm - 1.0) <= 0.1;
  rep.passed = bounds_ok && slope_ok;
  rep.details["rho"] = rho;
  rep.details["hbar"] = hbars;
  rep.details["sup_product_deviation"] = sup_prod;
  rep.details["sup_commutator_deviation"] = sup_comm;
  rep.details["product_bound_scale"] = 2.0 * bound_scale;
  rep.details["commutator_bound_scale"] = 16.0 * bound_scale;
  rep.details["slope_product"] = slope_prod;
  rep.details["slope_commutator"] = slope_comm;
  rep.details["bounds_ok"] = bounds_ok;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report pole_report(const DiscPoly& a, const DiscPoly& b) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "pole-structure";
  DiscPoly prod = star(a, b, HMode::symbolic());
  bool ok = true;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [key, c] : prod.terms()) {
    SymScalar s = c.sym();
    nlohmann::json entry;
    entry["P"] = key.P.entries();
    entry["Q"] = key.Q.entries();
    nlohmann::json poles = nlohmann::json::array();
    for (const RationalFnZ* part : {&s.re, &s.im}) {
      HbarPoleReport pr = poles_in_hbar(*part);
      if (!pr.clean()) ok = false;
      for (const auto& anomaly : pr.anomalies) {
        entry["anomalies"].push_back(anomaly);
      }
      for (const auto& pole : pr.poles) {
        if (pole.order != 1) ok = false;
        nlohmann::json pj;
        pj["hbar"] = rat_to_string(pole.hbar_location);
        pj["m"] = pole.m;
        pj["order"] = pole.order;
        pj["residue_z"] = rat_to_string(pole.residue_z);
        if (pole.residue_hbar_valid) pj["residue_hbar"] = rat_to_string(pole.residue_hbar);
        poles.push_back(pj);
      }
      if (pr.infinity_order > 0) entry["hbar_infinity_order"] = pr.infinity_order;
    }
    entry["poles"] = poles;
    coeffs.push_back(entry);
  }
  rep.passed = ok;
  rep.details["coefficients"] = coeffs;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report check_inequalities(const InequalityRanges& ranges) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "inequalities";
  bool ok = true;
  std::vector<Rat> xs = {Rat(0), make_rat(1, 7), make_rat(1, 3), make_rat(1, 2), Rat(1)};
  long failures = 0;
  long checks = 0;

  // Product-ratio bound: 1 <= prod_{i<p+s}(1+xi) / (prod_{j<p} prod_{k<s}) <= 1 + x 2^{p+s}.
  auto rising1 = [](const Rat& x, int m) {
    Rat r(1);
    for (int i = 0; i < m; ++i) r *= 1 + x * i;
    return r;
  };
  for (int p = 0; p <= ranges.product_ratio_max; ++p) {
    for (int s = 0; s <= ranges.product_ratio_max; ++s) {
      for (const Rat& x : xs) {
        Rat ratio = rising1(x, p + s) / (rising1(x, p) * rising1(x, s));
        Rat upper = 1 + x * qpow(QScalar(2), static_cast<unsigned>(p + s)).re;
        ++checks;
        if (!(ratio >= 1 && ratio <= upper)) ++failures;
      }
    }
  }

  // Tail-weight bound: x^t t! / prod_{k=k0}^{k0+t-1}(1+xk) <= x^m 2^t m! for m <= t.
  for (int t = 0; t <= ranges.tail_t_max; ++t) {
    for (int k0 = 0; k0 <= ranges.tail_k0_max; ++k0) {
      for (const Rat& x : xs) {
        Rat den(1);
        for (int k = k0; k < k0 + t; ++k) den *= 1 + x * k;
        Rat lhs = Rat(factorial(static_cast<unsigned>(t)));
        for (int i = 0; i < t; ++i) lhs *= x;
        lhs /= den;
        for (int m = 0; m <= t; ++m) {
          Rat rhs = Rat(factorial(static_cast<unsigned>(m))) *
                    qpow(QScalar(2), static_cast<unsigned>(t)).re;
          for (int i = 0; i < m; ++i) rhs *= x;
          ++checks;
          if (!(lhs <= rhs)) ++failures;
        }
      }
    }
  }

  // Two-sided Pochhammer growth on sampled hbar ranges: with
  // alpha = min_k (z0+k)/(k+1) and omega = max_k over the samples,
  // alpha^m m! <= (z0)_m <= omega^m m! for m up to the range bound.
  std::vector<Rat> hbar_samples = {make_rat(1, 2), make_rat(1, 3), make_rat(1, 4),
                                   make_rat(1, 8), make_rat(2, 3), Rat(1)};
  unsigned mm = ranges.pochhammer_m_max;
  Rat alpha, omega;
  bool first = true;
  for (const Rat& h : hbar_samples) {
    Rat z0 = Rat(1) / (2 * h);
    for (unsigned k = 0; k < mm; ++k) {
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
  for (const Rat& h : hbar_samples) {
    Rat z0 = Rat(1) / (2 * h);
    Rat poch(1);
    Rat alpha_pow(1), omega_pow(1);
    for (unsigned m = 1; m <= mm; ++m) {
      poch *= z0 + static_cast<long>(m - 1);
      alpha_pow *= alpha;
      omega_pow *= omega;
      Rat fac{factorial(m)};
      ++checks;
      if (!(alpha_pow * fac <= poch && poch <= omega_pow * fac)) ++failures;
    }
  }

  ok = failures == 0;
  rep.passed = ok;
  rep.details["checks"] = checks;
  rep.details["failures"] = failures;
  rep.details["alpha"] = rat_to_string(alpha);
  rep.details["omega"] = rat_to_string(omega);
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report check_divergence(int m_max) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "divergence-probe";
  HMode mode = HMode::fixed(make_rat(1, 2));
  DiscPoly a = DiscPoly::fundamental(1, MultiIndex{0}, MultiIndex{1});
  DiscPoly power = DiscPoly::constant(1, Coeff(1));
  bool powers_ok = true;
  for (int m = 1; m <= m_max; ++m) {
    power = star(power, a, mode);
    DiscPoly expected = DiscPoly::fundamental(1, MultiIndex{0}, MultiIndex{m},
                                              Coeff(QScalar(Rat(factorial(static_cast<unsigned>(m))))));
    if (!(power == expected)) powers_ok = false;
  }
  // Partial sums of sum_m f_{r,0,m} at w = 1/sqrt(2): S_M = sum 2^{m/2}.
  int big_m = std::max(m_max, 41);
  std::vector<double> ratios;
  double s = 0;
  double prev = 0;
  for (int m = 0; m <= big_m; ++m) {
    s += std::pow(2.0, m / 2.0);
    if (m > 0) ratios.push_back(s / prev);
    prev = s;
  }
  double final_ratio = ratios.back();
  bool ratio_ok = std::abs(final_ratio - std::sqrt(2.0)) < 1e-3;
  rep.passed = powers_ok && ratio_ok;
  rep.details["m_max"] = m_max;
  rep.details["powers_exact"] = powers_ok;
  rep.details["final_partial_sum_ratio"] = final_ratio;
  rep.details["ratio_target"] = std::sqrt(2.0);
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report check_dimensions(int n, int m_max) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "dimensions";
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  for (int m = 0; m <= m_max; ++m) {
    // Fundamental keys with max(|P|,|Q|) <= m.
    auto all = indices_up_to_total(n, m);
    long fundamental = static_cast<long>(all.size()) * static_cast<long>(all.size());
    mpz_class expected = binomial(static_cast<unsigned>(n + m), static_cast<unsigned>(m));
    expected *= expected;
    // Ambient invariant monomials d_{P,Q} with |P| = |Q| <= m.
    mpz_class ambient = 0;
    mpz_class ambient_expected = 0;
    for (int k = 0; k <= m; ++k) {
      long layer = static_cast<long>(indices_with_total(n + 1, k).size());
      ambient += mpz_class(layer) * mpz_class(layer);
      mpz_class c = binomial(static_cast<unsigned>(n + k), static_cast<unsigned>(k));
      ambient_expected += c * c;
    }
    bool row_ok = (mpz_class(fundamental) == expected) && (ambient == ambient_expected);
    if (!row_ok) ok = false;
    nlohmann::json row;
    row["m"] = m;
    row["fundamental_count"] = fundamental;
    row["fundamental_expected"] = expected.get_str();
    row["ambient_count"] = ambient.get_str();
    row["ambient_expected"] = ambient_expected.get_str();
    rows.push_back(row);
  }
  rep.passed = ok;
  rep.details["n"] = n;
  rep.details["rows"] = rows;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report differential_oracle(const DiscPoly& a, const DiscPoly& b, const HMode& mode) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "differential-oracle";
  DiscPoly direct = star(a, b, mode);
  DiscPoly pipeline = reduce(wick_star(unreduce(a, mode), unreduce(b, mode), mode), mode);
  rep.passed = direct == pipeline;
  rep.details["mode"] = mode.is_symbolic() ? "symbolic" : mode.hbar().to_string();
  rep.details["terms_direct"] = direct.terms().size();
  rep.details["terms_pipeline"] = pipeline.terms().size();
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report differential_oracle_sweep(int n, int max_degree, const HMode& mode) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "differential-oracle-sweep";
  auto keys = basis_keys(n, max_degree);
  long checked = 0;
  long failed = 0;
  for (const auto& ka : keys) {
    DiscPoly a = DiscPoly::fundamental(n, ka.P, ka.Q);
    AmbientPoly ua = unreduce(a, mode);
    for (const auto& kb : keys) {
      DiscPoly b = DiscPoly::fundamental(n, kb.P, kb.Q);
      DiscPoly direct = star(a, b, mode);
      DiscPoly pipeline = reduce(wick_star(ua, unreduce(b, mode), mode), mode);
      ++checked;
      if (!(direct == pipeline)) ++failed;
    }
  }
  rep.passed = failed == 0;
  rep.details["n"] = n;
  rep.details["max_degree"] = max_degree;
  rep.details["mode"] = mode.is_symbolic() ? "symbolic" : mode.hbar().to_string();
  rep.details["pairs_checked"] = checked;
  rep.details["pairs_failed"] = failed;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report classical_limit_sweep(int n, int pairs, int max_degree, int sample_points,
                             std::uint64_t seed) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "classical-limit-sweep";
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  CompactSample sample = default_compact_sample(n, sample_points, seed + 1);
  std::vector<Rat> grid;
  for (int k = 1; k <= 12; ++k) grid.push_back(make_rat(1, 2L << k));
  bool ok = true;
  nlohmann::json runs = nlohmann::json::array();
  for (int p = 0; p < pairs; ++p) {
    DiscPoly a = random_disc_poly(n, max_degree, rng);
    DiscPoly b = random_disc_poly(n, max_degree, rng);
    Report one = classical_limit_scan(a, b, sample, grid);
    if (!one.passed) ok = false;
    nlohmann::json entry;
    entry["passed"] = one.passed;
    entry["slope_product"] = one.details["slope_product"];
    entry["slope_commutator"] = one.details["slope_commutator"];
    entry["bounds_ok"] = one.details["bounds_ok"];
    runs.push_back(entry);
  }
  rep.passed = ok;
  rep.details["n"] = n;
  rep.details["pairs"] = pairs;
  rep.details["max_degree"] = max_degree;
  rep.details["sample_points"] = sample_points;
  rep.details["runs"] = runs;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report positivity_default_sweep(int max_degree) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "positivity-sweep";
  std::vector<std::vector<QScalar>> points = {
      {QScalar(Rat(0))},
      {QScalar(make_rat(3, 10))},
      {QScalar(Rat(0), make_rat(6, 10))},
      {QScalar(make_rat(9, 10))},
  };
  std::vector<QScalar> hbars = {QScalar(Rat(0)), QScalar(make_rat(1, 10)),
                                QScalar(make_rat(1, 2)), QScalar(Rat(1))};
  bool ok = true;
  double worst = 0;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& w : points) {
    for (const auto& h : hbars) {
      Report one = check_positivity_gram(w, h, max_degree);
      double me = one.details["min_eigenvalue"].get<double>();
      worst = std::min(worst, me);
      if (!one.passed) ok = false;
      nlohmann::json row;
      row["w"] = w[0].to_string();
      row["hbar"] = h.to_string();
      row["min_eigenvalue"] = me;
      row["exact_psd"] = one.details["exact_psd"];
      row["passed"] = one.passed;
      rows.push_back(row);
    }
  }
  rep.passed = ok;
  rep.details["max_degree"] = max_degree;
  rep.details["worst_min_eigenvalue"] = worst;
  rep.details["rows"] = rows;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

Report pole_sweep(int n, int max_degree) {
  auto t0 = Clock::now();
  Report rep;
  rep.suite = "pole-sweep";
  auto keys = basis_keys(n, max_degree);
  bool ok = true;
  long pairs = 0;
  unsigned max_order = 0;
  std::set<unsigned> locations;
  for (const auto& ka : keys) {
    DiscPoly a = DiscPoly::fundamental(n, ka.P, ka.Q);
    for (const auto& kb : keys) {
      DiscPoly b = DiscPoly::fundamental(n, kb.P, kb.Q);
      DiscPoly prod = star(a, b, HMode::symbolic());
      ++pairs;
      for (const auto& [key, c] : prod.terms()) {
        SymScalar s = c.sym();
        for (const RationalFnZ* part : {&s.re, &s.im}) {
          HbarPoleReport pr = poles_in_hbar(*part);
          if (!pr.clean()) ok = false;
          for (const auto& pole : pr.poles) {
            locations.insert(pole.m);
            max_order = std::max(max_order, pole.order);
            if (pole.order != 1) ok = false;
          }
        }
      }
    }
  }
  rep.passed = ok;
  rep.details["n"] = n;
  rep.details["max_degree"] = max_degree;
  rep.details["pairs"] = pairs;
  rep.details["max_pole_order"] = max_order;
  nlohmann::json locs = nlohmann::json::array();
  for (unsigned m : locations) locs.push_back(m);
  rep.details["pole_m_values"] = locs;
  rep.runtime_ms = ms_since(t0);
  return rep;
}

DiscPoly random_disc_poly(int n, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> keep(0, 2);
  DiscPoly out(n);
  auto all = indices_up_to_total(n, max_degree);
  for (const auto& P : all) {
    for (const auto& Q : all) {
      if (keep(rng) == 0) continue;  // sparsify
      QScalar c(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
      out.add_term(P, Q, Coeff(c));
    }
  }
  if (out.is_zero()) out.add_term(MultiIndex::zero(n), MultiIndex::zero(n), Coeff(1));
  return out;
}

}  // namespace wickdisc
