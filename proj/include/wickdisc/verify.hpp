#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "wickdisc/analytic.hpp"

namespace wickdisc {

/// Finite point set standing in for a compact subset of the doubled disc,
/// together with the derived radius 2 + max |f_{E_mu,E_nu}| used by the
/// semiclassical estimates.
struct CompactSample {
  std::vector<ChartPoint> points;
  double rho() const;
};

CompactSample default_compact_sample(int n, int count, std::uint64_t seed);

/// Machine-readable suite outcome. Deterministic given seed and configuration,
/// except for the runtime field.
struct Report {
  std::string suite;
  bool passed = false;
  std::uint64_t seed = 0;
  double runtime_ms = 0.0;
  nlohmann::json details;

  nlohmann::json to_json(bool include_runtime = true) const;
  std::string to_json_line(bool include_runtime = true) const;
};

/// Gram matrix G[(P,Q),(R,S)] = delta_w(f_{r,P,Q}^* star f_{r,R,S}) over all
/// keys with max(|P|,|Q|) <= max_degree; passes iff the minimal eigenvalue is
/// >= -1e-10. Point components are exact rationals inside the open disc.
Report check_positivity_gram(const std::vector<QScalar>& w, const QScalar& hbar, int max_degree);

/// For each hbar in the grid, the sup over the sample of |a star b - a b| and
/// of |i/hbar [a,b] - {a,b}|, checked against the constructive bounds
/// 2 hbar 2^{1+n} ||a|| ||b|| and 16 hbar 2^{1+n} ||a|| ||b|| (norms at 4 rho)
/// plus a log-log slope fit within [0.9, 1.1].
Report classical_limit_scan(const DiscPoly& a, const DiscPoly& b, const CompactSample& sample,
                            const std::vector<Rat>& hbar_grid);

/// Symbolic star product of a and b; aggregates the hbar-poles of every
/// coefficient. Passes iff all finite poles sit at -1/(2m) with order 1.
Report pole_report(const DiscPoly& a, const DiscPoly& b);

struct InequalityRanges {
  int product_ratio_max = 12;      // p, s range
  int tail_t_max = 12;             // t range
  int tail_k0_max = 6;             // k0 range
  unsigned pochhammer_m_max = 30;  // m range for the growth bounds
};

/// Exact rational verification of the three inequality families over finite
/// ranges: the product-ratio bound, the tail-weight bound, and the two-sided
/// Pochhammer growth bound on sampled hbar intervals.
Report check_inequalities(const InequalityRanges& ranges = {});

/// Star powers of f_{r,0,1} at n = 1, hbar = 1/2: a^{star m} = m! f_{r,0,m}
/// exactly, and the partial sums of the exponential series at w = 1/sqrt(2)
/// grow geometrically with ratio -> sqrt(2).
Report check_divergence(int m_max);

/// Filtration dimension counts against C(n+m,m)^2 and the cumulative ambient
/// invariant-monomial counts.
Report check_dimensions(int n, int m_max);

/// The core cross-implementation test: the direct star formula against
/// reduce(wick_star(unreduce(a), unreduce(b))), exact in either mode.
Report differential_oracle(const DiscPoly& a, const DiscPoly& b, const HMode& mode);

DiscPoly random_disc_poly(int n, int max_degree, std::mt19937_64& rng);

/// Aggregate suites over standard configurations; used by the CLI `check`
/// subcommand and the acceptance run.

/// All fundamental pairs with max(|P|,|Q|) <= max_degree through both product
/// routes.
Report differential_oracle_sweep(int n, int max_degree, const HMode& mode);

/// Random coefficient pairs against the semiclassical bounds on the grid
/// hbar = 2^{-k}/2, k = 1..12.
Report classical_limit_sweep(int n, int pairs, int max_degree, int sample_points,
                             std::uint64_t seed);

/// Gram positivity at w in {0, 3/10, (6/10)i, 9/10} and hbar in
/// {0, 1/10, 1/2, 1} for n = 1.
Report positivity_default_sweep(int max_degree);

/// Pole structure of all fundamental pairs up to the degree: only simple
/// poles at hbar = -1/(2m) may occur.
Report pole_sweep(int n, int max_degree);

}  // namespace wickdisc
