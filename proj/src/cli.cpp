#include "wickdisc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "wickdisc/io.hpp"

namespace wickdisc::cli {

namespace {

using nlohmann::json;

HMode parse_hmode(const std::string& s) {
  if (s == "symbolic") return HMode::symbolic();
  return HMode::fixed(parse_rat(s));
}

json parse_inline_json(const std::string& s) {
  // Accept inline JSON or @file.
  if (!s.empty() && s[0] == '@') {
    std::ifstream in(s.substr(1));
    if (!in) throw std::runtime_error("cannot open '" + s.substr(1) + "'");
    json j;
    in >> j;
    return j;
  }
  return json::parse(s);
}

void emit(const json& j, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << j.dump(2) << "\n";
  } else {
    std::ofstream f(output);
    if (!f) throw std::runtime_error("cannot open '" + output + "' for writing");
    f << j.dump(2) << "\n";
  }
}

const DiscPoly& as_disc(const PolyValue& v, const std::string& which) {
  if (!std::holds_alternative<DiscPoly>(v)) {
    throw std::runtime_error(which + ": expected a disc-space document");
  }
  return std::get<DiscPoly>(v);
}

/// Exact rational point parser: [["re","im"], ...] with rational strings, or
/// plain numbers (converted exactly from their binary value).
std::vector<QScalar> parse_rational_point(const json& j) {
  if (!j.is_array()) throw std::runtime_error("point must be an array of [re, im] pairs");
  std::vector<QScalar> w;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw std::runtime_error("point components serialize as [re, im]");
    }
    auto part = [](const json& v) {
      if (v.is_string()) return parse_rat(v.get<std::string>());
      return Rat(v.get<double>());
    };
    w.emplace_back(part(e[0]), part(e[1]));
  }
  return w;
}

struct CommonOpts {
  std::string hbar = "symbolic";
  std::string output;
  std::string point;
  int n = 1;
  int max_degree = 4;
  double radius = 0.0;
  int nodes = 64;
  std::uint64_t seed = 1;
  bool allow_n3 = false;
};

int dispatch(CLI::App& app, CommonOpts& opt, const std::vector<std::string>& files,
             const std::string& expr_text, const std::string& chart_str,
             const std::string& matrix_str, double rho, const std::string& suite,
             std::ostream& out) {
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  auto load = [&](size_t i) {
    if (files.size() <= i) throw std::runtime_error(name + ": missing input document");
    return read_poly(files[i]);
  };
  auto emit_poly = [&](const PolyValue& v) { emit(poly_to_json(v), opt.output, out); };
  auto emit_report = [&](const Report& rep) {
    out << rep.to_json_line() << "\n";
    return rep.passed ? 0 : 1;
  };

  if (name == "star") {
    PolyValue a = load(0), b = load(1);
    HMode mode = parse_hmode(opt.hbar);
    if (std::holds_alternative<DiscPoly>(a)) {
      emit_poly(PolyValue(star(as_disc(a, "a"), as_disc(b, "b"), mode)));
    } else {
      emit_poly(PolyValue(wick_star(std::get<AmbientPoly>(a), std::get<AmbientPoly>(b), mode)));
    }
    return 0;
  }
  if (name == "mul") {
    PolyValue a = load(0), b = load(1);
    if (std::holds_alternative<DiscPoly>(a)) {
      emit_poly(PolyValue(mul_disc(as_disc(a, "a"), as_disc(b, "b"))));
    } else {
      emit_poly(PolyValue(mul_ambient(std::get<AmbientPoly>(a), std::get<AmbientPoly>(b))));
    }
    return 0;
  }
  if (name == "reduce") {
    PolyValue a = load(0);
    if (!std::holds_alternative<AmbientPoly>(a)) {
      throw std::runtime_error("reduce expects an ambient-space document");
    }
    emit_poly(PolyValue(reduce(std::get<AmbientPoly>(a), parse_hmode(opt.hbar))));
    return 0;
  }
  if (name == "unreduce") {
    PolyValue a = load(0);
    emit_poly(PolyValue(unreduce(as_disc(a, "input"), parse_hmode(opt.hbar))));
    return 0;
  }
  if (name == "poisson") {
    PolyValue a = load(0), b = load(1);
    if (std::holds_alternative<DiscPoly>(a)) {
      emit_poly(PolyValue(poisson_disc(as_disc(a, "a"), as_disc(b, "b"))));
    } else {
      emit_poly(
          PolyValue(poisson_ambient(std::get<AmbientPoly>(a), std::get<AmbientPoly>(b))));
    }
    return 0;
  }
  if (name == "eval") {
    PolyValue av = load(0);
    const DiscPoly& a = as_disc(av, "input");
    if (opt.point.empty()) throw std::runtime_error("eval requires --point");
    json pj = parse_inline_json(opt.point);
    std::complex<double> value;
    if (pj.is_object() && pj.contains("chart")) {
      value = eval_discpoly_at(a, chart_point_from_json(pj));
    } else if (pj.is_object() && pj.contains("w")) {
      std::vector<QScalar> w = parse_rational_point(pj["w"]);
      value = eval_disc_exact(a, w).to_complex();
    } else {
      throw std::runtime_error("--point must be {\"chart\",...} or {\"w\": [[re,im],...]}");
    }
    json j;
    j["value"] = {value.real(), value.imag()};
    emit(j, opt.output, out);
    return 0;
  }
  if (name == "act") {
    PolyValue a = load(0);
    if (matrix_str.empty()) throw std::runtime_error("act requires --matrix");
    QMatrix m = qmatrix_from_json(parse_inline_json(matrix_str));
    GroupElement U(m);
    if (std::holds_alternative<DiscPoly>(a)) {
      emit_poly(PolyValue(act_mobius(U, std::get<DiscPoly>(a))));
    } else {
      emit_poly(PolyValue(act_ambient(U, std::get<AmbientPoly>(a))));
    }
    return 0;
  }
  if (name == "sigma") {
    PolyValue av = load(0);
    emit_poly(PolyValue(sigma_pullback(as_disc(av, "input"))));
    return 0;
  }
  if (name == "norm") {
    PolyValue a = load(0);
    double value = std::holds_alternative<DiscPoly>(a)
                       ? norm_disc(std::get<DiscPoly>(a), rho)
                       : norm_ambient(std::get<AmbientPoly>(a), rho);
    json j;
    j["rho"] = rho;
    j["norm"] = value;
    emit(j, opt.output, out);
    return 0;
  }
  if (name == "expand") {
    if (expr_text.empty()) throw std::runtime_error("expand requires --expr");
    // Grid cost is nodes^{2n}; n = 3 only behind the explicit opt-in flag.
    if (opt.n > 3 || (opt.n == 3 && !opt.allow_n3)) {
      throw std::runtime_error(
          "expansion cost grows as nodes^(2n); n <= 2 by default, n = 3 with --allow-n3");
    }
    ChartId chart = chart_from_name(chart_str);
    HoloExpr expr = parse_expr(expr_text, chart);
    double radius = opt.radius > 0 ? opt.radius : 0.5 / std::sqrt(static_cast<double>(opt.n));
    TruncatedSeries series =
        expand(make_evaluator(expr), opt.n, opt.max_degree, radius, opt.nodes);
    json doc = poly_to_json(series.body);
    doc["max_degree"] = series.max_degree;
    doc["tail_bound"] = series.tail_bound;
    doc["radius"] = series.radius;
    doc["nodes"] = series.nodes;
    emit(doc, opt.output, out);
    return 0;
  }
  if (name == "poles") {
    PolyValue av = load(0), bv = load(1);
    const DiscPoly& a = as_disc(av, "a");
    const DiscPoly& b = as_disc(bv, "b");
    return emit_report(pole_report(a, b));
  }
  if (name == "limit-scan") {
    PolyValue av = load(0), bv = load(1);
    const DiscPoly& a = as_disc(av, "a");
    const DiscPoly& b = as_disc(bv, "b");
    CompactSample sample = default_compact_sample(a.n(), 16, opt.seed);
    std::vector<Rat> grid;
    for (int k = 1; k <= 12; ++k) grid.push_back(make_rat(1, 2L << k));
    Report rep = classical_limit_scan(a, b, sample, grid);
    rep.seed = opt.seed;
    return emit_report(rep);
  }
  if (name == "gram") {
    if (opt.point.empty()) throw std::runtime_error("gram requires --point");
    std::vector<QScalar> w = parse_rational_point(parse_inline_json(opt.point));
    HMode mode = parse_hmode(opt.hbar);
    if (mode.is_symbolic()) throw std::runtime_error("gram requires a fixed rational --hbar");
    return emit_report(check_positivity_gram(w, mode.hbar(), opt.max_degree));
  }
  if (name == "check") {
    std::vector<Report> reports;
    auto run_suite = [&](const std::string& s) {
      if (s == "dimensions") {
        reports.push_back(check_dimensions(opt.n, opt.max_degree));
      } else if (s == "inequalities") {
        reports.push_back(check_inequalities());
      } else if (s == "divergence") {
        reports.push_back(check_divergence(opt.max_degree));
      } else if (s == "oracle") {
        reports.push_back(differential_oracle_sweep(opt.n, opt.max_degree, parse_hmode(opt.hbar)));
      } else if (s == "limit") {
        reports.push_back(classical_limit_sweep(opt.n, 4, std::min(opt.max_degree, 2), 16, opt.seed));
      } else if (s == "gram") {
        reports.push_back(positivity_default_sweep(std::min(opt.max_degree, 3)));
      } else if (s == "poles") {
        reports.push_back(pole_sweep(opt.n, std::min(opt.max_degree, 3)));
      } else {
        throw std::runtime_error("unknown suite '" + s + "'");
      }
    };
    if (suite == "all") {
      for (const char* s :
           {"dimensions", "inequalities", "divergence", "oracle", "limit", "gram", "poles"}) {
        run_suite(s);
      }
    } else {
      run_suite(suite);
    }
    bool all_ok = true;
    for (const auto& rep : reports) {
      out << rep.to_json_line() << "\n";
      if (!rep.passed) all_ok = false;
    }
    return all_ok ? 0 : 1;
  }
  throw std::runtime_error("unhandled subcommand " + name);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Wick star products on the Poincare disc"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::vector<std::string> files;
  std::string expr_text, chart_str = "std", matrix_str, suite = "all";
  double rho = 1.0;

  auto add_common = [&](CLI::App* sub, bool wants_files) {
    if (wants_files) sub->add_option("files", files, "input polynomial documents");
    sub->add_option("--hbar", opt.hbar, "rational value like 1/2, or 'symbolic'");
    sub->add_option("--output", opt.output, "output file (default: stdout)");
    sub->add_option("--n", opt.n, "dimension");
    sub->add_option("--max-degree,--max", opt.max_degree, "degree bound");
    sub->add_option("--seed", opt.seed, "RNG seed for sampled suites");
  };

  add_common(app.add_subcommand("star", "star product of two documents"), true);
  add_common(app.add_subcommand("mul", "pointwise product"), true);
  add_common(app.add_subcommand("reduce", "deformed reduction to the disc"), true);
  add_common(app.add_subcommand("unreduce", "right inverse of the reduction"), true);
  add_common(app.add_subcommand("poisson", "Poisson bracket"), true);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate at a point");
  add_common(eval_cmd, true);
  eval_cmd->add_option("--point", opt.point, "chart point JSON, {\"w\": ...}, or @file");

  auto* act_cmd = app.add_subcommand("act", "symmetry action");
  add_common(act_cmd, true);
  act_cmd->add_option("--matrix", matrix_str, "group element JSON or @file");

  add_common(app.add_subcommand("sigma", "pullback of the disc involution (n=1)"), true);

  auto* norm_cmd = app.add_subcommand("norm", "weighted coefficient norm");
  add_common(norm_cmd, true);
  norm_cmd->add_option("--rho", rho, "norm radius");

  auto* expand_cmd = app.add_subcommand("expand", "basis expansion of an expression");
  add_common(expand_cmd, false);
  expand_cmd->add_option("--expr", expr_text, "holomorphic expression, e.g. exp(x1*y1)")
      ->required();
  expand_cmd->add_option("--chart", chart_str, "chart of the expression: std, p, q");
  expand_cmd->add_option("--radius", opt.radius, "quadrature radius");
  expand_cmd->add_option("--nodes", opt.nodes, "quadrature nodes per circle");
  expand_cmd->add_flag("--allow-n3", opt.allow_n3, "permit the n = 3 grid cost");

  add_common(app.add_subcommand("poles", "pole report for a symbolic star product"), true);
  add_common(app.add_subcommand("limit-scan", "semiclassical limit scan"), true);

  auto* gram_cmd = app.add_subcommand("gram", "Gram positivity at a disc point");
  add_common(gram_cmd, false);
  gram_cmd->add_option("--point", opt.point, "disc point [[re,im],...] with rational strings");

  auto* check_cmd = app.add_subcommand("check", "run verification suites");
  add_common(check_cmd, false);
  check_cmd->add_option("--suite", suite,
                        "dimensions|inequalities|divergence|oracle|limit|gram|poles|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return dispatch(app, opt, files, expr_text, chart_str, matrix_str, rho, suite, out);
  } catch (const ParseError& e) {
    err << "expression error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace wickdisc::cli
