#include "wickdisc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace wickdisc {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& msg) {
  throw std::runtime_error("document error at " + path + ": " + msg);
}

json mpz_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) {
    long l = v.get_si();
    if (l >= -(1LL << 53) && l <= (1LL << 53)) return json(l);
  }
  return json(v.get_str());
}

mpz_class mpz_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::exception&) {
      schema_error(path, "bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  schema_error(path, "expected an integer or integer string");
}

json ratfn_to_json(const RationalFnZ& f) {
  json j;
  j["num_coeffs"] = json::array();
  j["den_coeffs"] = json::array();
  for (const auto& c : f.num().coeffs()) j["num_coeffs"].push_back(mpz_to_json(c));
  for (const auto& c : f.den().coeffs()) j["den_coeffs"].push_back(mpz_to_json(c));
  return j;
}

RationalFnZ ratfn_from_json(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("num_coeffs") || !j.contains("den_coeffs")) {
    schema_error(path, "expected {num_coeffs, den_coeffs}");
  }
  std::vector<mpz_class> num, den;
  for (size_t k = 0; k < j["num_coeffs"].size(); ++k) {
    num.push_back(mpz_from_json(j["num_coeffs"][k], path + ".num_coeffs[" + std::to_string(k) + "]"));
  }
  for (size_t k = 0; k < j["den_coeffs"].size(); ++k) {
    den.push_back(mpz_from_json(j["den_coeffs"][k], path + ".den_coeffs[" + std::to_string(k) + "]"));
  }
  ZPoly d(std::move(den));
  if (d.is_zero()) schema_error(path, "zero denominator polynomial");
  return RationalFnZ(ZPoly(std::move(num)), std::move(d));
}

json coeff_to_json(const Coeff& c, bool symbolic_kind) {
  json j;
  if (!symbolic_kind) {
    QScalar q = c.numeric();
    j["re"] = rat_to_string(q.re);
    j["im"] = rat_to_string(q.im);
  } else {
    SymScalar s = c.sym();
    j["re"] = ratfn_to_json(s.re);
    j["im"] = ratfn_to_json(s.im);
  }
  return j;
}

Coeff coeff_from_json(const json& j, bool symbolic_kind, const std::string& path) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    schema_error(path, "expected {re, im}");
  }
  if (!symbolic_kind) {
    if (!j["re"].is_string() || !j["im"].is_string()) {
      schema_error(path, "gaussian_rational parts must be strings like \"3/4\"");
    }
    try {
      return Coeff(QScalar(parse_rat(j["re"].get<std::string>()),
                           parse_rat(j["im"].get<std::string>())));
    } catch (const std::exception& e) {
      schema_error(path, e.what());
    }
  }
  return Coeff(SymScalar(ratfn_from_json(j["re"], path + ".re"),
                         ratfn_from_json(j["im"], path + ".im")));
}

MultiIndex index_from_json(const json& j, int expected_len, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an index array");
  std::vector<int> e;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      schema_error(path, "index entries must be nonnegative integers");
    }
    e.push_back(v.get<int>());
  }
  if (static_cast<int>(e.size()) != expected_len) {
    schema_error(path, "index length " + std::to_string(e.size()) + " != expected " +
                           std::to_string(expected_len));
  }
  return MultiIndex(std::move(e));
}

template <typename Poly>
json poly_terms_to_json(const Poly& a, const char* space) {
  json doc;
  doc["n"] = a.n();
  doc["space"] = space;
  bool symbolic = a.has_symbolic_coeff();
  doc["coeff_kind"] = symbolic ? "rational_fn_z" : "gaussian_rational";
  json terms = json::array();
  for (const auto& [key, c] : a.terms()) {
    json t;
    t["P"] = key.P.entries();
    t["Q"] = key.Q.entries();
    t["coeff"] = coeff_to_json(c, symbolic);
    // Cosmetic rendering; the canonical stored form is always in z.
    if (symbolic) t["hbar_view"] = hbar_view(c.sym());
    terms.push_back(std::move(t));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

}  // namespace

json poly_to_json(const AmbientPoly& a) { return poly_terms_to_json(a, "ambient"); }
json poly_to_json(const DiscPoly& a) { return poly_terms_to_json(a, "disc"); }

json poly_to_json(const PolyValue& v) {
  return std::visit([](const auto& p) { return poly_to_json(p); }, v);
}

PolyValue poly_from_json(const json& doc) {
  if (!doc.is_object()) schema_error("$", "expected a document object");
  for (const char* field : {"n", "space", "coeff_kind", "terms"}) {
    if (!doc.contains(field)) schema_error("$", std::string("missing field '") + field + "'");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1) {
    schema_error("$.n", "n must be a positive integer");
  }
  int n = doc["n"].get<int>();
  std::string space = doc["space"].get<std::string>();
  std::string kind = doc["coeff_kind"].get<std::string>();
  if (space != "ambient" && space != "disc") schema_error("$.space", "must be ambient or disc");
  if (kind != "gaussian_rational" && kind != "rational_fn_z") {
    schema_error("$.coeff_kind", "must be gaussian_rational or rational_fn_z");
  }
  bool symbolic = kind == "rational_fn_z";
  bool ambient = space == "ambient";
  int index_len = ambient ? n + 1 : n;
  AmbientPoly ap(n);
  DiscPoly dp(n);
  if (!doc["terms"].is_array()) schema_error("$.terms", "expected an array");
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
  for (size_t k = 0; k < doc["terms"].size(); ++k) {
    std::string path = "$.terms[" + std::to_string(k) + "]";
    const json& t = doc["terms"][k];
    if (!t.is_object() || !t.contains("P") || !t.contains("Q") || !t.contains("coeff")) {
      schema_error(path, "expected {P, Q, coeff}");
    }
    MultiIndex P = index_from_json(t["P"], index_len, path + ".P");
    MultiIndex Q = index_from_json(t["Q"], index_len, path + ".Q");
    if (!seen.insert({P.entries(), Q.entries()}).second) {
      schema_error(path, "duplicate key P=" + P.to_string() + " Q=" + Q.to_string());
    }
    Coeff c = coeff_from_json(t["coeff"], symbolic, path + ".coeff");
    if (c.is_zero()) schema_error(path + ".coeff", "stored zero coefficient");
    if (ambient) {
      ap.add_term(P, Q, c);
    } else {
      dp.add_term(P, Q, c);
    }
  }
  if (ambient) return PolyValue(std::move(ap));
  return PolyValue(std::move(dp));
}

PolyValue read_poly(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("JSON parse error in '" + path + "': " + e.what());
  }
  return poly_from_json(doc);
}

void write_poly(const PolyValue& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << poly_to_json(v).dump(2) << "\n";
}

json chart_point_to_json(const ChartPoint& pt) {
  json j;
  j["chart"] = chart_name(pt.chart);
  j["x"] = json::array();
  j["y"] = json::array();
  for (const auto& v : pt.x) j["x"].push_back({v.real(), v.imag()});
  for (const auto& v : pt.y) j["y"].push_back({v.real(), v.imag()});
  return j;
}

ChartPoint chart_point_from_json(const json& j) {
  if (!j.is_object() || !j.contains("chart") || !j.contains("x") || !j.contains("y")) {
    throw std::runtime_error("chart point must be {chart, x, y}");
  }
  ChartPoint pt;
  pt.chart = chart_from_name(j["chart"].get<std::string>());
  auto read_vec = [](const json& arr) {
    std::vector<std::complex<double>> v;
    for (const auto& e : arr) {
      if (!e.is_array() || e.size() != 2) {
        throw std::runtime_error("complex numbers serialize as [re, im]");
      }
      v.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return v;
  };
  pt.x = read_vec(j["x"]);
  pt.y = read_vec(j["y"]);
  if (pt.x.size() != pt.y.size()) throw std::runtime_error("x and y must have equal length");
  return pt;
}

json qmatrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) {
      row.push_back({rat_to_string(m.at(r, c).re), rat_to_string(m.at(r, c).im)});
    }
    rows.push_back(std::move(row));
  }
  json j;
  j["entries"] = std::move(rows);
  return j;
}

QMatrix qmatrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries")) throw std::runtime_error("matrix must be {entries}");
  const json& rows = j["entries"];
  int dim = static_cast<int>(rows.size());
  QMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != dim) {
      throw std::runtime_error("matrix must be square");
    }
    for (int c = 0; c < dim; ++c) {
      const json& e = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
      if (!e.is_array() || e.size() != 2) {
        throw std::runtime_error("matrix entries serialize as [re, im] rational strings");
      }
      m.at(r, c) = QScalar(parse_rat(e[0].get<std::string>()), parse_rat(e[1].get<std::string>()));
    }
  }
  return m;
}

std::string hbar_view(const SymScalar& s) {
  auto render_part = [](const RationalFnZ& f) -> std::string {
    std::vector<Rat> poly = as_hbar_polynomial(f);
    if (poly.empty()) return f.to_string();  // genuinely rational in hbar
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] == 0 && !(poly.size() == 1)) continue;
      Rat c = poly[k];
      if (!first) os << (c >= 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      Rat a = abs(c);
      if (a != 1 || k == 0) os << rat_to_string(a);
      if (k > 0) {
        if (a != 1) os << "*";
        os << "hbar";
        if (k > 1) os << "^" << k;
      }
      first = false;
    }
    if (first) os << "0";
    return os.str();
  };
  if (s.im.is_zero()) return render_part(s.re);
  return "(" + render_part(s.re) + ") + i*(" + render_part(s.im) + ")";
}

}  // namespace wickdisc
