#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "wickdisc/verify.hpp"

namespace wickdisc {

using PolyValue = std::variant<AmbientPoly, DiscPoly>;

/// Document format shared by the CLI and the library:
/// { "n", "space": "ambient"|"disc", "coeff_kind": "gaussian_rational"|
///   "rational_fn_z", "terms": [ {"P": [...], "Q": [...], "coeff": ...} ] }
/// Rationals are encoded as strings "num/den"; rational functions as
/// {"num_coeffs": [...], "den_coeffs": [...]} lowest degree first, with
/// integers that exceed 64 bits encoded as strings.
nlohmann::json poly_to_json(const AmbientPoly& a);
nlohmann::json poly_to_json(const DiscPoly& a);
nlohmann::json poly_to_json(const PolyValue& v);

PolyValue poly_from_json(const nlohmann::json& doc);

PolyValue read_poly(const std::string& path);
void write_poly(const PolyValue& v, const std::string& path);

nlohmann::json chart_point_to_json(const ChartPoint& pt);
ChartPoint chart_point_from_json(const nlohmann::json& j);

nlohmann::json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const nlohmann::json& j);

/// Cosmetic rendering of a symbolic coefficient as a polynomial in hbar when
/// it is one ("1 + 2*hbar"); falls back to the z-form otherwise.
std::string hbar_view(const SymScalar& s);

}  // namespace wickdisc
