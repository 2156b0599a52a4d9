#pragma once

#include "ecag/bound.hpp"
#include "ecag/code.hpp"
#include "ecag/group.hpp"
#include "ecag/ssp.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace ecag {

using Json = nlohmann::json;

/// {"p": int, "m": int, "modulus": [int,...]?}
FieldPtr field_from_json(const Json& j);
Json field_to_json(const Field& f);

/// {"field": {...}, "a": [[c..],[c..],[c..],[c..],[c..]]} — coefficients
/// (a1, a2, a3, a4, a6) as little-endian coefficient lists.
CurvePtr curve_from_json(const Json& j);
Json curve_to_json(const Curve& c);

CurvePtr load_curve_file(const std::string& path);

/// Point literal: "O" for infinity, otherwise "x,y" with each coordinate a
/// colon-separated coefficient list, e.g. "3,4" over F_p or "0:1,1:1" over
/// extension fields.
CurvePoint point_from_string(const Field& f, const std::string& s);
std::string point_to_string(const Field& f, const CurvePoint& pt);

Json bound_report_to_json(const BoundReport& rep);
Json count_table_to_json(const GroupStructure& gs, const CountTable& table, long k);
Json code_to_json(const EcagCode& code);

}  // namespace ecag
