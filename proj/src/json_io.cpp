#include "ecag/json_io.hpp"

#include "ecag/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace ecag {

namespace {

std::vector<long> long_list(const Json& j, const char* what) {
  if (!j.is_array()) fail(ErrorKind::ConfigParse, std::string(what) + " must be an array");
  std::vector<long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail(ErrorKind::ConfigParse, std::string(what) + " must hold integers");
    out.push_back(v.get<long>());
  }
  return out;
}

}  // namespace

FieldPtr field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("m"))
    fail(ErrorKind::ConfigParse, "field spec needs p and m");
  long p = j.at("p").get<long>();
  int m = j.at("m").get<int>();
  std::optional<std::vector<long>> modulus;
  if (j.contains("modulus") && !j.at("modulus").is_null()) modulus = long_list(j.at("modulus"), "modulus");
  return Field::make(p, m, modulus);
}

Json field_to_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["m"] = f.m();
  if (f.m() > 1) j["modulus"] = f.modulus();
  return j;
}

CurvePtr curve_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("a"))
    fail(ErrorKind::ConfigParse, "curve spec needs field and a");
  FieldPtr field = field_from_json(j.at("field"));
  const auto& a = j.at("a");
  if (!a.is_array() || a.size() != 5)
    fail(ErrorKind::ConfigParse, "a must list the five coefficients a1,a2,a3,a4,a6");
  std::array<Field::Elt, 5> idx{};
  for (int i = 0; i < 5; ++i) {
    auto coeffs = long_list(a.at(i), "coefficient");
    if (long(coeffs.size()) != field->m())
      fail(ErrorKind::ConfigParse, "each coefficient needs m entries");
    idx[i] = field->from_coeffs(coeffs);
  }
  return Curve::make(field, idx);
}

Json curve_to_json(const Curve& c) {
  Json j;
  j["field"] = field_to_json(*c.field());
  Json a = Json::array();
  for (Field::Elt e : c.coeff_indices()) a.push_back(c.field()->coeffs(e));
  j["a"] = a;
  return j;
}

CurvePtr load_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::FileIO, "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorKind::ConfigParse, "bad JSON in " + path + ": " + e.what());
  }
  return curve_from_json(j);
}

namespace {

Field::Elt coord_from_string(const Field& f, const std::string& s) {
  std::vector<long> coeffs;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      coeffs.push_back(std::stol(part));
    } catch (const std::exception&) {
      fail(ErrorKind::ConfigParse, "bad coordinate literal " + s);
    }
  }
  if (long(coeffs.size()) == 1 && f.m() > 1) coeffs.resize(f.m(), 0);
  if (long(coeffs.size()) != f.m()) fail(ErrorKind::ConfigParse, "coordinate needs m entries: " + s);
  return f.from_coeffs(coeffs);
}

}  // namespace

CurvePoint point_from_string(const Field& f, const std::string& s) {
  if (s == "O" || s == "o" || s == "inf") return CurvePoint::at_infinity();
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorKind::ConfigParse, "point literal must be O or x,y: " + s);
  return CurvePoint::affine(coord_from_string(f, s.substr(0, comma)),
                            coord_from_string(f, s.substr(comma + 1)));
}

std::string point_to_string(const Field& f, const CurvePoint& pt) {
  if (pt.infinity) return "O";
  auto coord = [&](Field::Elt e) {
    std::string out;
    auto cs = f.coeffs(e);
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) out += ':';
      out += std::to_string(cs[i]);
    }
    return out;
  };
  return coord(pt.x) + "," + coord(pt.y);
}

Json bound_report_to_json(const BoundReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["k"] = rep.k;
  j["group_order"] = rep.group_order;
  j["S"] = rep.s_count;
  j["phi_2"] = rep.phi_2;
  j["phi_used"] = rational_to_string(rep.phi_used);
  j["main_term"] = rational_to_string(rep.main_term);
  j["term_S"] = rational_to_string(rep.term_S);
  j["term_d2"] = rational_to_string(rep.term_d2);
  Json terms = Json::array();
  for (const auto& t : rep.terms_d)
    terms.push_back({{"d", t.d}, {"phi_d", t.phi_d}, {"value", rational_to_string(t.value)}});
  j["terms_d"] = terms;
  j["rhs_total"] = rational_to_string(rep.rhs_total);
  j["certified_positive"] = rep.certified_positive;
  j["clamped"] = rep.clamped;
  return j;
}

Json count_table_to_json(const GroupStructure& gs, const CountTable& table, long k) {
  Json j;
  j["k"] = k;
  Json counts = Json::array();
  for (long g = 0; g < gs.order(); ++g) {
    counts.push_back({{"point", point_to_string(*gs.curve()->field(), gs.point_at(g))},
                      {"N", table.at(k, g).str()}});
  }
  j["counts"] = counts;
  return j;
}

Json code_to_json(const EcagCode& code) {
  const Field& f = *code.curve->field();
  Json j;
  j["curve"] = curve_to_json(*code.curve);
  j["n"] = code.n();
  j["k"] = code.k;
  j["P"] = point_to_string(f, code.P);
  Json pts = Json::array();
  for (const auto& pt : code.eval_set.points) pts.push_back(point_to_string(f, pt));
  j["evaluation_set"] = pts;
  Json rows = Json::array();
  for (const auto& row : code.gen_matrix) {
    Json r = Json::array();
    for (Field::Elt e : row) r.push_back(f.coeffs(e));
    rows.push_back(r);
  }
  j["gen_matrix"] = rows;
  return j;
}

}  // namespace ecag
