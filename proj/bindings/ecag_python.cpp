#include "ecag/bound.hpp"
#include "ecag/chars.hpp"
#include "ecag/code.hpp"
#include "ecag/errors.hpp"
#include "ecag/json_io.hpp"
#include "ecag/sieve.hpp"
#include "ecag/ssp.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ecag;

namespace {

py::object to_py_int(const BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

py::object to_py_fraction(const Rational& r) {
  auto fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py_int(numerator(r)), to_py_int(denominator(r)));
}

Rational rational_from_py(const py::handle& obj) {
  if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
  // Fraction or anything with numerator/denominator
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
    BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
    return Rational(num, den);
  }
  if (py::isinstance<py::float_>(obj)) return rational_from_double(obj.cast<double>());
  return rational_from_string(py::str(obj).cast<std::string>());
}

py::dict bound_report_dict(const BoundReport& rep) {
  py::dict d;
  d["n"] = rep.n;
  d["k"] = rep.k;
  d["group_order"] = rep.group_order;
  d["S"] = rep.s_count;
  d["phi_2"] = rep.phi_2;
  d["phi_used"] = to_py_fraction(rep.phi_used);
  d["main_term"] = to_py_fraction(rep.main_term);
  d["term_S"] = to_py_fraction(rep.term_S);
  d["term_d2"] = to_py_fraction(rep.term_d2);
  py::list terms;
  for (const auto& t : rep.terms_d) {
    py::dict e;
    e["d"] = t.d;
    e["phi_d"] = t.phi_d;
    e["value"] = to_py_fraction(t.value);
    terms.append(e);
  }
  d["terms_d"] = terms;
  d["rhs_total"] = to_py_fraction(rep.rhs_total);
  d["certified_positive"] = rep.certified_positive;
  return d;
}

}  // namespace

PYBIND11_MODULE(_ecag, m) {
  m.doc() = "elliptic-curve AG code toolkit: exact subset-sum counts, character sums, "
            "distance criteria";

  py::register_exception<Error>(m, "EcagError");

  py::class_<Field, FieldPtr>(m, "Field")
      .def(py::init([](long p, int mdeg, std::optional<std::vector<long>> modulus) {
             return std::const_pointer_cast<Field>(Field::make(p, mdeg, std::move(modulus)));
           }),
           py::arg("p"), py::arg("m") = 1, py::arg("modulus") = std::nullopt)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("m", &Field::m)
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("modulus", &Field::modulus)
      .def("add", &Field::add)
      .def("sub", &Field::sub)
      .def("neg", &Field::neg)
      .def("mul", &Field::mul)
      .def("inv", &Field::inv)
      .def("div", &Field::div)
      .def("pow", &Field::pow)
      .def("sqrt_set", &Field::sqrt_set)
      .def("solve_quadratic", &Field::solve_quadratic)
      .def("coeffs", &Field::coeffs)
      .def("from_coeffs", &Field::from_coeffs)
      .def("__repr__", [](const Field& f) {
        return "Field(p=" + std::to_string(f.p()) + ", m=" + std::to_string(f.m()) + ")";
      });

  py::class_<CurvePoint>(m, "Point")
      .def_static("infinity", &CurvePoint::at_infinity)
      .def_static("affine", &CurvePoint::affine, py::arg("x"), py::arg("y"))
      .def_readonly("is_infinity", &CurvePoint::infinity)
      .def_readonly("x", &CurvePoint::x)
      .def_readonly("y", &CurvePoint::y)
      .def(py::self == py::self)
      .def("__hash__",
           [](const CurvePoint& p) {
             return p.infinity ? -1 : (long(p.x) << 21) ^ long(p.y);
           })
      .def("__repr__", [](const CurvePoint& p) {
        if (p.infinity) return std::string("Point.infinity()");
        return "Point(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
      });

  py::class_<Curve, CurvePtr>(m, "Curve")
      .def(py::init([](FieldPtr field, const std::array<Field::Elt, 5>& a) {
             return std::const_pointer_cast<Curve>(Curve::make(std::move(field), a));
           }),
           py::arg("field"), py::arg("a"))
      .def_static("from_json",
                  [](const std::string& text) {
                    return std::const_pointer_cast<Curve>(curve_from_json(Json::parse(text)));
                  })
      .def_property_readonly("field", &Curve::field)
      .def_property_readonly("id", &Curve::id)
      .def("contains", &Curve::contains)
      .def("add", &Curve::add)
      .def("neg", &Curve::neg)
      .def("sub", &Curve::sub)
      .def("scalar_mul", &Curve::scalar_mul, py::arg("n"), py::arg("P"))
      .def("points", &Curve::points)
      .def("to_json", [](const Curve& c) { return curve_to_json(c).dump(); })
      .def("__repr__", [](const Curve& c) { return "Curve(" + c.id() + ")"; });

  py::class_<AbelianGroup>(m, "AbelianGroup")
      .def(py::init([](long n1, long n2) {
             if (n1 < 1 || n2 < 1 || n1 % n2 != 0)
               fail(ErrorKind::ParameterOutOfRange, "need n2 | n1");
             return AbelianGroup{n1, n2};
           }),
           py::arg("n1"), py::arg("n2") = 1)
      .def_readonly("n1", &AbelianGroup::n1)
      .def_readonly("n2", &AbelianGroup::n2)
      .def_property_readonly("size", &AbelianGroup::size)
      .def("add", &AbelianGroup::add)
      .def("neg", &AbelianGroup::neg)
      .def("sub", &AbelianGroup::sub)
      .def("scalar_mul", &AbelianGroup::scalar_mul)
      .def("order_of", &AbelianGroup::order_of)
      .def("__repr__", [](const AbelianGroup& g) {
        return "AbelianGroup(" + std::to_string(g.n1) + ", " + std::to_string(g.n2) + ")";
      });

  py::class_<GroupStructure>(m, "GroupStructure")
      .def_static("from_curve",
                  [](const CurvePtr& c) { return GroupStructure::from_curve(c); })
      .def_property_readonly("group", &GroupStructure::group)
      .def_property_readonly("order", &GroupStructure::order)
      .def_property_readonly("n1", &GroupStructure::n1)
      .def_property_readonly("n2", &GroupStructure::n2)
      .def_property_readonly("g1", &GroupStructure::g1)
      .def_property_readonly("g2", &GroupStructure::g2)
      .def_property_readonly("structure_case", &GroupStructure::structure_case)
      .def_property_readonly("case_warning", &GroupStructure::case_warning)
      .def("points", &GroupStructure::points)
      .def("index_of", &GroupStructure::index_of)
      .def("point_at", &GroupStructure::point_at)
      .def("coords_of", &GroupStructure::coords_of);

  py::class_<CharIndex>(m, "CharIndex")
      .def(py::init([](long u, long v) { return CharIndex{u, v}; }), py::arg("u"), py::arg("v") = 0)
      .def_readonly("u", &CharIndex::u)
      .def_readonly("v", &CharIndex::v);

  py::class_<CharSumProfile>(m, "CharSumProfile")
      .def_readonly("phi", &CharSumProfile::phi)
      .def_readonly("tolerance", &CharSumProfile::tolerance)
      .def_readonly("argmax", &CharSumProfile::argmax)
      .def_readonly("d_size", &CharSumProfile::d_size)
      .def("sum", &CharSumProfile::sum);

  m.def("char_order", &char_order);
  m.def("char_eval",
        py::overload_cast<const AbelianGroup&, CharIndex, long>(&char_eval));
  m.def("char_eval",
        py::overload_cast<const GroupStructure&, CharIndex, const CurvePoint&>(&char_eval));
  m.def("char_sum_naive", &char_sum_naive);
  m.def("char_sum_profile",
        py::overload_cast<const AbelianGroup&, const std::vector<long>&>(&char_sum_profile));
  m.def("char_sum_profile",
        py::overload_cast<const GroupStructure&, const std::vector<CurvePoint>&>(&char_sum_profile));
  m.def("count_chars_order_gt", &count_chars_order_gt);
  m.def("count_chars_order_eq", &count_chars_order_eq);

  py::class_<PermType>(m, "PermType")
      .def(py::init([](std::vector<long> c) { return PermType{std::move(c)}; }))
      .def_readonly("c", &PermType::c)
      .def_property_readonly("k", &PermType::k)
      .def_property_readonly("cycles", &PermType::cycle_count)
      .def_property_readonly("sign", &PermType::sign);

  m.def("perm_type_count", [](const PermType& t) { return to_py_int(perm_type_count(t)); });
  m.def("partitions", &partitions);
  m.def("gen_poly_uniform", [](long k, const py::handle& q) {
    return to_py_fraction(gen_poly_uniform(k, rational_from_py(q)));
  });
  m.def("gen_poly_mixed", [](long k, long d, const py::handle& q, const py::handle& s) {
    return to_py_fraction(gen_poly_mixed(k, d, rational_from_py(q), rational_from_py(s)));
  });
  m.def("sieve_distinct_sum",
        [](long k, const std::function<std::complex<double>(const PermType&)>& f) {
          return sieve_distinct_sum<std::complex<double>>(k, f);
        },
        "Signed class sum with complex-valued class terms");
  m.def("sieve_check", [](long k_max, long trials, std::uint64_t seed) {
    auto res = sieve_self_check(k_max, trials, seed);
    py::dict d;
    d["instances"] = res.instances;
    d["max_deviation"] = res.max_deviation;
    d["passed"] = res.passed;
    return d;
  });

  py::class_<CountTable>(m, "CountTable")
      .def_readonly("k", &CountTable::k)
      .def_readonly("group", &CountTable::group)
      .def("at", [](const CountTable& t, long j, long g) { return to_py_int(t.at(j, g)); })
      .def("row_sum", [](const CountTable& t, long j) { return to_py_int(t.row_sum(j)); })
      .def("min_over_b", [](const CountTable& t, long j) { return to_py_int(t.min_over_b(j)); });

  m.def("count_subset_sums",
        py::overload_cast<const AbelianGroup&, const std::vector<long>&, long>(&count_subset_sums));
  m.def("count_subset_sums",
        py::overload_cast<const GroupStructure&, const std::vector<CurvePoint>&, long>(
            &count_subset_sums));
  m.def("brute_force_count",
        [](const AbelianGroup& G, const std::vector<long>& D, long k, long b) {
          return to_py_int(brute_force_count(G, D, k, b));
        });

  m.def("eval_bound", [](const AbelianGroup& G, const CharSumProfile& prof, long n, long k) {
    return bound_report_dict(eval_bound(G, prof, n, k));
  });
  m.def("eval_m_bound", [](const AbelianGroup& G, const CharSumProfile& prof, long n, long k) {
    auto mb = eval_M_bound(G, prof, n, k);
    py::dict d;
    d["k"] = mb.k;
    d["M"] = to_py_fraction(mb.M);
    d["C_M_k"] = to_py_fraction(mb.c_m_k);
    d["third_arg_present"] = mb.third_arg_present;
    d["d"] = mb.d;
    return d;
  });
  m.def("certify_positive", &certify_positive);

  py::class_<EvaluationSet>(m, "EvaluationSet")
      .def(py::init([](std::vector<CurvePoint> pts) { return EvaluationSet{std::move(pts)}; }))
      .def_readonly("points", &EvaluationSet::points)
      .def_property_readonly("n", &EvaluationSet::n);

  py::class_<EcagCode>(m, "Code")
      .def_property_readonly("n", &EcagCode::n)
      .def_readonly("k", &EcagCode::k)
      .def_readonly("P", &EcagCode::P)
      .def_readonly("gen_matrix", &EcagCode::gen_matrix)
      .def_property_readonly("eval_points",
                             [](const EcagCode& c) { return c.eval_set.points; });

  m.def("all_points_except", &all_points_except, py::arg("gs"), py::arg("P"),
        py::arg("extra") = std::vector<CurvePoint>{});
  m.def("build_code", [](const CurvePtr& c, const EvaluationSet& D, long k, const CurvePoint& P) {
    return build_code(c, D, k, P);
  });
  m.def("build_code",
        [](const CurvePtr& c, const std::vector<CurvePoint>& D, long k, const CurvePoint& P) {
          return build_code(c, EvaluationSet{D}, k, P);
        });
  m.def("encode", &encode);
  m.def("min_distance_bruteforce", &min_distance_bruteforce);
  m.def("min_distance_ssp", &min_distance_ssp);
  m.def("is_mds", &is_mds);
}
