#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torsig/acceptance.hpp"
#include "torsig/analysis.hpp"
#include "torsig/chow.hpp"
#include "torsig/error.hpp"
#include "torsig/fan.hpp"
#include "torsig/generators.hpp"
#include "torsig/invariants.hpp"
#include "torsig/polytope.hpp"
#include "torsig/serialize.hpp"

namespace py = pybind11;
using namespace torsig;

namespace {

// Rationals cross the boundary as fractions.Fraction, integers as int.
py::object to_py(const Rational& r) {
  // Leaked on purpose: destroying Python objects after finalization crashes.
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str())));
}

py::object to_py(const Integer& z) { return py::int_(py::str(z.get_str())); }

Rational rational_from_py(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return make_rational(parse_integer(py::str(h.attr("numerator")).cast<std::string>()),
                         parse_integer(py::str(h.attr("denominator")).cast<std::string>()));
  throw Error(ErrorCode::InvalidInput, "expected an int, Fraction or 'p/q' string");
}

Integer integer_from_py(const py::handle& h) {
  const Rational r = rational_from_py(h);
  if (!is_integral(r)) throw Error(ErrorCode::InvalidInput, "expected an integer");
  return r.get_num();
}

template <typename T, typename F>
std::vector<T> list_from_py(const py::iterable& xs, F convert) {
  std::vector<T> out;
  for (const auto& x : xs) out.push_back(convert(x));
  return out;
}

RatVector ratvec(const py::handle& h) { return list_from_py<Rational>(py::reinterpret_borrow<py::iterable>(h), rational_from_py); }
IntVector intvec(const py::handle& h) { return list_from_py<Integer>(py::reinterpret_borrow<py::iterable>(h), integer_from_py); }

template <typename V>
py::list list_to_py(const V& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::object json_to_py(const Json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

DivisorMonomial monomial_from_py(const py::dict& exponents) {
  DivisorMonomial m;
  for (const auto& [k, v] : exponents) {
    const auto e = v.cast<unsigned>();
    if (e > 0) m.exponents[k.cast<std::size_t>()] = e;
  }
  return m;
}

std::optional<TheoremCase> case_from_py(const std::optional<std::string>& c) {
  if (!c) return std::nullopt;
  return parse_theorem_case(*c);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Charney-Davis signatures and normal fan convexity";

  static auto* error = new py::exception<Error>(m, "TorsigError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(*error, e.what());
    }
  });

  py::class_<Polytope>(m, "Polytope")
      .def_static(
          "from_vertices", [](const py::iterable& pts) { return Polytope::from_vertices(list_from_py<RatVector>(pts, ratvec)); },
          py::arg("points"))
      .def_static("from_json", [](const std::string& s) { return polytope_from_json(Json::parse(s)); })
      .def_property_readonly("dim", &Polytope::intrinsic_dim)
      .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
      .def_property_readonly("vertices",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& v : p.vertices()) out.append(list_to_py(v));
                               return out;
                             })
      .def_property_readonly("facets",
                             [](const Polytope& p) {
                               py::list out;
                               for (const auto& f : p.facets()) out.append(py::make_tuple(list_to_py(f.inner_normal), to_py(f.offset)));
                               return out;
                             })
      .def("f_vector", [](const Polytope& p) { return f_vector(p).counts; })
      .def("h_vector", [](const Polytope& p) { return list_to_py(h_vector(f_vector(p)).counts); })
      .def("sigma", [](const Polytope& p) { return to_py(sigma(f_vector(p))); })
      .def("is_simple", [](const Polytope& p) { return is_simple(full_dimensional(p)); })
      .def("angle_class", [](const Polytope& p) { return std::string(to_string(angle_class(p))); })
      .def("normal_fan", [](const Polytope& p) { return normal_fan(full_dimensional(p)); })
      .def("to_json", [](const Polytope& p) { return to_json(p).dump(); });

  py::class_<Fan>(m, "Fan")
      .def(py::init([](std::size_t dim, const py::iterable& rays, std::vector<Cone> cones) {
             return Fan(dim, list_from_py<IntVector>(rays, intvec), std::move(cones));
           }),
           py::arg("dim"), py::arg("rays"), py::arg("max_cones"))
      .def_static("from_json", [](const std::string& s) { return fan_from_json(Json::parse(s)); })
      .def_property_readonly("dim", &Fan::dim)
      .def_property_readonly("rays",
                             [](const Fan& f) {
                               py::list out;
                               for (const auto& r : f.rays()) out.append(list_to_py(r));
                               return out;
                             })
      .def_property_readonly("max_cones", &Fan::max_cones)
      .def("classify", [](const Fan& f) { return std::string(to_string(classify(f).overall)); })
      .def("classify_rays",
           [](const Fan& f) {
             std::vector<std::string> out;
             for (auto c : classify(f).per_ray) out.emplace_back(to_string(c));
             return out;
           })
      .def("m", [](const Fan& f) { return to_py(m_of(f)); })
      .def("is_flag", &is_flag)
      .def(
          "evaluate", [](const Fan& f, const py::dict& exps) { return to_py(evaluate(f, monomial_from_py(exps))); },
          py::arg("exponents"), "Intersection number of prod D_i^e_i, given as {ray: exponent}.")
      .def("signature_via_L", [](const Fan& f) { return to_py(signature_via_L(f)); })
      .def("to_json", [](const Fan& f) { return to_json(f).dump(); });

  m.def("cube", &cube, py::arg("d"));
  m.def("permutohedron", &permutohedron, py::arg("n"));
  m.def("associahedron", &associahedron, py::arg("n"));
  m.def("polygon", [](const std::string& name) { return polygon(name); }, py::arg("preset"));
  m.def("product", &product);
  m.def("arrangement_preset", [](const std::string& name) { return arrangement_preset(name); });
  m.def("arrangement_fan", [](const py::iterable& normals, std::size_t dim) {
    return arrangement_fan(list_from_py<IntVector>(normals, intvec), dim);
  });
  m.def(
      "generate",
      [](const std::string& name, std::optional<std::size_t> n, std::optional<std::size_t> d) { return generate(name, n, d); },
      py::arg("name"), py::arg("n") = py::none(), py::arg("d") = py::none());

  m.def("tanh_sigma", [](unsigned n) { return to_py(tanh_sigma(n)); });
  m.def("associahedron_sigma", [](unsigned n) { return to_py(associahedron_sigma(n)); });
  m.def("polygon_inequality_rhs", [](const py::handle& mm) { return to_py(polygon_inequality_rhs(integer_from_py(mm))); });

  // Reports come back as the same dicts the CLI prints.
  m.def(
      "analyze",
      [](const Polytope& p, bool chow, std::optional<std::string> c) {
        return json_to_py(to_json(analyze(p, {chow, case_from_py(c)})));
      },
      py::arg("polytope"), py::arg("chow") = false, py::arg("case") = py::none());
  m.def(
      "bounds",
      [](const Polytope& p, std::optional<std::string> c) {
        const Polytope q = full_dimensional(p);
        const Fan fan = normal_fan(q);
        return json_to_py(to_json(bound_report(f_vector(q), classify(fan).overall, m_of(fan), case_from_py(c))));
      },
      py::arg("polytope"), py::arg("case") = py::none());
  m.def(
      "chow_signature", [](const Fan& f, bool terms) { return json_to_py(to_json(chow_signature(f), terms)); },
      py::arg("fan"), py::arg("terms") = false);
  m.def("mirror", [](const Polytope& p) { return json_to_py(to_json(mirror(p))); });
  m.def(
      "corpus_verify",
      [](bool perm7) {
        AcceptanceOptions o;
        o.permutohedron7 = perm7;
        AcceptanceReport r;
        {
          py::gil_scoped_release release;
          r = run_acceptance(o);
        }
        return json_to_py(to_json(r));
      },
      py::arg("perm7") = false);
}
