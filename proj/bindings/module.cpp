#include <pybind11/pybind11.h>

#include "symdecomp/decomp.hpp"
#include "symdecomp/io.hpp"
#include "symdecomp/oracle.hpp"

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace symdecomp;

Exponent exponent_from(py::handle obj) {
    std::vector<int> entries;
    for (py::handle item : obj) entries.push_back(py::cast<int>(item));
    return Exponent(std::move(entries));
}

py::tuple to_tuple(const Exponent& e) {
    py::tuple out(e.size());
    for (int i = 0; i < e.size(); ++i) out[static_cast<std::size_t>(i)] = e[i];
    return out;
}

py::object to_int(const Integer& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rational& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_int(Integer(q.get_num())), to_int(Integer(q.get_den())));
}

Rational rational_from(py::handle obj) {
    const std::string text = py::str(obj);
    Rational q;
    if (q.set_str(text, 10) != 0) throw py::value_error("not a rational: " + text);
    if (q.get_den() == 0) throw py::value_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

CoefficientPath path_for(bool closed_form_n2) {
    return closed_form_n2 ? CoefficientPath::ClosedFormN2 : CoefficientPath::General;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact decomposition of symmetric polynomials into the elementary symmetric basis";

    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<NotSymmetricError>(m, "NotSymmetricError");
    py::register_exception<InconsistentSystemError>(m, "InconsistentSystemError");

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init([](const std::string& text, int nvars) { return parse_poly(text, nvars); }),
             py::arg("text"), py::arg("nvars"),
             "Parse a polynomial such as \"x1 + 3*x1^2 - 5/2*x1*x2\".")
        .def_static(
            "zero", [](int nvars) { return Polynomial(nvars); }, py::arg("nvars"))
        .def_static(
            "from_terms",
            [](int nvars, const py::dict& terms) {
                Polynomial p(nvars);
                for (auto item : terms)
                    p.add_term(exponent_from(item.first), rational_from(item.second));
                return p;
            },
            py::arg("nvars"), py::arg("terms"),
            "Build from {exponent tuple: coefficient} with Fraction/int/str coefficients.")
        .def_property_readonly("nvars", &Polynomial::var_count)
        .def("degree",
             [](const Polynomial& p) -> py::object {
                 const auto d = p.degree();
                 if (!d) return py::none();
                 return py::int_(*d);
             })
        .def("coefficient",
             [](const Polynomial& p, py::sequence e) { return to_fraction(p.coeff(exponent_from(e))); },
             py::arg("exponent"))
        .def("terms",
             [](const Polynomial& p) {
                 py::dict out;
                 for (const auto& [e, c] : p.terms()) out[to_tuple(e)] = to_fraction(c);
                 return out;
             })
        .def("truncated", &Polynomial::truncated_to_degree, py::arg("max_degree"))
        .def("to_text",
             [](const Polynomial& p, const std::string& prefix) {
                 if (prefix.size() != 1) throw py::value_error("prefix must be 'x' or 'y'");
                 return format_poly(p, prefix[0]);
             },
             py::arg("var_prefix") = "x")
        .def("__str__", [](const Polynomial& p) { return format_poly(p, 'x'); })
        .def("__repr__",
             [](const Polynomial& p) {
                 return "Polynomial(\"" + format_poly(p, 'x') + "\", " +
                        std::to_string(p.var_count()) + ")";
             })
        .def("__eq__",
             [](const Polynomial& a, const Polynomial& b) { return a == b; }, py::is_operator())
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; });

    m.def("elementary_symmetric", &elementary_symmetric, py::arg("nvars"), py::arg("k"));

    m.def("symmetry_witness",
          [](const Polynomial& f) -> py::object {
              const auto w = symmetry_witness(f);
              if (!w) return py::none();
              return py::make_tuple(py::make_tuple(w->first, w->second), to_tuple(w->at));
          },
          py::arg("f"), "None when symmetric, else ((i, j), exponent) with a changed coefficient.");

    m.def("compose_with_sigma",
          [](const Polynomial& g) { return compose_with_sigma(g, g.var_count()); }, py::arg("g"));

    m.def("decompose",
          [](const Polynomial& f, bool oracle, bool closed_form_n2) {
              if (oracle && closed_form_n2)
                  throw py::value_error("oracle and closed_form_n2 are mutually exclusive");
              if (oracle) return oracle_decompose(f);
              return decompose(f, path_for(closed_form_n2));
          },
          py::arg("f"), py::kw_only(), py::arg("oracle") = false, py::arg("closed_form_n2") = false);

    m.def("oracle_decompose", &oracle_decompose, py::arg("f"));

    m.def("decompose_truncated",
          [](const Polynomial& f, long max_degree, bool closed_form_n2) {
              return decompose_truncated(f, max_degree, path_for(closed_form_n2));
          },
          py::arg("f"), py::arg("max_degree"), py::kw_only(), py::arg("closed_form_n2") = false);

    m.def("compose_truncated",
          [](const Polynomial& g, long max_degree) {
              return compose_truncated(g, g.var_count(), max_degree);
          },
          py::arg("g"), py::arg("max_degree"));

    m.def("verify_roundtrip", &verify_roundtrip, py::arg("f"), py::arg("g"));

    m.def("coefficient",
          [](py::sequence nu, py::sequence lam) {
              return to_int(coefficient(exponent_from(nu), exponent_from(lam)));
          },
          py::arg("nu"), py::arg("lam"));

    m.def("n2_coefficient",
          [](py::sequence nu, py::sequence lam) {
              return to_int(n2_coefficient(exponent_from(nu), exponent_from(lam)));
          },
          py::arg("nu"), py::arg("lam"));

    m.def("enumerate_decompositions",
          [](py::sequence nu, py::sequence lam) {
              py::list out;
              for (const auto& dec : enumerate_decompositions(exponent_from(nu), exponent_from(lam))) {
                  py::list parts;
                  for (const auto& part : dec.parts)
                      parts.append(py::make_tuple(to_tuple(part.support), part.multiplicity));
                  out.append(parts);
              }
              return out;
          },
          py::arg("nu"), py::arg("lam"));

    m.def("system_matrix",
          [](int nvars, long degree) {
              const DegreeSystem sys = build_system(nvars, degree, Polynomial(nvars));
              py::list rows;
              py::list cols;
              py::list matrix;
              for (const auto& r : sys.rows) rows.append(to_tuple(r.rep()));
              for (const auto& c : sys.cols) cols.append(to_tuple(c));
              for (const auto& row : sys.matrix) {
                  py::list entries;
                  for (const Integer& v : row) entries.append(to_int(v));
                  matrix.append(entries);
              }
              return py::make_tuple(rows, cols, matrix);
          },
          py::arg("nvars"), py::arg("degree"),
          "Rows (canonical exponents), columns, and the integer matrix for one degree.");

    m.def("format_system",
          [](int nvars, long degree) {
              return format_system(build_system(nvars, degree, Polynomial(nvars)));
          },
          py::arg("nvars"), py::arg("degree"));

    m.def("export_records",
          [](const Polynomial& p) {
              py::list out;
              for (const auto& r : export_records(p))
                  out.append(py::make_tuple(to_tuple(r.exponent), to_int(r.numerator),
                                            to_int(r.denominator)));
              return out;
          },
          py::arg("p"));

    m.def("canonicalize",
          [](py::sequence nu) { return to_tuple(canonicalize(exponent_from(nu)).rep()); },
          py::arg("nu"));

    m.def("orbit",
          [](py::sequence nu) {
              py::list out;
              for (const Exponent& e : orbit(canonicalize(exponent_from(nu)))) out.append(to_tuple(e));
              return out;
          },
          py::arg("nu"));

    m.def("phi", [](py::sequence nu) { return to_tuple(phi(canonicalize(exponent_from(nu)))); },
          py::arg("nu"));

    m.def("phi_inv", [](py::sequence lam) { return to_tuple(phi_inv(exponent_from(lam)).rep()); },
          py::arg("lam"));

    m.def("degree_classes",
          [](int nvars, long degree) {
              py::list out;
              for (const CanonicalClass& c : degree_classes(nvars, degree))
                  out.append(to_tuple(c.rep()));
              return out;
          },
          py::arg("nvars"), py::arg("degree"));

    m.def("weight_vectors",
          [](int nvars, long degree) {
              py::list out;
              for (const Exponent& e : weight_vectors(nvars, degree)) out.append(to_tuple(e));
              return out;
          },
          py::arg("nvars"), py::arg("degree"));
}
