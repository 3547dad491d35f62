#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "concordia/cli.hpp"
#include "concordia/json_io.hpp"

namespace py = pybind11;
using namespace concordia;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null:
            return py::none();
        case Json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case Json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case Json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case Json::value_t::number_float:
            return py::float_(j.get<double>());
        case Json::value_t::string:
            return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
    }
}

Json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        Json out = Json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        Json out = Json::array();
        for (const auto& item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw std::invalid_argument("cannot convert python object to JSON");
}

// Polynomial together with its variable names, the natural python-facing view.
struct Poly {
    LaurentPoly poly{1};
    std::vector<std::string> variables{"u"};

    std::string str() const { return to_string(poly, variables); }
    void check_compatible(const Poly& other) const {
        if (variables != other.variables)
            throw std::invalid_argument("polynomials use different variable lists");
    }
};

Poly make_poly(const std::string& text, const std::vector<std::string>& variables) {
    return Poly{parse_poly(text, variables), variables};
}

SatelliteSpec spec_from(const std::string& longitude, const std::vector<std::string>& variables) {
    LaurentPoly p = parse_poly(longitude, variables);
    auto unit = p.as_unit();
    if (!unit) throw std::invalid_argument("longitude must be a monomial with coefficient +/-1");
    return SatelliteSpec(*unit);
}

}  // namespace

PYBIND11_MODULE(_concordia, m) {
    m.doc() = "exact almost-concordance invariants of knots in 3-manifolds";

    py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);

    py::class_<Poly>(m, "Poly")
        .def(py::init(&make_poly), py::arg("text"), py::arg("variables") = std::vector<std::string>{"u"})
        .def_readonly("variables", &Poly::variables)
        .def("__str__", &Poly::str)
        .def("__repr__", [](const Poly& p) { return "Poly('" + p.str() + "')"; })
        .def("__eq__", [](const Poly& a, const Poly& b) {
            return a.variables == b.variables && a.poly == b.poly;
        })
        .def("__add__", [](const Poly& a, const Poly& b) {
            a.check_compatible(b);
            return Poly{a.poly + b.poly, a.variables};
        })
        .def("__sub__", [](const Poly& a, const Poly& b) {
            a.check_compatible(b);
            return Poly{a.poly - b.poly, a.variables};
        })
        .def("__mul__", [](const Poly& a, const Poly& b) {
            a.check_compatible(b);
            return Poly{a.poly * b.poly, a.variables};
        })
        .def("__neg__", [](const Poly& a) { return Poly{-a.poly, a.variables}; })
        .def("involute", [](const Poly& a) { return Poly{a.poly.involute(), a.variables}; })
        .def("canonical", [](const Poly& a) {
            return Poly{normalize_associate(a.poly).canonical, a.variables};
        })
        .def("is_integral", [](const Poly& a) { return a.poly.is_integral(); })
        .def("is_zero", [](const Poly& a) { return a.poly.is_zero(); });

    m.def(
        "parse", &make_poly, py::arg("text"), py::arg("variables") = std::vector<std::string>{"u"},
        "Parse a polynomial in the CLI text grammar.");

    m.def(
        "divides",
        [](const Poly& g, const Poly& f) -> py::object {
            g.check_compatible(f);
            auto q = divides(g.poly, f.poly);
            if (!q) return py::none();
            return py::cast(Poly{*q, g.variables});
        },
        py::arg("divisor"), py::arg("dividend"),
        "Exact quotient dividend/divisor, or None when not divisible.");

    m.def(
        "factor_univariate",
        [](const Poly& f) {
            BoundedFactorization fac = factor_bounded_univariate(f.poly);
            py::list out;
            for (const auto& [poly, mult] : fac.factors)
                out.append(py::make_tuple(to_string(poly, f.variables), mult));
            return py::make_tuple(out, fac.candidates_tested);
        },
        py::arg("poly"),
        "Complete factorization into Z-irreducibles (degree <= 4, one variable); "
        "returns (factors, candidates_tested).");

    m.def(
        "mazur_alexander",
        [](long long n) { return Poly{mazur_alexander(n).poly, {"s", "t"}}; }, py::arg("n"),
        "Alexander polynomial of the n-twist Mazur pattern in (s, t).");

    m.def(
        "mazur_pairing",
        [](long long n) {
            CComplexPairing pairing = mazur_pairing(n);
            py::list rows;
            for (int i = 0; i < pairing.generators; ++i) {
                py::list row;
                for (int j = 0; j < pairing.generators; ++j)
                    row.append(to_string(pairing.matrix.at(i, j), pairing.variable_names));
                rows.append(row);
            }
            return rows;
        },
        py::arg("n"));

    m.def(
        "alexander_from_ccomplex",
        [](const py::dict& doc) {
            CComplexDocument c = ccomplex_from_json(py_to_json(doc));
            CComplexPairing pairing = assemble_pairing(c.linking, c.variables);
            std::vector<std::string> warnings;
            PatternPolynomial result = alexander_from_pairing(pairing, c.linking_number, &warnings);
            return json_to_py(Json{{"alexander", to_string(result.poly, c.variables)},
                                   {"components", pairing.components},
                                   {"generators", pairing.generators},
                                   {"linking_number", c.linking_number},
                                   {"warnings", warnings}});
        },
        py::arg("ccomplex"),
        "Multivariable Alexander polynomial from C-complex linking matrices.");

    m.def(
        "parity",
        [](const std::string& g, const py::dict& cls) {
            ClassDocument doc = class_from_json(py_to_json(cls));
            return parity_hom(parse_poly(g, doc.variables), doc.cls);
        },
        py::arg("g"), py::arg("torsion_class"),
        "Parity homomorphism of a symmetric irreducible on a factored class.");

    m.def(
        "satellite",
        [](const py::dict& base_class, long long pattern_n, const std::string& longitude) {
            ClassDocument base = class_from_json(py_to_json(base_class));
            SatelliteSpec spec = spec_from(longitude, base.variables);
            std::vector<std::string> warnings;
            SpecializedPattern g = specialized_mazur(pattern_n, spec, &warnings);
            TorsionClass updated =
                base.cls.mul(TorsionClass::make({{g.poly, 1}}, !g.irreducibility_verified));
            return json_to_py(Json{{"specialized", to_string(g.poly, base.variables)},
                                   {"class", class_to_json(updated, base.variables)},
                                   {"warnings", warnings}});
        },
        py::arg("base_class"), py::arg("pattern_n"), py::arg("longitude") = "u^2",
        "Torsion-class update under the n-twist Mazur satellite.");

    m.def(
        "distinguish",
        [](long long n, long long mm, const py::object& base_set, const std::string& longitude) {
            BaseSetDocument base;
            if (!base_set.is_none()) base = base_set_from_json(py_to_json(base_set));
            else base.set = BaseTorsionSet::trivial();
            SatelliteSpec spec = spec_from(longitude, base.variables);
            return json_to_py(
                certificate_to_json(distinguish_family(base.set, n, mm, spec), base.variables));
        },
        py::arg("n"), py::arg("m"), py::arg("base_set") = py::none(),
        py::arg("longitude") = "u^2",
        "Separation certificate for the satellite families I_n and I_m.");

    m.def(
        "admissible_primes",
        [](const Poly& G, long long bound) { return admissible_primes(G.poly, bound); },
        py::arg("G"), py::arg("bound"),
        "Odd primes p <= bound whose specialized Mazur polynomial does not divide G.");

    m.def(
        "cover_spherical",
        [](int order, int g_index, long long twist) {
            LinkingMultiset s =
                spherical_cover_linking(FiniteGroupSpec::cyclic(order, g_index), twist);
            return json_to_py(multiset_to_json(s));
        },
        py::arg("order"), py::arg("g_index"), py::arg("twist"),
        "Pairwise linking multiset of the covering link in a cyclic cover.");

    m.def(
        "cover_handlebody",
        [](int k, long long twist, bool two_torsion, long long dist) {
            return json_to_py(
                multiset_to_json(handlebody_cover_linking(k, twist, two_torsion, dist)));
        },
        py::arg("k"), py::arg("twist"), py::arg("two_torsion") = false, py::arg("dist") = 0);

    m.def(
        "torsion_of_complex",
        [](const py::dict& doc) {
            ComplexDocument c = complex_from_json(py_to_json(doc));
            if (!check_complex(c.complex))
                throw std::invalid_argument("boundary composites are non-zero");
            bool acyclic = is_acyclic(c.complex);
            Json result{{"acyclic", acyclic}, {"torsion", nullptr}};
            if (acyclic) result["torsion"] = to_string(torsion(c.complex), c.variables);
            return json_to_py(result);
        },
        py::arg("complex"), "Torsion of a based acyclic chain complex over Q(F).");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            int code = run_cli(args, out);
            return py::make_tuple(code, out.str());
        },
        py::arg("args"), "Run a CLI command in-process; returns (exit_code, stdout).");
}
