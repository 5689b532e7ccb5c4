#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "boolring/dimacs.hpp"
#include "boolring/duality.hpp"
#include "boolring/errors.hpp"
#include "boolring/fixtures.hpp"
#include "boolring/hilbert.hpp"
#include "boolring/ideal.hpp"
#include "boolring/parse.hpp"
#include "boolring/sat.hpp"
#include "boolring/variety.hpp"

namespace py = pybind11;
using namespace boolring;

namespace {

Monomial point_from_py(const std::vector<int>& coords) {
    Monomial p(static_cast<unsigned>(coords.size()));
    for (unsigned i = 0; i < coords.size(); ++i) {
        if (coords[i] != 0 && coords[i] != 1) {
            throw std::invalid_argument("point coordinates must be 0 or 1");
        }
        if (coords[i]) p.set(i);
    }
    return p;
}

py::tuple point_to_py(const Monomial& p) {
    py::tuple out(p.width());
    for (unsigned i = 0; i < p.width(); ++i) out[i] = p.test(i) ? 1 : 0;
    return out;
}

std::vector<py::tuple> points_to_py(const std::vector<Monomial>& pts) {
    std::vector<py::tuple> out;
    out.reserve(pts.size());
    for (const Monomial& p : pts) out.push_back(point_to_py(p));
    return out;
}

std::vector<Monomial> points_from_py(const std::vector<std::vector<int>>& pts, unsigned n) {
    std::vector<Monomial> out;
    out.reserve(pts.size());
    for (const auto& coords : pts) {
        if (coords.size() != n) throw std::invalid_argument("point width mismatch");
        out.push_back(point_from_py(coords));
    }
    return out;
}

PolySystem system_from_py(const std::vector<BoolPoly>& polys, std::optional<unsigned> n) {
    if (polys.empty()) {
        if (!n) throw std::invalid_argument("an empty system needs an explicit variable count");
        return PolySystem(*n);
    }
    PolySystem sys(n.value_or(polys.front().width()));
    for (const BoolPoly& f : polys) sys.push_back(f);
    return sys;
}

SatSchedule schedule_from_name(const std::string& name) {
    if (name == "components") return SatSchedule::components;
    if (name == "flat") return SatSchedule::flat;
    if (name == "staged") return SatSchedule::degree_staged;
    throw std::invalid_argument("schedule must be components, flat or staged");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Arithmetic, varieties, ideal operations and model counting in the "
              "boolean ring Z2[x1..xn]/(x1^2+x1,...,xn^2+xn)";

    py::register_exception<guard_error>(m, "GuardError", PyExc_RuntimeError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    py::class_<BoolPoly>(m, "BoolPoly")
        .def(py::init([](const std::string& text, std::optional<unsigned> vars) {
                 return parse_poly(text, vars);
             }),
             py::arg("text"), py::arg("vars") = std::nullopt,
             "Parse a polynomial like 'x1*x2 + x3 + 1'")
        .def_static("zero", &BoolPoly::zero, py::arg("n"))
        .def_static("one", &BoolPoly::one, py::arg("n"))
        .def_property_readonly("n", &BoolPoly::width)
        .def_property_readonly("is_zero", &BoolPoly::is_zero)
        .def_property_readonly("degree", &BoolPoly::degree)
        .def_property_readonly("support_size", &BoolPoly::support_size)
        .def(
            "terms",
            [](const BoolPoly& f) {
                std::vector<py::tuple> out;
                for (const Monomial& t : f.terms()) {
                    std::vector<unsigned> one_based;
                    for (unsigned i : t.indices()) one_based.push_back(i + 1);
                    out.push_back(py::cast(one_based));
                }
                return out;
            },
            "Support as tuples of 1-based variable indices; the unit term is ()")
        .def(
            "eval",
            [](const BoolPoly& f, const std::vector<int>& p) {
                return static_cast<int>(f.eval(point_from_py(p)));
            },
            py::arg("point"))
        .def("__add__", [](const BoolPoly& a, const BoolPoly& b) { return a + b; })
        .def("__mul__", [](const BoolPoly& a, const BoolPoly& b) { return a * b; })
        .def("__eq__", [](const BoolPoly& a, const BoolPoly& b) { return a == b; })
        .def("__hash__", [](const BoolPoly& f) { return py::hash(py::str(f.str())); })
        .def("__str__", &BoolPoly::str)
        .def("__repr__", [](const BoolPoly& f) { return "BoolPoly('" + f.str() + "')"; });

    py::class_<SatReport>(m, "SatReport")
        .def_readonly("satisfiable", &SatReport::satisfiable)
        .def_readonly("term_high_water", &SatReport::term_high_water)
        .def_readonly("full_monomial_in_product", &SatReport::full_monomial_in_product)
        .def_readonly("odd_solution_count", &SatReport::odd_solution_count)
        .def("__repr__", [](const SatReport& r) {
            return std::string("SatReport(satisfiable=") + (r.satisfiable ? "True" : "False") +
                   ")";
        });

    py::class_<SolutionCount>(m, "SolutionCount")
        .def_readonly("count", &SolutionCount::count)
        .def_readonly("d_terms", &SolutionCount::d_terms)
        .def_readonly("support_size", &SolutionCount::support_size)
        .def_readonly("term_high_water", &SolutionCount::term_high_water)
        .def("__repr__", [](const SolutionCount& c) {
            return "SolutionCount(count=" + std::to_string(c.count) + ")";
        });

    m.def(
        "sat",
        [](const std::vector<BoolPoly>& polys, std::optional<unsigned> n, bool early_stop,
           const std::string& schedule) {
            SatOptions options;
            options.early_stop = early_stop;
            options.schedule = schedule_from_name(schedule);
            return sat_product(system_from_py(polys, n), options);
        },
        py::arg("polys"), py::arg("n") = std::nullopt, py::arg("early_stop") = false,
        py::arg("schedule") = "components",
        "Satisfiability of f_1 = ... = f_m = 0 via the product (f_1+1)...(f_m+1)");

    m.def(
        "count_solutions",
        [](const std::vector<BoolPoly>& polys, std::optional<unsigned> n, unsigned subset_guard) {
            return count_solutions(system_from_py(polys, n), subset_guard);
        },
        py::arg("polys"), py::arg("n") = std::nullopt, py::arg("subset_guard") = kSubsetGuard,
        "Exact number of common solutions by the closed-form alternating sum");

    m.def(
        "variety",
        [](const BoolPoly& f, const std::string& method, unsigned guard, unsigned subset_guard) {
            std::vector<Monomial> pts;
            if (method == "brute") {
                pts = variety_bruteforce(f, guard);
            } else if (method == "explicit1") {
                pts = variety_explicit1(f, guard, subset_guard);
            } else if (method == "explicit2") {
                pts = variety_explicit2(f, guard, subset_guard);
            } else if (method == "mod2") {
                pts = variety_mod2_projection(f, guard, subset_guard);
            } else {
                throw std::invalid_argument("method must be brute, explicit1, explicit2 or mod2");
            }
            return points_to_py(pts);
        },
        py::arg("f"), py::arg("method") = "brute", py::arg("guard") = kEnumGuard,
        py::arg("subset_guard") = kSubsetGuard, "Zero set of f as sorted coordinate tuples");

    m.def(
        "defining_polynomial",
        [](const std::vector<BoolPoly>& polys, std::optional<unsigned> n) {
            return defining_ideal(system_from_py(polys, n)).defining();
        },
        py::arg("polys"), py::arg("n") = std::nullopt,
        "The single polynomial f with (field polys, f) = (field polys, f_1,...,f_m)");

    m.def(
        "normal_form",
        [](const BoolPoly& g, const BoolPoly& f, std::optional<BoolPoly> h) {
            BooleanIdeal ideal(f);
            return normal_form(g, ideal, h.value_or(BoolPoly::zero(f.width())));
        },
        py::arg("g"), py::arg("f"), py::arg("h") = std::nullopt,
        "The normal form (f+1)g + h of g modulo the ideal defined by f");

    m.def(
        "member", [](const BoolPoly& f, const BoolPoly& g) { return contains(BooleanIdeal(f), g); },
        py::arg("f"), py::arg("g"), "Whether g lies in the ideal defined by f");

    m.def(
        "equivalences",
        [](const BoolPoly& f, const BoolPoly& g, unsigned guard) {
            auto bits = equivalences_report(BooleanIdeal(f), g, guard);
            return std::vector<bool>(bits.begin(), bits.end());
        },
        py::arg("f"), py::arg("g"), py::arg("guard") = 12,
        "The ten equivalent membership conditions, each evaluated independently");

    m.def(
        "colon",
        [](const BoolPoly& f, const BoolPoly& g) {
            return colon(BooleanIdeal(f), BooleanIdeal(g)).defining();
        },
        py::arg("f"), py::arg("g"), "Defining polynomial of I:J, namely 1 + g + f*g");
    m.def(
        "ideal_sum",
        [](const BoolPoly& f, const BoolPoly& g) {
            return sum(BooleanIdeal(f), BooleanIdeal(g)).defining();
        },
        py::arg("f"), py::arg("g"), "Defining polynomial of I + J");
    m.def(
        "ideal_intersect",
        [](const BoolPoly& f, const BoolPoly& g) {
            return intersect(BooleanIdeal(f), BooleanIdeal(g)).defining();
        },
        py::arg("f"), py::arg("g"), "Defining polynomial of IJ = I ∩ J");

    m.def("full_sum", [](unsigned n, unsigned guard) { return full_sum(n, guard); }, py::arg("n"),
          py::arg("guard") = kEnumGuard, "The sum of all 2^n square-free monomials");

    m.def(
        "separator",
        [](const std::vector<int>& p, unsigned guard) {
            return separator(point_from_py(p), guard);
        },
        py::arg("point"), py::arg("guard") = kEnumGuard,
        "S_p: 1 at the point, 0 everywhere else");

    m.def(
        "interpolation_nf",
        [](const std::vector<unsigned>& exponent_vars, const std::vector<std::vector<int>>& pts,
           unsigned n, unsigned guard) {
            std::vector<unsigned> zero_based;
            for (unsigned v : exponent_vars) {
                if (v == 0) throw std::invalid_argument("variable indices are 1-based");
                zero_based.push_back(v - 1);
            }
            return interpolation_nf(Monomial::from_indices(n, zero_based),
                                    points_from_py(pts, n), guard);
        },
        py::arg("exponent_vars"), py::arg("points"), py::arg("n"), py::arg("guard") = kEnumGuard,
        "Separator interpolation form of a monomial over the given points");

    m.def(
        "pol",
        [](const std::vector<std::vector<int>>& pts, unsigned n) {
            return pol(points_from_py(pts, n), n);
        },
        py::arg("points"), py::arg("n"), "The unique polynomial vanishing exactly on the points");

    m.def(
        "inverse_variety",
        [](const std::vector<std::vector<int>>& pts, unsigned n, unsigned guard) {
            return inverse_variety(points_from_py(pts, n), n, guard);
        },
        py::arg("points"), py::arg("n"), py::arg("guard") = kEnumGuard,
        "pol cross-checked against the dual route through x^{V(.)}");

    m.def("phi", [](const BoolPoly& f, unsigned guard) { return phi(f, guard); }, py::arg("f"),
          py::arg("guard") = kEnumGuard, "x^{V(f)}; the fourth power of phi is the identity");

    m.def(
        "parity_odd",
        [](const BoolPoly& f) { return variety_parity(f) == Parity::odd; }, py::arg("f"),
        "Whether |V(f)| is odd, read off the top monomial of the support");

    m.def(
        "factorize",
        [](const BoolPoly& f, unsigned guard) { return factorize(f, guard); }, py::arg("f"),
        py::arg("guard") = kEnumGuard, "The factors pol({p}) over p in V(f)");

    m.def(
        "particular_solution",
        [](const std::vector<BoolPoly>& polys,
           std::optional<unsigned> n) -> std::optional<py::tuple> {
            auto p = particular_solution(system_from_py(polys, n));
            if (!p) return std::nullopt;
            return point_to_py(*p);
        },
        py::arg("polys"), py::arg("n") = std::nullopt,
        "A solution certified by the support of the combined polynomial, if any");

    m.def(
        "parse_dimacs",
        [](const std::string& text) {
            std::istringstream in(text);
            ClauseSystem cs = read_dimacs(in);
            PolySystem sys = stone_transform(cs);
            return py::make_tuple(sys.width(), sys.generators());
        },
        py::arg("text"),
        "DIMACS CNF text to (n, clause polynomials) via the satisfiability-preserving encoding");

    m.def(
        "stone_transform",
        [](unsigned n, const std::vector<std::vector<int>>& clauses) {
            return stone_transform(ClauseSystem(n, clauses)).generators();
        },
        py::arg("n"), py::arg("clauses"),
        "Clause lists (1-based signed literals) to polynomials vanishing on satisfying points");

    m.def(
        "cyclic13",
        [](int variant) {
            return fixture_cyclic_truncated(variant == 1 ? CyclicVariant::ex1
                                                         : CyclicVariant::ex2)
                .generators();
        },
        py::arg("variant") = 1, "The truncated cyclic 13-variable benchmark generators");

    m.def(
        "pair_family",
        [](unsigned pairs) { return fixture_pair_family(pairs).generators(); }, py::arg("pairs"),
        "Generators x_{2i-1}x_{2i} + x_{2i-1} + x_{2i} + 1");

    m.def(
        "random_quadratic_system",
        [](unsigned n, unsigned generators, unsigned terms, std::uint64_t seed) {
            return random_quadratic_system(n, generators, terms, seed).generators();
        },
        py::arg("n"), py::arg("generators"), py::arg("terms") = 13, py::arg("seed") = 1,
        "Seeded random degree-2 generators");

    m.attr("__version__") = "0.1.0";
}
