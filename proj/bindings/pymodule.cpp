// Python bindings: a thin string/JSON-oriented facade over the exact core.
// Polynomials cross the boundary as expression text plus (n, h, family)
// context, so every value stays exact; nothing is converted to floats.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dcl/claims.hpp"
#include "dcl/fischer.hpp"
#include "dcl/io.hpp"
#include "dcl/operators.hpp"

namespace py = pybind11;
using namespace dcl;

namespace {

FamilySign family_from(const std::string& f) {
    if (f == "-") return FamilySign::Minus;
    if (f == "+") return FamilySign::Plus;
    throw std::invalid_argument("family must be '-' or '+'");
}

LatticePolynomial parse(const std::string& expr, int n, const std::string& h,
                        const std::string& family) {
    return parse_polynomial(expr, n, Rational::parse(h), family_from(family));
}

}  // namespace

PYBIND11_MODULE(_dcl, m) {
    m.doc() = "exact discrete Clifford calculus on rational lattices";

    m.def(
        "apply",
        [](const std::string& op, const std::string& expr, int n, const std::string& h,
           const std::string& family) {
            return print_polynomial(DifferenceOperator::parse(op).apply(
                parse(expr, n, h, family)));
        },
        py::arg("op"), py::arg("expr"), py::arg("n") = 2, py::arg("h") = "1",
        py::arg("family") = "-",
        "apply a named difference operator (dh+, lap, euler-, A+, R+:3/2, ...) and print "
        "the exact image");

    m.def(
        "eval",
        [](const std::string& expr, const std::vector<std::string>& point, int n,
           const std::string& h, const std::string& family) {
            std::vector<Rational> at;
            for (const auto& c : point) at.push_back(Rational::parse(c));
            return parse(expr, n, h, family).evaluate(at).str();
        },
        py::arg("expr"), py::arg("point"), py::arg("n") = 2, py::arg("h") = "1",
        py::arg("family") = "-", "evaluate at a rational lattice point, exactly");

    m.def(
        "decompose",
        [](const std::string& expr, int n, const std::string& h, const std::string& family,
           const std::string& strategy) {
            auto res = fischer_decompose_dirac(parse(expr, n, h, family), strategy);
            return to_json(res).dump(2);
        },
        py::arg("expr"), py::arg("n") = 2, py::arg("h") = "1", py::arg("family") = "-",
        py::arg("strategy") = "auto", "Fischer decomposition, JSON report");

    m.def(
        "kernel_dimension",
        [](int degree, int n, const std::string& h, const std::string& family) {
            return monogenic_kernel(degree, n, Rational::parse(h), family_from(family))
                .elements.size();
        },
        py::arg("degree"), py::arg("n") = 2, py::arg("h") = "1", py::arg("family") = "-",
        "dimension of the homogeneous monogenic kernel");

    m.def(
        "verify",
        [](const std::string& filter, unsigned long long seed) {
            RegistryOptions opt;
            opt.filter = filter;
            opt.seed = seed;
            auto rep = run_registry(opt);
            return py::make_tuple(rep.exit_code(), rep.json().dump(2));
        },
        py::arg("filter") = "", py::arg("seed") = 0ULL,
        "run the claim registry; returns (exit_code, json_report)");

    m.def("claim_ids", [] {
        std::vector<std::string> out;
        for (const auto& c : list_claims()) out.push_back(c.id);
        return out;
    });
}
