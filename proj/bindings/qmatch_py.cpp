// Python bindings for the main operations: expand, verify, scan, list.
// Arbitrary-precision coefficients cross the boundary as Python ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmatch/expr.hpp"
#include "qmatch/matching.hpp"
#include "qmatch/registry.hpp"

namespace py = pybind11;
using namespace qmatch;

namespace {

py::int_ to_py(const Int& v) {
    // route through the decimal string; exact for any size
    return py::int_(py::str(v.get_str()));
}

py::dict relation_dict(const MatchRelation& r) {
    py::dict d;
    d["cA"] = to_py(r.cA);
    d["aA"] = r.aA;
    d["rA"] = r.rA;
    d["cB"] = to_py(r.cB);
    d["aB"] = r.aB;
    d["rB"] = r.rB;
    return d;
}

MatchRelation relation_from_dict(const py::dict& d) {
    MatchRelation r;
    r.cA = Int(py::str(d["cA"]).cast<std::string>());
    r.aA = d["aA"].cast<std::int64_t>();
    r.rA = d["rA"].cast<std::int64_t>();
    r.cB = Int(py::str(d["cB"]).cast<std::string>());
    r.aB = d["aB"].cast<std::int64_t>();
    r.rB = d["rB"].cast<std::int64_t>();
    return r;
}

}  // namespace

PYBIND11_MODULE(_qmatch, m) {
    m.doc() = "exact q-series expansion and matching-coefficient verification";

    py::register_exception<ParseError>(m, "QParseError");
    py::register_exception<NonUnitLeadingError>(m, "NonUnitLeadingError");
    py::register_exception<InsufficientOrderError>(m, "InsufficientOrderError");
    py::register_exception<OrderExceededError>(m, "OrderExceededError");

    m.def(
        "expand",
        [](const std::string& expr, std::int64_t N) {
            TruncatedSeries s = evaluate(parse(expr), N);
            if (s.order() > N) s = s.truncate(N);
            py::dict out;
            out["valuation"] = s.is_zero() ? 0 : s.valuation();
            out["order"] = s.order();
            py::list coeffs;
            std::int64_t lo = std::min<std::int64_t>(0, s.valuation());
            for (std::int64_t n = lo; n < s.order(); ++n) coeffs.append(to_py(s.coefficient(n)));
            out["start"] = lo;
            out["coeffs"] = coeffs;
            return out;
        },
        py::arg("expr"), py::arg("order") = 64,
        "Expand an expression; returns valuation, order, and exact coefficients.");

    m.def(
        "verify",
        [](const std::string& target, std::int64_t N, std::int64_t min_checks, int jobs) {
            py::list out;
            for (const auto& r : verify_all(target, N, min_checks, jobs)) {
                py::dict d;
                d["id"] = r.id;
                d["kind"] = entry_kind_name(r.kind);
                d["passed"] = r.passed();
                d["status"] = r.status == EntryResult::Status::Passed ? "passed"
                              : r.status == EntryResult::Status::Failed
                                  ? "failed"
                                  : "insufficient-order";
                d["checked"] = r.checked_count;
                d["order"] = r.order_used;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("target") = "all", py::arg("order") = 600, py::arg("min_checks") = 50,
        py::arg("jobs") = 1, "Verify catalog entries by id or prefix.");

    m.def(
        "verify_relation",
        [](const std::string& expr, const py::dict& relation, std::int64_t N,
           std::int64_t min_checks) {
            auto [A, B] = reciprocal_pair(parse(expr), N);
            VerificationReport rep = verify_relation(A, B, relation_from_dict(relation), min_checks);
            py::dict d;
            d["passed"] = rep.passed;
            d["checked"] = rep.checked_count;
            d["first_failure_n"] =
                rep.first_failure_n ? py::object(py::int_(*rep.first_failure_n)) : py::none();
            return d;
        },
        py::arg("expr"), py::arg("relation"), py::arg("order") = 600,
        py::arg("min_checks") = 50,
        "Check one matching-coefficient relation between an expression and its reciprocal.");

    m.def(
        "scan",
        [](const std::string& expr, std::int64_t N, std::int64_t max_modulus,
           std::int64_t min_checks) {
            auto [A, B] = reciprocal_pair(parse(expr), N);
            py::list out;
            for (const auto& r : scan(A, B, max_modulus, min_checks))
                out.append(relation_dict(r));
            return out;
        },
        py::arg("expr"), py::arg("order") = 600, py::arg("max_modulus") = 24,
        py::arg("min_checks") = 50,
        "Search for matching-coefficient relations between an expression and its reciprocal.");

    m.def("list_catalog", [] {
        py::list out;
        for (const auto& e : Registry::instance().entries()) {
            py::dict d;
            d["id"] = e.id;
            d["kind"] = entry_kind_name(e.kind);
            d["source"] = e.source;
            out.append(d);
        }
        return out;
    });

    m.def("catalog_json", &export_catalog_json);
}
