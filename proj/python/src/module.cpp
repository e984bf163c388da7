// python bindings over the library: the cli surface as plain functions
// returning dicts, with every big value crossing the boundary as a python int

#include "supercount/count.hpp"
#include "supercount/curve.hpp"
#include "supercount/hw_direct.hpp"
#include "supercount/lift.hpp"
#include "supercount/oracle.hpp"
#include "supercount/quadratic.hpp"
#include "supercount/recurrence.hpp"
#include "supercount/trinomial.hpp"

#include <pybind11/pybind11.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

using namespace supercount;

py::int_ to_py(const Integer& n) {
    PyObject* obj = PyLong_FromString(to_decimal(n).c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Integer to_big(py::handle h) { return from_decimal(py::str(h).cast<std::string>()); }

py::list big_list(const std::vector<Integer>& xs) {
    py::list out;
    for (const Integer& x : xs) out.append(to_py(x));
    return out;
}

CurveSpec spec_from(const std::string& curve, const py::object& p) {
    CurveSpec spec = parse_curve(curve);
    if (!p.is_none()) {
        if (spec.p != 0) throw ParseError("p is set both in the curve text and as an argument");
        spec.p = to_big(p);
    }
    return spec;
}

// the closed-form trinomial route never materializes the matrix
HasseWittMatrix matrix_for(const CurveSpec& spec, Method method) {
    if (method == Method::Trinomial)
        throw ParseError("the trinomial route has no full-matrix form; use bgs or direct");
    if (method == Method::Auto) method = spec.p <= 1024 ? Method::Direct : Method::Bgs;
    return method == Method::Direct ? hw_matrix_direct(spec) : hw_matrix_bgs(spec);
}

py::dict py_parse(const std::string& curve) {
    CurveSpec spec = parse_curve(curve);
    py::dict out;
    out["a"] = spec.a;
    out["b"] = spec.b;
    out["c"] = spec.c();
    out["m"] = big_list(spec.m);
    out["p"] = spec.p == 0 ? py::object(py::none()) : py::object(to_py(spec.p));
    return out;
}

py::list py_validate(const std::string& curve, const py::object& p) {
    py::list out;
    for (const ValidationIssue& issue : validate(spec_from(curve, p))) {
        py::dict item;
        item["code"] = issue.code;
        item["detail"] = issue.detail;
        out.append(item);
    }
    return out;
}

py::dict py_count(const std::string& curve, const py::object& p, const std::string& method) {
    CurveSpec spec = spec_from(curve, p);
    CountReport report = count_points(spec, parse_method(method));
    py::dict out;
    out["p"] = to_py(spec.p);
    out["genus"] = report.result.genus;
    out["trace"] = to_py(report.result.trace);
    out["count"] = to_py(report.result.count);
    out["method"] = method_name(report.method);
    out["ms"] = report.ms;
    return out;
}

py::dict py_hasse_witt(const std::string& curve, const py::object& p, const std::string& method) {
    auto A = matrix_for(require_valid(spec_from(curve, p)), parse_method(method));
    py::dict out;
    out["p"] = to_py(A.p);
    out["genus"] = A.genus();
    py::list basis;
    for (const LatticePoint& q : A.basis.points) basis.append(py::make_tuple(q.i, q.j));
    out["basis"] = basis;
    py::list entries;
    for (const auto& row : A.entries) entries.append(big_list(row));
    out["entries"] = entries;
    return out;
}

py::dict py_charpoly(const std::string& curve, const py::object& p, const std::string& method) {
    auto A = matrix_for(require_valid(spec_from(curve, p)), parse_method(method));
    py::dict out;
    out["p"] = to_py(A.p);
    out["genus"] = A.genus();
    out["charpoly"] = big_list(charpoly_mod(A));
    out["frobenius"] = big_list(frobenius_charpoly_mod(A));
    return out;
}

py::dict py_jacobian(const std::string& curve, const py::object& p, const std::string& method,
                     long cap) {
    CurveSpec valid = require_valid(spec_from(curve, p));
    Method want = parse_method(method);
    long g = genus(valid);
    py::dict out;
    out["p"] = to_py(valid.p);
    out["genus"] = g;
    if (g == 0) {
        out["orders"] = big_list({Integer(1)});
        out["resolved"] = true;
    } else if (g == 1) {
        auto A = matrix_for(valid, want);
        Integer t = lift_trace(trace(A), valid.p, 1);
        out["orders"] = big_list({count_from_trace(t, valid.p)});
        out["resolved"] = true;
    } else if (g == 2) {
        auto A = matrix_for(valid, want);
        Integer a1 = lift_trace(trace(A), valid.p, 2);
        auto chi = charpoly_mod(A);
        auto cand = jacobian_candidates_g2(a1, chi[0], valid.p);
        out["a1"] = to_py(cand.a1);
        out["interval"] = big_list({cand.a2_lo, cand.a2_hi});
        out["a2_values"] = big_list(cand.a2_values);
        out["orders"] = big_list(cand.orders);
        out["resolved"] = false;
    } else if (g == 3) {
        auto A = matrix_for(valid, want);
        Integer jmod = jacobian_order_mod_p(A);
        auto cand = jacobian_candidates_g3(jmod, valid.p, Natural(cap));
        out["residue"] = to_py(jmod);
        out["interval"] = big_list({cand.lo, cand.hi});
        out["total"] = to_py(cand.total);
        if (!cand.orders.empty()) out["orders"] = big_list(cand.orders);
        out["resolved"] = false;
    } else {
        throw Unsupported("no jacobian handling for genus " + std::to_string(g));
    }
    return out;
}

py::int_ py_affine_count(const std::string& curve, const py::object& p) {
    return to_py(oracle::affine_count(require_valid(spec_from(curve, p))));
}

py::int_ py_smooth_count(const std::string& curve, const py::object& p) {
    return to_py(oracle::smooth_count(require_valid(spec_from(curve, p))));
}

py::int_ py_jacobian_order_g2(const std::string& curve, const py::object& p) {
    return to_py(oracle::jacobian_order_g2(require_valid(spec_from(curve, p))));
}

py::int_ py_sqrt_mod(const py::object& a, const py::object& p) {
    return to_py(sqrt_mod(to_big(a), to_big(p)));
}

py::dict py_decompose_prime(const py::object& p, int e) {
    PrimeDecomposition dec = decompose_prime(to_big(p), e);
    py::dict out;
    out["e"] = dec.e;
    out["d"] = dec.d;
    out["a"] = to_py(dec.a);
    out["b"] = to_py(dec.b);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact point counts for superelliptic curves y^a = x^b f(x) over prime fields";

    py::register_local_exception_translator([](std::exception_ptr ep) {
        try {
            if (ep) std::rethrow_exception(ep);
        } catch (const error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def("parse", &py_parse, py::arg("curve"),
          "parse curve text `a=.. b=.. m=[..] p=..` into a dict");
    m.def("validate", &py_validate, py::arg("curve"), py::arg("p") = py::none(),
          "list of {code, detail} issues; empty means valid");
    m.def("count", &py_count, py::arg("curve"), py::arg("p") = py::none(),
          py::arg("method") = "auto", "exact #C(F_p) with the lifted frobenius trace");
    m.def("hasse_witt", &py_hasse_witt, py::arg("curve"), py::arg("p") = py::none(),
          py::arg("method") = "auto", "hasse-witt matrix mod p on the interior-monomial basis");
    m.def("charpoly", &py_charpoly, py::arg("curve"), py::arg("p") = py::none(),
          py::arg("method") = "auto",
          "characteristic polynomial of the matrix and of frobenius, mod p, ascending");
    m.def("jacobian", &py_jacobian, py::arg("curve"), py::arg("p") = py::none(),
          py::arg("method") = "auto", py::arg("cap") = 10000,
          "jacobian order (g <= 1) or candidate lists (g = 2, 3)");
    m.def("affine_count", &py_affine_count, py::arg("curve"), py::arg("p") = py::none(),
          "brute-force affine point count");
    m.def("smooth_count", &py_smooth_count, py::arg("curve"), py::arg("p") = py::none(),
          "brute-force smooth projective point count (b = 0, gcd(a, c) = 1)");
    m.def("jacobian_order_g2", &py_jacobian_order_g2, py::arg("curve"), py::arg("p") = py::none(),
          "brute-force jacobian order for genus-2 curves with small p");
    m.def("sqrt_mod", &py_sqrt_mod, py::arg("a"), py::arg("p"),
          "square root mod an odd prime; raises on non-residues");
    m.def("decompose_prime", &py_decompose_prime, py::arg("p"), py::arg("e"),
          "p = a^2 + d b^2 with the sign of a normalized, for e in {3, 4, 6, 8}");
}
