#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "permstat/bijection_checks.hpp"
#include "permstat/conjectures.hpp"
#include "permstat/formulas.hpp"
#include "permstat/oracle.hpp"
#include "permstat/serialize.hpp"
#include "permstat/verify.hpp"

namespace py = pybind11;
using namespace permstat;

namespace {

Population population(const std::string& name) {
    const auto p = parse_population(name);
    if (!p) throw std::invalid_argument("unknown population " + name);
    return *p;
}

Weight weight(const std::string& name) {
    const auto w = Weight::parse(name);
    if (!w) throw std::invalid_argument("unknown weight " + name);
    return *w;
}

Caps caps(int cap_perm, int cap_inv) {
    Caps c;
    if (cap_perm >= 0) c.perm = cap_perm;
    if (cap_inv >= 0) c.inv = cap_inv;
    return c;
}

py::dict terms(const MultiPoly& p) {
    py::dict d;
    for (const auto& [m, c] : p.terms()) d[py::make_tuple(m.p, m.q, m.t)] = c;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Statistics on pattern-avoiding involutions and permutations";
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::string& s) { return Permutation::parse(s); }))
        .def(py::init<std::vector<int>>())
        .def_property_readonly("word", &Permutation::word)
        .def("is_involution", &Permutation::is_involution)
        .def("inv", [](const Permutation& s) { return inv(s); })
        .def("maj", [](const Permutation& s) { return maj(s); })
        .def("descents", [](const Permutation& s) { return positions(descent_set(s)); })
        .def("contains", [](const Permutation& s, const Permutation& pat) { return contains(s, pat); })
        .def("__len__", &Permutation::size)
        .def("__str__", &Permutation::str)
        .def("__repr__", [](const Permutation& s) { return "Permutation('" + s.str() + "')"; })
        .def("__hash__", [](const Permutation& s) { return py::hash(py::str(s.str())); })
        .def(py::self == py::self)
        .def(py::self < py::self);

    py::class_<MultiPoly>(m, "Poly")
        .def(py::init<>())
        .def_static("parse", &MultiPoly::parse)
        .def("terms", &terms, "{(e_p, e_q, e_t): coefficient}")
        .def("q_coefficients", &MultiPoly::q_coefficients)
        .def("at_one", &MultiPoly::evaluate_at_one)
        .def("degree_q", &MultiPoly::degree_q)
        .def("is_zero", &MultiPoly::is_zero)
        .def("__str__", &MultiPoly::str)
        .def("__repr__", [](const MultiPoly& p) { return "Poly('" + p.str() + "')"; })
        .def(py::self == py::self)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self);

    m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));
    m.def("reverse_in_q", &reverse_in_q, py::arg("poly"), py::arg("n"));

    m.def(
        "genfun",
        [](const std::string& patterns, int n, const std::string& pop, const std::string& w, int jobs, int cap_perm, int cap_inv) {
            const AvoidanceClass cls{population(pop), n, parse_pattern_list(patterns)};
            py::gil_scoped_release nogil;
            return genfun(cls, weight(w), caps(cap_perm, cap_inv), ParallelOptions{jobs});
        },
        py::arg("patterns"), py::arg("n"), py::arg("population") = "inv", py::arg("weight") = "maj", py::arg("jobs") = 0,
        py::arg("cap_perm") = -1, py::arg("cap_inv") = -1);
    m.def(
        "members",
        [](const std::string& patterns, int n, const std::string& pop, int cap_perm, int cap_inv) {
            return AvoidanceClass{population(pop), n, parse_pattern_list(patterns)}.members(caps(cap_perm, cap_inv));
        },
        py::arg("patterns"), py::arg("n"), py::arg("population") = "inv", py::arg("cap_perm") = -1, py::arg("cap_inv") = -1);

    m.def("formula_ids", [] {
        std::vector<std::string> ids;
        for (const auto& f : FormulaRegistry::instance().list()) ids.push_back(f.id);
        return ids;
    });
    m.def(
        "formula", [](const std::string& id, int n, int k) { return FormulaRegistry::instance().eval(id, n, k); }, py::arg("id"),
        py::arg("n"), py::arg("k") = 0);

    m.def("bijection_names", &bijection_names);
    m.def("bijection", &run_bijection, py::arg("name"), py::arg("input"), py::arg("n") = -1);
    m.def(
        "_verify_bijection",
        [](const std::string& name, int n) { return to_json(verify_bijection(name, n)).dump(); }, py::arg("name"), py::arg("n"));

    m.def(
        "_verify",
        [](const std::string& scope, int n_inv, int n_perm, int m_fpf, int n_parity, int jobs) {
            VerifyOptions o;
            o.scope = scope;
            o.n_inv = n_inv;
            o.n_perm = n_perm;
            o.m_fpf = m_fpf;
            o.n_parity = n_parity;
            o.par.jobs = jobs;
            py::gil_scoped_release nogil;
            return to_json(run_verify(o)).dump();
        },
        py::arg("scope"), py::arg("n_inv"), py::arg("n_perm"), py::arg("m_fpf"), py::arg("n_parity"), py::arg("jobs"));

    m.def("conjecture_ids", &conjecture_ids);
    m.def(
        "_conjecture",
        [](const std::string& id, int max_len, int n_max, int m_max, int k_max, int jobs) {
            ConjectureGrid g;
            g.max_len = max_len;
            g.n_max = n_max;
            g.m_max = m_max;
            g.k_max = k_max;
            ConjectureOptions o;
            o.par.jobs = jobs;
            py::gil_scoped_release nogil;
            return to_json(run_conjecture(id, g, o)).dump();
        },
        py::arg("id"), py::arg("max_len"), py::arg("n_max"), py::arg("m_max"), py::arg("k_max"), py::arg("jobs"));
}
