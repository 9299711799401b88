#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twistspin/coset.hpp"
#include "twistspin/fpcore.hpp"
#include "twistspin/twistspin.hpp"
#include "twistspin/wirtinger.hpp"

namespace py = pybind11;
namespace ts = twistspin;

namespace {

std::vector<long> torsion_as_longs(const ts::AbelianInvariants& inv) {
    std::vector<long> out;
    out.reserve(inv.torsion.size());
    for (const auto& d : inv.torsion) out.push_back(static_cast<long>(d));
    return out;
}

ts::Limits limits_from(long max_cosets) {
    ts::Limits lim;
    if (max_cosets > 0) lim.max_cosets = max_cosets;
    return lim;
}

}  // namespace

PYBIND11_MODULE(_twistspin, m) {
    m.doc() = "Knot group presentations, twist-spun quotients, and coset enumeration";

    py::register_exception<ts::Error>(m, "TwistspinError");

    py::class_<ts::Word>(m, "Word")
        .def(py::init<>())
        .def(py::init<std::vector<int>>())
        .def_readwrite("letters", &ts::Word::letters)
        .def("__eq__", [](const ts::Word& a, const ts::Word& b) { return a == b; })
        .def("__repr__", [](const ts::Word& w) { return ts::render_word(w); });

    py::class_<ts::MarkedPresentation>(m, "Presentation")
        .def(py::init<>())
        .def_readwrite("generators", &ts::MarkedPresentation::generators)
        .def_readwrite("relators", &ts::MarkedPresentation::relators)
        .def_readwrite("meridian", &ts::MarkedPresentation::meridian)
        .def("__repr__",
             [](const ts::MarkedPresentation& p) { return ts::render_presentation(p); });

    py::class_<ts::KnotInput>(m, "Knot")
        .def_readonly("name", &ts::KnotInput::name)
        .def_property_readonly("is_two_bridge", &ts::KnotInput::is_two_bridge)
        .def("__repr__", [](const ts::KnotInput& k) { return "Knot(" + k.name + ")"; });

    m.def("parse_knot", &ts::parse_knot, py::arg("text"), py::arg("name") = "",
          "Parse PD[...], BR[...], or TB[p/q] notation");
    m.def("knot_group", &ts::knot_group);
    m.def("knot_longitude", &ts::knot_longitude);
    m.def("twist_spin", &ts::twist_spin_presentation, py::arg("presentation"), py::arg("n"));
    m.def("connect_sum_rp2", &ts::connect_sum_rp2);
    m.def("meridian_power_quotient", &ts::meridian_power_quotient, py::arg("presentation"),
          py::arg("m"));
    m.def("parity_reduce", &ts::parity_reduce, py::arg("presentation"), py::arg("n"));

    m.def(
        "group_order",
        [](const ts::MarkedPresentation& p, long max_cosets) -> py::object {
            ts::OrderResult r = ts::group_order(p, limits_from(max_cosets));
            if (!r.complete()) return py::none();
            return py::int_(r.order);
        },
        py::arg("presentation"), py::arg("max_cosets") = 0,
        "Group order by coset enumeration; None when the enumeration overflows");

    m.def(
        "subgroup_index",
        [](const ts::MarkedPresentation& p, const std::vector<ts::Word>& subgroup,
           long max_cosets) -> py::object {
            ts::EnumerationResult r =
                ts::enumerate_cosets(p, subgroup, limits_from(max_cosets));
            if (!r.complete()) return py::none();
            return py::int_(r.index);
        },
        py::arg("presentation"), py::arg("subgroup"), py::arg("max_cosets") = 0);

    m.def(
        "word_is_trivial",
        [](const ts::MarkedPresentation& p, const ts::Word& w, long max_cosets) -> py::object {
            switch (ts::word_is_trivial(p, w, limits_from(max_cosets))) {
                case ts::Triviality::True: return py::bool_(true);
                case ts::Triviality::False: return py::bool_(false);
                default: return py::none();
            }
        },
        py::arg("presentation"), py::arg("word"), py::arg("max_cosets") = 0,
        "True/False when decided, None when the enumeration overflows");

    m.def(
        "abelian_invariants",
        [](const ts::MarkedPresentation& p) {
            ts::AbelianInvariants inv = ts::abelian_invariants(p);
            return py::make_tuple(torsion_as_longs(inv), inv.free_rank);
        },
        py::arg("presentation"), "Returns (torsion_divisors, free_rank)");

    m.def(
        "simplify",
        [](const ts::MarkedPresentation& p, long budget) {
            ts::TietzeResult t = ts::tietze_simplify(p, budget);
            return py::make_tuple(t.presentation, t.budget_exceeded);
        },
        py::arg("presentation"), py::arg("budget") = 100000);

    m.def(
        "verify_lemma2",
        [](const std::string& knot, int n, long max_cosets) {
            ts::KnotInput k = ts::parse_knot(knot);
            ts::VerificationReport rep =
                n % 2 == 1 ? ts::verify_lemma2_odd(k, n, limits_from(max_cosets))
                           : ts::verify_lemma2_even(k, n, limits_from(max_cosets));
            py::dict d;
            d["knot"] = rep.knot;
            d["n"] = rep.n;
            d["order"] = rep.order ? py::object(py::int_(*rep.order)) : py::none();
            d["verdict"] = ts::to_string(rep.verdict);
            d["longitude_trivial"] = ts::to_string(rep.longitude_trivial);
            return d;
        },
        py::arg("knot"), py::arg("n"), py::arg("max_cosets") = 0);
}
