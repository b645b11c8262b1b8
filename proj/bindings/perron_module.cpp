// Python bindings. Exact values cross the boundary losslessly: mpz maps to
// the Python int, mpq to fractions.Fraction.

#include "perron/certificate.hpp"
#include "perron/digraph.hpp"
#include "perron/errors.hpp"
#include "perron/family.hpp"
#include "perron/io.hpp"
#include "perron/numeric.hpp"
#include "perron/spectral.hpp"
#include "perron/substitution.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <tuple>
#include <vector>

namespace py = pybind11;

namespace pybind11 {
namespace detail {

template <> struct type_caster<perron::Int> {
    PYBIND11_TYPE_CASTER(perron::Int, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr()))
            return false;
        try {
            value = perron::Int(std::string(py::str(src)));
        } catch (const std::invalid_argument &) {
            return false;
        }
        return true;
    }

    static handle cast(const perron::Int &value, return_value_policy, handle) {
        return PyLong_FromString(value.get_str().c_str(), nullptr, 10);
    }
};

template <> struct type_caster<perron::Rat> {
    PYBIND11_TYPE_CASTER(perron::Rat, const_name("Fraction"));

    bool load(handle src, bool) {
        if (PyLong_Check(src.ptr())) {
            value = perron::Rat(perron::Int(std::string(py::str(src))));
            return true;
        }
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator"))
            return false;
        py::object num = src.attr("numerator");
        py::object den = src.attr("denominator");
        if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr()))
            return false;
        const std::string num_text = py::str(num);
        const std::string den_text = py::str(den);
        perron::Int n(num_text);
        perron::Int d(den_text);
        if (sgn(d) == 0)
            return false;
        value = perron::make_rat(std::move(n), std::move(d));
        return true;
    }

    static handle cast(const perron::Rat &value, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            PyLong_FromString(value.get_num().get_str().c_str(), nullptr, 10));
        py::object den = py::reinterpret_steal<py::object>(
            PyLong_FromString(value.get_den().get_str().c_str(), nullptr, 10));
        return fraction(num, den).release();
    }
};

} // namespace detail
} // namespace pybind11

namespace {

using namespace perron;

std::vector<std::tuple<int, int, Int>> edge_list(const NonNegIntMatrix &matrix) {
    std::vector<std::tuple<int, int, Int>> edges;
    for (const OrientedGraph::Edge &edge : graph_of(matrix).edges())
        edges.emplace_back(edge.from, edge.to, edge.weight);
    return edges;
}

} // namespace

PYBIND11_MODULE(_perron, m) {
    m.doc() = "certified spectral analysis of nonnegative integer matrices";

    py::register_exception<error>(m, "Error");

    py::enum_<SccClass>(m, "SccClass")
        .value("trivial", SccClass::trivial)
        .value("circle", SccClass::circle)
        .value("expanding", SccClass::expanding);

    py::class_<NonNegIntMatrix>(m, "NonNegIntMatrix")
        .def_static("from_rows", &NonNegIntMatrix::from_rows, py::arg("rows"))
        .def_static("zero", &NonNegIntMatrix::zero, py::arg("n"))
        .def_static("identity", &NonNegIntMatrix::identity, py::arg("n"))
        .def("dim", &NonNegIntMatrix::dim)
        .def("at", &NonNegIntMatrix::at, py::arg("row"), py::arg("col"))
        .def("rows", &NonNegIntMatrix::rows)
        .def("row_sum", &NonNegIntMatrix::row_sum, py::arg("row"))
        .def("column_sum", &NonNegIntMatrix::column_sum, py::arg("col"))
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const NonNegIntMatrix &a) {
            return "NonNegIntMatrix(" + std::to_string(a.dim()) + "x" + std::to_string(a.dim()) + ")";
        });

    py::class_<ConeVector>(m, "ConeVector")
        .def(py::init(&cone_vector), py::arg("coords"))
        .def_property_readonly("coords", [](const ConeVector &x) { return x.coords; })
        .def("dim", &ConeVector::dim)
        .def(py::self == py::self);

    py::class_<SccDecomposition>(m, "SccDecomposition")
        .def_readonly("components", &SccDecomposition::components)
        .def_readonly("condensation_order", &SccDecomposition::condensation_order)
        .def_readonly("component_of", &SccDecomposition::component_of);

    py::class_<SpectralInterval>(m, "SpectralInterval")
        .def_readonly("lower", &SpectralInterval::lower)
        .def_readonly("upper", &SpectralInterval::upper)
        .def_readonly("witness", &SpectralInterval::witness)
        .def("__repr__", [](const SpectralInterval &iv) {
            return "SpectralInterval[" + rat_to_string(iv.lower) + ", " + rat_to_string(iv.upper) + "]";
        });

    py::class_<DominantComponent>(m, "DominantComponent")
        .def_readonly("vertices", &DominantComponent::vertices)
        .def_readonly("interval", &DominantComponent::interval)
        .def_readonly("unresolved_ties", &DominantComponent::unresolved_ties);

    py::class_<PennerCertificate>(m, "PennerCertificate")
        .def_readonly("n", &PennerCertificate::n)
        .def_readonly("dominant_vertices", &PennerCertificate::dominant_vertices)
        .def_readonly("n_prime", &PennerCertificate::n_prime)
        .def_readonly("power_column_sums", &PennerCertificate::power_column_sums)
        .def("exponent_n_prime", &PennerCertificate::exponent_n_prime)
        .def("exponent_n", &PennerCertificate::exponent_n)
        .def("to_json", &certificate_to_string)
        .def_static("from_json", &certificate_from_json, py::arg("text"))
        .def(py::self == py::self);

    py::class_<BoundReport>(m, "BoundReport")
        .def_readonly("chi_abs", &BoundReport::chi_abs)
        .def_readonly("arc_cap", &BoundReport::arc_cap)
        .def_readonly("exponent", &BoundReport::exponent);

    py::class_<BoundExponents>(m, "BoundExponents")
        .def_readonly("sharper", &BoundExponents::sharper)
        .def_readonly("stated", &BoundExponents::stated);

    py::class_<FamilyStretch>(m, "FamilyStretch")
        .def_readonly("d", &FamilyStretch::d)
        .def_readonly("exponent", &FamilyStretch::exponent);

    py::class_<SharpnessReport>(m, "SharpnessReport")
        .def_readonly("d", &SharpnessReport::d)
        .def_readonly("chi_abs", &SharpnessReport::chi_abs)
        .def_readonly("actual_exponent", &SharpnessReport::actual_exponent)
        .def_readonly("bound_exponent", &SharpnessReport::bound_exponent)
        .def_readonly("ratio", &SharpnessReport::ratio);

    py::class_<Substitution>(m, "Substitution")
        .def_static("from_rules", &Substitution::from_rules, py::arg("rules"))
        .def_static("parse", &parse_substitution_text, py::arg("text"))
        .def("alphabet", &Substitution::alphabet)
        .def("images", &Substitution::images)
        .def("alphabet_size", &Substitution::alphabet_size)
        .def("index_of", &Substitution::index_of, py::arg("symbol"))
        .def(py::self == py::self);

    // intmatrix
    m.def("mat_pow", &mat_pow, py::arg("matrix"), py::arg("exponent"));
    m.def("path_count", &path_count, py::arg("matrix"), py::arg("from_vertex"), py::arg("to_vertex"),
          py::arg("length"));
    m.def("cone_norm", &cone_norm, py::arg("x"));
    m.def("apply", &apply, py::arg("matrix"), py::arg("x"));

    // digraph
    m.def("graph_edges", &edge_list, py::arg("matrix"),
          "Weighted edges (from, to, weight) of the oriented graph of the matrix");
    m.def("scc_decompose", py::overload_cast<const NonNegIntMatrix &>(&scc_decompose), py::arg("matrix"));
    m.def("restrict_to", &restrict_to, py::arg("matrix"), py::arg("vertices"));
    m.def("classify_component", &classify_component, py::arg("matrix"), py::arg("component"));
    m.def("is_circle", &is_circle, py::arg("matrix"), py::arg("component"));
    m.def("exceeds_one", &exceeds_one, py::arg("matrix"));
    m.def("component_period", &component_period, py::arg("matrix"), py::arg("component"));
    m.def("is_perron_frobenius", &is_perron_frobenius, py::arg("matrix"));

    // spectral
    m.def("collatz_wielandt", &collatz_wielandt, py::arg("matrix"), py::arg("x"));
    m.def("spectral_radius", &spectral_radius, py::arg("matrix"), py::arg("gap"),
          py::arg("iteration_cap") = default_iteration_cap);
    m.def("component_spectral_radius", &component_spectral_radius, py::arg("matrix"), py::arg("component"),
          py::arg("gap"), py::arg("iteration_cap") = default_iteration_cap);
    m.def("dominant_component", &dominant_component, py::arg("matrix"),
          py::arg("iteration_cap") = default_iteration_cap);

    // certificates
    m.def("certify", &certify, py::arg("matrix"));
    m.def("check", &check, py::arg("matrix"), py::arg("certificate"));
    m.def("core_bound", &core_bound, py::arg("chi_abs"));
    m.def("bound_from_certificate", &bound_from_certificate, py::arg("certificate"));

    // substitutions
    m.def("incidence_matrix", &incidence_matrix, py::arg("substitution"));
    m.def("iterate", &iterate, py::arg("substitution"), py::arg("n"));
    m.def("entropy_interval", &entropy_interval, py::arg("substitution"), py::arg("gap"),
          py::arg("iteration_cap") = default_iteration_cap);
    m.def("arc_count_admissible", &arc_count_admissible, py::arg("substitution"), py::arg("chi_abs"));

    // example family
    m.def("family_operator", &family_operator, py::arg("k"));
    m.def("family_stretch", &family_stretch, py::arg("d"));
    m.def("family_stretch_decimal", &family_stretch_decimal, py::arg("d"), py::arg("significant") = 10);
    m.def("sharpness_report", &sharpness_report, py::arg("d"), py::arg("chi_abs"));
    m.def("family_eigenvector", &family_eigenvector, py::arg("k"));

    // formats
    m.def("parse_matrix", &parse_matrix, py::arg("text"));
    m.def("matrix_to_json", [](const NonNegIntMatrix &a) { return matrix_json(a).dump(); },
          py::arg("matrix"));
    m.def("matrix_to_text", &matrix_to_text, py::arg("matrix"));
    m.def("scc_report", [](const NonNegIntMatrix &a) { return scc_report_json(a).dump(); },
          py::arg("matrix"));
    m.def("interval_to_json", [](const SpectralInterval &iv) { return interval_json(iv).dump(); },
          py::arg("interval"));
    m.def("decimal_string", &decimal_string, py::arg("value"), py::arg("significant") = 10);
}
