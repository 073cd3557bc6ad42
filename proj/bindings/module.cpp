#include "hyperricci/curvature.hpp"
#include "hyperricci/families.hpp"
#include "hyperricci/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
namespace hr = hyperricci;

namespace {

py::object to_fraction(const hr::Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(hr::format_rational(r));
}

py::dict measure_dict(const hr::DiscreteMeasure& m) {
    py::dict out;
    for (const auto& [v, mass] : m.masses) out[py::str(v.value)] = to_fraction(mass);
    return out;
}

py::dict report_dict(const hr::CurvatureReport& r) {
    py::dict out;
    out["edge"] = r.edge_id;
    out["kappa"] = to_fraction(r.kappa);
    out["wasserstein"] = to_fraction(r.wasserstein_value);
    out["mu"] = py::make_tuple(to_fraction(r.decomposition.mu0),
                               to_fraction(r.decomposition.mu1),
                               to_fraction(r.decomposition.mu2),
                               to_fraction(r.decomposition.mu3));
    py::dict plan;
    for (const auto& [pair, mass] : r.plan.entries) {
        plan[py::make_tuple(pair.first.value, pair.second.value)] = to_fraction(mass);
    }
    out["plan"] = plan;
    if (r.dual) {
        out["dual_bound"] = to_fraction(r.dual->bound);
        py::dict potential;
        for (const auto& [v, f] : r.dual->potential) {
            potential[py::str(v.value)] = to_fraction(f);
        }
        out["dual_potential"] = potential;
    } else {
        out["dual_bound"] = py::none();
        out["dual_potential"] = py::none();
    }
    return out;
}

hr::FamilySpec make_spec(const std::string& family, const std::vector<int>& sizes,
                         std::pair<int, int> granularity, std::uint64_t seed) {
    hr::FamilySpec spec;
    spec.family = hr::parse_family(family);
    spec.sizes = sizes;
    spec.granularity.tail = granularity.first;
    spec.granularity.head = granularity.second;
    spec.seed = seed;
    return spec;
}

} // namespace

PYBIND11_MODULE(_hyperricci, m) {
    m.doc() = "Exact Ollivier-Ricci curvature of directed hypergraphs";

    py::register_exception<hr::Error>(m, "Error");

    py::class_<hr::DirectedHypergraph>(m, "DirectedHypergraph")
        .def("vertex_ids",
             [](const hr::DirectedHypergraph& h) {
                 std::vector<std::string> out;
                 for (const auto& v : h.vertices()) out.push_back(v.id.value);
                 return out;
             })
        .def("edge_ids",
             [](const hr::DirectedHypergraph& h) {
                 std::vector<std::string> out;
                 for (const auto& e : h.edges()) out.push_back(e.id);
                 return out;
             })
        .def("edges",
             [](const hr::DirectedHypergraph& h) {
                 py::list out;
                 for (const auto& e : h.edges()) {
                     py::dict node;
                     node["id"] = e.id;
                     std::vector<std::string> tail, head;
                     for (const auto& v : e.tail) tail.push_back(v.value);
                     for (const auto& v : e.head) head.push_back(v.value);
                     node["tail"] = tail;
                     node["head"] = head;
                     node["weight"] = to_fraction(e.weight);
                     out.append(node);
                 }
                 return out;
             })
        .def("__eq__", [](const hr::DirectedHypergraph& a,
                          const hr::DirectedHypergraph& b) { return a == b; });

    m.def("parse", &hr::parse_document, py::arg("text"),
          "Parse a hypergraph document (JSON text with exact rational weights)");
    m.def("serialize", &hr::serialize_document, py::arg("hypergraph"));

    m.def(
        "distance",
        [](const hr::DirectedHypergraph& h, const std::string& u,
           const std::string& v) -> py::object {
            const hr::HyperDistance d = hr::distance(h, {u}, {v});
            if (d.is_infinite()) return py::none();
            return py::int_(d.hops());
        },
        py::arg("hypergraph"), py::arg("source"), py::arg("target"),
        "Directed hyperdistance, or None when unreachable");

    m.def(
        "tail_measure",
        [](const hr::DirectedHypergraph& h, const std::string& edge_id) {
            return measure_dict(hr::tail_measure(h, edge_id));
        },
        py::arg("hypergraph"), py::arg("edge_id"));
    m.def(
        "head_measure",
        [](const hr::DirectedHypergraph& h, const std::string& edge_id) {
            return measure_dict(hr::head_measure(h, edge_id));
        },
        py::arg("hypergraph"), py::arg("edge_id"));

    m.def(
        "curvature",
        [](const hr::DirectedHypergraph& h, const std::string& edge_id, bool with_dual) {
            return report_dict(hr::curvature(h, edge_id, with_dual));
        },
        py::arg("hypergraph"), py::arg("edge_id"), py::arg("with_dual") = false,
        "Curvature report for one hyperedge");
    m.def(
        "curvature_all",
        [](const hr::DirectedHypergraph& h, bool with_dual) {
            py::list out;
            for (const auto& r : hr::curvature_all(h, with_dual)) {
                out.append(report_dict(r));
            }
            return out;
        },
        py::arg("hypergraph"), py::arg("with_dual") = false);

    m.def(
        "digraph_lower_bound",
        [](const hr::DirectedHypergraph& h, const std::string& edge_id) {
            return to_fraction(hr::digraph_lower_bound(h, edge_id));
        },
        py::arg("hypergraph"), py::arg("edge_id"));
    m.def(
        "overlap_upper_bound",
        [](const hr::DirectedHypergraph& h, const std::string& edge_id) {
            return to_fraction(hr::overlap_upper_bound(h, edge_id));
        },
        py::arg("hypergraph"), py::arg("edge_id"));

    m.def(
        "generate",
        [](const std::string& family, const std::vector<int>& sizes,
           std::pair<int, int> granularity, std::uint64_t seed) {
            return hr::generate(make_spec(family, sizes, granularity, seed));
        },
        py::arg("family"), py::arg("sizes"),
        py::arg("granularity") = std::pair<int, int>{1, 1}, py::arg("seed") = 0,
        "Construct a constant-curvature family or a random hypertree");
}
