#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperzeta/distinguish.hpp"

namespace py = pybind11;
using namespace hyperzeta;

namespace {

py::object to_pyint(const Int& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list poly_list(const IntPoly& p) {
  py::list out;
  for (const Int& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

CollapseMode mode_of(const std::string& mode) {
  if (mode == "all-singletons") return CollapseMode::AllSingletons;
  if (mode == "disjoint-pairs") return CollapseMode::DisjointPairs;
  if (mode == "all-cliques") return CollapseMode::AllCliquesAtOnce;
  throw std::invalid_argument(
      "mode must be all-singletons, disjoint-pairs or all-cliques");
}

}  // namespace

PYBIND11_MODULE(_hyperzeta, m) {
  m.doc() = "Exact generalized Ihara-Selberg zeta functions of hypergraphs";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init([](std::size_t n, std::vector<std::vector<int>> edges) {
             Hypergraph h;
             h.n_vertices = n;
             h.hyperedges = std::move(edges);
             for (auto& e : h.hyperedges) std::sort(e.begin(), e.end());
             return h;
           }),
           py::arg("n_vertices"), py::arg("hyperedges"))
      .def_readonly("n_vertices", &Hypergraph::n_vertices)
      .def_readonly("hyperedges", &Hypergraph::hyperedges)
      .def("order_sum", &Hypergraph::order_sum)
      .def("vertex_degrees", &Hypergraph::vertex_degrees)
      .def("__eq__", [](const Hypergraph& a, const Hypergraph& b) { return a == b; })
      .def("__repr__", [](const Hypergraph& h) {
        return "Hypergraph(" + std::to_string(h.n_vertices) + " vertices, " +
               std::to_string(h.hyperedges.size()) + " hyperedges)";
      });

  m.def("parse", [](const std::string& text) { return parse_hypergraph(text); },
        py::arg("text"), "Parse the .hg text format.");
  m.def("load", &load_hypergraph, py::arg("path"), "Load a .hg file.");
  m.def("to_hg", &to_hg_format, py::arg("h"), "Serialize to the .hg text format.");
  m.def("dual", &dual_of, py::arg("h"));
  m.def("prune", &prune_degree_one, py::arg("h"));
  m.def("regularity", [](const Hypergraph& h) -> py::object {
    auto r = regularity_of(h);
    if (!r) return py::none();
    return py::make_tuple(r->first, r->second);
  });

  m.def("validate", [](const Hypergraph& h) {
    ValidationReport r = validate(h);
    py::dict d;
    d["connected"] = r.connected;
    d["min_degree_ok"] = r.min_degree_ok;
    d["orders_ok"] = r.orders_ok;
    d["min_vertex_degree"] = r.min_vertex_degree;
    d["min_order"] = r.min_order;
    d["zeta_ready"] = r.zeta_ready();
    d["notes"] = r.notes;
    return d;
  });

  m.def("zeta_linegraph",
        [](const Hypergraph& h) { return poly_list(zeta_via_linegraph(h).reciprocal); },
        py::arg("h"),
        "zeta^{-1} coefficients (ascending) via the oriented line graph.");
  m.def("zeta_bass",
        [](const Hypergraph& h) { return poly_list(zeta_via_bass(h).reciprocal); },
        py::arg("h"), "zeta^{-1} coefficients via Bass on the bipartite graph.");
  m.def("zeta_hashimoto",
        [](const Hypergraph& h) {
          auto [f1, f2] = zeta_via_hashimoto(h);
          return py::make_tuple(poly_list(f1.reciprocal), poly_list(f2.reciprocal));
        },
        py::arg("h"), "Both factorized forms for a (d,r)-regular hypergraph.");

  m.def("cross_validate",
        [](const Hypergraph& h, unsigned seeds) {
          CrossValidation cv = cross_validate(h, seeds);
          py::dict d;
          d["reciprocal"] = poly_list(cv.reciprocal);
          d["routes_agree"] = cv.routes_agree;
          d["degree_ok"] = cv.degree_ok;
          d["dual_ok"] = cv.dual_ok;
          d["orientation_ok"] = cv.orientation_ok;
          d["regular"] = cv.regular;
          d["degree"] = cv.degree;
          d["degree_expected"] = cv.degree_expected;
          d["all_ok"] = cv.all_ok();
          d["warnings"] = cv.warnings;
          d["mismatch"] = cv.mismatch;
          return d;
        },
        py::arg("h"), py::arg("seeds") = 10u);

  m.def("ramanujan",
        [](const Hypergraph& h, const std::string& tolerance) {
          Rat tol(tolerance);
          tol.canonicalize();
          SpectralReport r = ramanujan_check(h, tol);
          py::dict d;
          d["verdict"] = r.ramanujan == RamanujanVerdict::Yes ? "Yes"
                         : r.ramanujan == RamanujanVerdict::No
                             ? "No"
                             : "BoundaryWithinTolerance";
          d["violations"] = r.violations;
          d["boundary_roots"] = r.boundary_roots;
          d["char_poly"] = poly_list(r.char_poly);
          d["lambda1_interval"] =
              py::make_tuple(rat_str(r.lambda1.first), rat_str(r.lambda1.second));
          d["d"] = r.d;
          d["r"] = r.r;
          d["q"] = r.q;
          d["alon_boppana"] =
              py::make_tuple(r.alon_boppana.integer_part, r.alon_boppana.radicand);
          return d;
        },
        py::arg("h"), py::arg("tolerance") = "1/1000000000");

  m.def("riemann_hypothesis", &riemann_hypothesis_check, py::arg("h"));

  m.def("ihara_zeta",
        [](const Hypergraph& h) { return poly_list(ihara_zeta_graph(as_graph(h))); },
        py::arg("graph"), "Plain Ihara zeta reciprocal of an order-2 hypergraph.");
  m.def("enumerate_cliques",
        [](const Hypergraph& h, int k) { return enumerate_cliques(as_graph(h), k); },
        py::arg("graph"), py::arg("k") = 3);
  m.def("collapse",
        [](const Hypergraph& h, std::vector<std::vector<int>> cliques) {
          return collapse(as_graph(h), cliques);
        },
        py::arg("graph"), py::arg("cliques"));
  m.def("invariant_multiset",
        [](const Hypergraph& h, int k, const std::string& mode) {
          py::list out;
          for (const IntPoly& p : invariant_multiset(as_graph(h), k, mode_of(mode)))
            out.append(poly_list(p));
          return out;
        },
        py::arg("graph"), py::arg("k") = 3, py::arg("mode") = "disjoint-pairs");
  m.def("distinguish",
        [](const Hypergraph& a, const Hypergraph& b, int k, const std::string& mode) {
          DistinguishResult r = distinguish(as_graph(a), as_graph(b), k, mode_of(mode));
          py::dict d;
          d["cospectral"] = r.cospectral;
          d["same_ihara"] = r.same_ihara;
          d["invariant_multisets_equal"] = r.invariant_multisets_equal;
          d["verdict"] = r.verdict == DistinguishVerdict::Distinguished
                             ? "Distinguished"
                             : "NotDistinguishedByThisInvariant";
          py::list m1, m2;
          for (const IntPoly& p : r.multiset1) m1.append(poly_list(p));
          for (const IntPoly& p : r.multiset2) m2.append(poly_list(p));
          d["multiset1"] = m1;
          d["multiset2"] = m2;
          return d;
        },
        py::arg("g1"), py::arg("g2"), py::arg("k") = 3,
        py::arg("mode") = "disjoint-pairs");
}
