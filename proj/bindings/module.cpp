#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "laperm/closed_forms.hpp"
#include "laperm/enumeration.hpp"
#include "laperm/families.hpp"
#include "laperm/graph.hpp"
#include "laperm/permanent.hpp"
#include "laperm/transforms.hpp"

namespace py = pybind11;
using namespace laperm;

namespace {

py::int_ to_py(const Int& v) {
  PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list coeff_list(const CharPoly& cp) {
  py::list out;
  for (const Int& c : cp.c) out.append(to_py(c));
  return out;
}

ClassQuery make_query(const std::string& kind, int n, int p, int q,
                      int diameter_at_least, int matching) {
  ClassQuery query;
  if (kind == "trees")
    query.kind = ClassKind::Trees;
  else if (kind == "unicyclic")
    query.kind = ClassKind::BipartiteUnicyclic;
  else
    throw InvalidParameters("kind must be `trees` or `unicyclic`");
  query.n = n;
  if (p > 0 || q > 0) {
    if (p == 0) p = n - q;
    if (q == 0) q = n - p;
    if (p > q) std::swap(p, q);
    query.bipartition = std::pair{p, q};
  }
  if (diameter_at_least > 0) query.diameter_at_least = diameter_at_least;
  if (matching > 0) query.matching_number = matching;
  return query;
}

}  // namespace

PYBIND11_MODULE(_laperm, m) {
  m.doc() =
      "Exact Laplacian permanents of graphs: named families, edge-grafting "
      "transforms, enumeration and extremal verification";

  py::register_exception<Error>(m, "LapermError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("remove_edge", &Graph::remove_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("__eq__",
           [](const Graph& a, const Graph& b) {
             return canonical_form(a) == canonical_form(b);
           })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("canonical_form", [](const Graph& g) {
    auto form = canonical_form(g);
    return py::bytes(reinterpret_cast<const char*>(form.data()), form.size());
  });
  m.def("is_isomorphic", [](const Graph& a, const Graph& b) {
    return canonical_form(a) == canonical_form(b);
  });
  m.def("laplacian_permanent",
        [](const Graph& g) { return to_py(laplacian_permanent(g)); });
  m.def("char_poly", [](const Graph& g) { return coeff_list(char_poly(g)); });
  m.def("spanning_tree_count",
        [](const Graph& g) { return to_py(spanning_tree_count(g)); });
  m.def("dominance_compare", [](const Graph& a, const Graph& b) {
    switch (dominance_compare(char_poly(a), char_poly(b))) {
      case Dominance::Equal: return "equal";
      case Dominance::ADominated: return "a<=b";
      case Dominance::BDominated: return "b<=a";
      case Dominance::StrictlyADominated: return "a prec b";
      case Dominance::StrictlyBDominated: return "b prec a";
      case Dominance::Incomparable: return "incomparable";
    }
    return "?";
  });

  m.def("build_family",
        [](const std::string& spec) { return build(parse_family(spec)); });
  m.def("normalize_family", [](const std::string& spec) {
    return print_family(parse_family(spec));
  });
  m.def("recognize_family", [](const Graph& g) -> py::object {
    if (auto spec = recognize_family(g)) return py::str(print_family(*spec));
    return py::none();
  });

  m.def("eval_formula", [](const std::string& id) {
    return to_py(eval_formula(parse_formula(id)));
  });
  m.def("lemma34_gap", [](int n, int k, int j) {
    return to_py(lemma34_gap(n, k, j));
  });
  m.def("pell_q", [](int n) { return to_py(pell_q(n)); });
  m.def("pell_s", [](int n) { return to_py(pell_s(n)); });

  m.def("apply_op1", &apply_op1);
  m.def("apply_op2", &apply_op2);
  m.def("apply_op3", &apply_op3);
  m.def("apply_lemma35", &apply_lemma35);

  m.def(
      "enumerate_class",
      [](const std::string& kind, int n, int p, int q, int diameter_at_least,
         int matching) {
        return enumerate_class(
            make_query(kind, n, p, q, diameter_at_least, matching));
      },
      py::arg("kind"), py::arg("n"), py::arg("p") = 0, py::arg("q") = 0,
      py::arg("diameter_at_least") = 0, py::arg("matching") = 0);

  m.def(
      "rank_by_permanent",
      [](const std::string& kind, int n, int k, int p, int q,
         int diameter_at_least, int matching) {
        RankedResult r = rank_by_permanent(
            make_query(kind, n, p, q, diameter_at_least, matching), k);
        py::list entries;
        for (const auto& e : r.entries) {
          py::dict d;
          d["graph"] = e.graph;
          d["value"] = to_py(e.value);
          d["family"] = e.family
                            ? py::object(py::str(print_family(*e.family)))
                            : py::object(py::none());
          entries.append(d);
        }
        py::dict out;
        out["class_size"] = r.class_size;
        out["entries"] = entries;
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("k"), py::arg("p") = 0,
      py::arg("q") = 0, py::arg("diameter_at_least") = 0,
      py::arg("matching") = 0);

  m.def("verify_theorem", [](const std::string& theorem, int n) {
    return verify_theorem(parse_theorem(theorem), n).to_json().dump();
  });
}
