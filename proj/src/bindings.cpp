#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pathmax/errors.hpp"
#include "pathmax/extremal.hpp"
#include "pathmax/optimizer.hpp"
#include "pathmax/oracle.hpp"
#include "pathmax/paths.hpp"
#include "pathmax/tsv.hpp"

namespace py = pybind11;
using namespace pathmax;

namespace {

Label to_label(const py::object& o) {
  if (py::isinstance<Label>(o)) return o.cast<Label>();
  if (py::isinstance<py::int_>(o)) {
    auto s = py::str(o).cast<std::string>();
    return Label::parse(s);  // big ints survive the string round trip
  }
  if (py::isinstance<py::str>(o)) return Label::parse(o.cast<std::string>());
  throw py::type_error("expected Label, int, or 'p/q' string");
}

Graph graph_from_py(const std::vector<Vertex>& vertices,
                    const py::iterable& edges, Mode mode) {
  std::vector<Edge> es;
  for (py::handle h : edges) {
    auto t = h.cast<py::tuple>();
    if (t.size() != 3)
      throw py::value_error("edge must be a (src, tgt, label) triple");
    es.push_back({t[0].cast<Vertex>(), t[1].cast<Vertex>(),
                  to_label(py::reinterpret_borrow<py::object>(t[2]))});
  }
  return Graph::make(vertices, std::move(es), mode);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "counting and maximizing length-k paths in labelled graphs";

  auto err = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", err);
  py::register_exception<HypothesisError>(m, "HypothesisError", err);
  py::register_exception<LimitError>(m, "LimitError", err);

  py::class_<Label>(m, "Label")
      .def(py::init<>())
      .def(py::init([](const py::object& o) { return to_label(o); }))
      .def_static("fraction",
                  [](std::uint64_t num, std::uint64_t den) {
                    return Label::fraction(num, den);
                  })
      .def("__add__", &Label::operator+)
      .def("__mul__", &Label::operator*)
      .def("__truediv__", &Label::operator/)
      .def("pow", &Label::pow)
      .def("__eq__", [](const Label& a, const py::object& b) {
             try { return a == to_label(b); } catch (...) { return false; }
           })
      .def("__lt__", [](const Label& a, const py::object& b) { return a < to_label(b); })
      .def("__le__", [](const Label& a, const py::object& b) { return a <= to_label(b); })
      .def("__gt__", [](const Label& a, const py::object& b) { return a > to_label(b); })
      .def("__ge__", [](const Label& a, const py::object& b) { return a >= to_label(b); })
      .def("__hash__", [](const Label& a) { return py::hash(py::str(a.str())); })
      .def("is_zero", &Label::is_zero)
      .def("is_integer", &Label::is_integer)
      .def_property_readonly("numerator",
                             [](const Label& l) {
                               return py::int_(py::str(l.numerator().str()));
                             })
      .def_property_readonly("denominator",
                             [](const Label& l) {
                               return py::int_(py::str(l.denominator().str()));
                             })
      .def("decimal", &Label::decimal)
      .def("__str__", &Label::str)
      .def("__repr__", [](const Label& l) { return "Label('" + l.str() + "')"; });
  py::implicitly_convertible<py::int_, Label>();
  py::implicitly_convertible<py::str, Label>();

  py::enum_<Mode>(m, "Mode")
      .value("NAT", Mode::Nat)
      .value("RAT", Mode::Rat);

  py::class_<Edge>(m, "Edge")
      .def(py::init([](Vertex s, Vertex t, const py::object& l) {
             return Edge{s, t, to_label(l)};
           }),
           py::arg("src"), py::arg("tgt"), py::arg("label"))
      .def_readonly("src", &Edge::src)
      .def_readonly("tgt", &Edge::tgt)
      .def_readonly("label", &Edge::label)
      .def("__eq__", [](const Edge& a, const Edge& b) { return a == b; })
      .def("__repr__", [](const Edge& e) {
        return "Edge(" + std::to_string(e.src) + ", " + std::to_string(e.tgt) +
               ", '" + e.label.str() + "')";
      });

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def_static("make", &graph_from_py, py::arg("vertices"),
                  py::arg("edges"), py::arg("mode") = Mode::Nat)
      .def_static("from_tsv", &read_graph_string)
      .def("to_tsv", &write_graph_string)
      .def_property_readonly("vertices", &Graph::vertices)
      .def_property_readonly("edges", &Graph::edges)
      .def_property_readonly("mode", &Graph::mode)
      .def("vertex_count", &Graph::vertex_count)
      .def("edge_count", &Graph::edge_count)
      .def("weight", &Graph::weight)
      .def("opposite", &Graph::opposite)
      .def("is_connected", &Graph::is_connected)
      .def("prune_isolated", &Graph::prune_isolated)
      .def("with_mode", &Graph::with_mode)
      .def("expand_to_multigraph",
           [](const Graph& g) {
             Multigraph m = g.expand_to_multigraph();
             return py::make_tuple(m.vertices, m.edges);
           })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph V=" + std::to_string(g.vertex_count()) +
               " E=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<Path>(m, "Path")
      .def(py::init([](std::vector<EdgeId> ids) { return Path{std::move(ids)}; }))
      .def_readonly("edge_ids", &Path::edge_ids)
      .def("__len__", &Path::length)
      .def("__eq__", [](const Path& a, const Path& b) { return a == b; })
      .def("__repr__", [](const Path& p) {
        std::ostringstream out;
        out << "Path([";
        for (std::size_t i = 0; i < p.edge_ids.size(); ++i)
          out << (i ? "," : "") << p.edge_ids[i];
        out << "])";
        return out.str();
      });

  m.def("count_k_paths", &count_k_paths, py::arg("g"), py::arg("k"));
  m.def("enumerate_k_paths", &enumerate_k_paths, py::arg("g"), py::arg("k"),
        py::arg("limit") = kDefaultEnumerationLimit);
  m.def("path_content", &path_content);
  m.def("exclusive_content", &exclusive_content, py::arg("g"), py::arg("p"),
        py::arg("skip_index"));
  m.def("girth", [](const Graph& g) { return girth(g); });
  m.def("check_no_short_loops", &check_no_short_loops);
  m.def("find_loop_from_repetition", &find_loop_from_repetition);
  m.def("permutation_loop_witness", &permutation_loop_witness);

  m.def("acyclic_bound", &acyclic_bound, py::arg("N"), py::arg("k"));
  m.def("loop_bound", &loop_bound, py::arg("N"), py::arg("k"));
  m.def("semiring_bound",
        [](const py::object& W, std::uint64_t k) {
          return semiring_bound(to_label(W), k);
        },
        py::arg("W"), py::arg("k"));
  m.def("construct_extremal_acyclic", &construct_extremal_acyclic,
        py::arg("N"), py::arg("k"));
  m.def("construct_extremal_loop", &construct_extremal_loop, py::arg("N"),
        py::arg("k"));
  m.def("construct_extremal_rational",
        [](const py::object& W, std::uint64_t k) {
          return construct_extremal_rational(to_label(W), k);
        },
        py::arg("W"), py::arg("k"));

  py::enum_<ShapeKind>(m, "ShapeKind")
      .value("OPEN_PATH", ShapeKind::OpenPath)
      .value("LOOP", ShapeKind::Loop)
      .value("NOT_EXTREMAL", ShapeKind::NotExtremal);

  py::class_<ShapeClass>(m, "ShapeClass")
      .def_readonly("kind", &ShapeClass::kind)
      .def_readonly("length", &ShapeClass::length)
      .def_readonly("reason", &ShapeClass::reason)
      .def_readonly("order", &ShapeClass::order);

  py::enum_<StepKind>(m, "StepKind")
      .value("MERGE", StepKind::Merge)
      .value("CLOSE", StepKind::Close)
      .value("REBUILD", StepKind::Rebuild)
      .value("SHRINK", StepKind::Shrink)
      .value("BALANCE", StepKind::Balance);

  py::class_<TraceStep>(m, "TraceStep")
      .def_readonly("kind", &TraceStep::kind)
      .def_readonly("edges", &TraceStep::edges)
      .def_readonly("ct_before", &TraceStep::ct_before)
      .def_readonly("ct_after", &TraceStep::ct_after)
      .def_readonly("weight", &TraceStep::weight);

  py::class_<Trace>(m, "Trace")
      .def_readonly("steps", &Trace::steps)
      .def("to_text", &Trace::to_text);

  m.def("classify_extremal_shape", &classify_extremal_shape);
  m.def("chirvasitu_violation", &chirvasitu_violation);
  m.def("exclusive_content_sum", &exclusive_content_sum);
  m.def("merge_edges", &merge_edges, py::arg("g"), py::arg("keep"),
        py::arg("drop"), py::arg("k"));
  m.def("shrink_loop", &shrink_loop);
  m.def("balance_labels", &balance_labels);
  m.def("optimize",
        [](const Graph& g, std::uint64_t k, Mode mode,
           const std::function<void(const Graph&, const TraceStep&)>& observer) {
          return optimize(g, k, mode, observer);
        },
        py::arg("g"), py::arg("k"), py::arg("mode") = Mode::Nat,
        py::arg("observer") = nullptr);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("N", &VerifyReport::N)
      .def_readonly("k", &VerifyReport::k)
      .def_readonly("graphs_examined", &VerifyReport::graphs_examined)
      .def_readonly("max_count", &VerifyReport::max_count)
      .def_readonly("bound", &VerifyReport::bound)
      .def_readonly("argmax", &VerifyReport::argmax)
      .def_readonly("bound_matched", &VerifyReport::bound_matched)
      .def("to_text", &VerifyReport::to_text);

  m.def("enumerate_graphs",
        [](std::uint64_t N, std::uint64_t k, std::uint64_t max_vertices) {
          std::vector<Graph> out;
          enumerate_graphs(N, k, max_vertices,
                           [&](const Graph& g) { out.push_back(g); });
          return out;
        },
        py::arg("N"), py::arg("k"), py::arg("max_vertices"));
  m.def("enumerate_acyclic_graphs",
        [](std::uint64_t N, std::uint64_t max_vertices) {
          std::vector<Graph> out;
          enumerate_acyclic_graphs(N, max_vertices,
                                   [&](const Graph& g) { out.push_back(g); });
          return out;
        },
        py::arg("N"), py::arg("max_vertices"));
  m.def("verify_bound",
        [](std::uint64_t N, std::uint64_t k, bool fast) {
          return verify_bound(N, k, fast);
        },
        py::arg("N"), py::arg("k"), py::arg("fast") = false);
  m.def("verify_acyclic_bound",
        [](std::uint64_t N, std::uint64_t k, bool fast) {
          return verify_acyclic_bound(N, k, fast);
        },
        py::arg("N"), py::arg("k"), py::arg("fast") = false);
  m.def("canonical_form", &canonical_form);
  m.def("canonical_graph", &canonical_graph);

  m.def("read_graph_file", &read_graph_file);
  m.def("write_graph_file", &write_graph_file);
}
