#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "crossint/cli.hpp"
#include "crossint/exactmath.hpp"
#include "crossint/fragments.hpp"
#include "crossint/oracle.hpp"
#include "crossint/verify.hpp"

namespace py = pybind11;
using namespace crossint;

namespace {

py::int_ to_py(const BigNat& v) { return py::int_(py::str(v.str())); }

Side parse_side(const std::string& s) {
  if (s == "X" || s == "x") return Side::X;
  if (s == "Y" || s == "y") return Side::Y;
  throw std::invalid_argument("side must be 'X' or 'Y'");
}

VertexSet make_set(const BipartiteGraph& g, Side side, const std::vector<std::size_t>& members) {
  VertexSet v = g.empty_set(side);
  for (auto m : members) {
    if (m >= g.size(side)) throw std::out_of_range("vertex index out of range");
    v.bits.set(m);
  }
  return v;
}

py::dict fragment_dict(const BipartiteGraph& g, const FragmentRecord& f) {
  py::dict d;
  d["side"] = side_name(f.side);
  d["members"] = f.members.bits.indices();
  d["labels"] = g.set_label(f.members);
  d["size"] = f.size();
  d["trivial"] = f.is_trivial;
  d["balanced"] = f.is_balanced;
  d["semi_imprimitive"] = f.is_semi_imprimitive ? py::cast(*f.is_semi_imprimitive) : py::none();
  return d;
}

// Custom graphs have no known symmetry group.
std::optional<GroupAction> maybe_action(const BipartiteGraph& g) {
  if (g.family().family == Family::Custom) return std::nullopt;
  return induced_action(g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Cross-intersecting family bounds via fragments of bipartite graphs";

  static py::exception<HypothesisError> hyp(m, "HypothesisError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const HypothesisError& e) {
      py::set_error(hyp, e.what());
    }
  });

  m.def("binomial", [](int n, int k) { return to_py(binomial(n, k)); });
  m.def("gaussian_binomial", [](int n, int k, int q) { return to_py(gaussian_binomial(n, k, q)); });
  m.def("derangements", [](int n) { return to_py(derangements(n)); });
  m.def("set_degree", [](int n, int a, int b, int t) { return to_py(set_degree(n, a, b, t)); });
  m.def("subspace_degree", [](int n, int q, int a, int b, int t) { return to_py(subspace_degree(n, q, a, b, t)); });
  m.def("permutation_degree", [](int n, int t) { return to_py(permutation_degree(n, t)); });
  m.def("cross_bound_sets", [](int n, int a, int b, int t) { return to_py(cross_bound_sets(n, a, b, t)); });
  m.def("cross_bound_subspaces",
        [](int n, int q, int a, int b, int t) { return to_py(cross_bound_subspaces(n, q, a, b, t)); });
  m.def("cross_bound_permutations", [](int n, int t) { return to_py(cross_bound_permutations(n, t)); });
  m.def("hilton_bound", [](int n, int k, int mm) { return to_py(hilton_bound(n, k, mm)); });
  m.def("hm_ft_bound", [](int n, int a, int b) { return to_py(hm_ft_bound(n, a, b)); });

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_static(
          "from_rows",
          [](const std::vector<std::vector<int>>& rows) {
            if (rows.empty()) throw std::invalid_argument("at least one row required");
            std::vector<BitVec> adj;
            for (const auto& r : rows) {
              if (r.size() != rows[0].size()) throw std::invalid_argument("ragged adjacency rows");
              BitVec b(r.size());
              for (std::size_t j = 0; j < r.size(); ++j)
                if (r[j]) b.set(j);
              adj.push_back(std::move(b));
            }
            return BipartiteGraph::from_rows(rows.size(), rows[0].size(), std::move(adj));
          },
          py::arg("rows"))
      .def_property_readonly("x_size", &BipartiteGraph::x_size)
      .def_property_readonly("y_size", &BipartiteGraph::y_size)
      .def_property_readonly("family", [](const BipartiteGraph& g) { return g.family().name(); })
      .def("labels", [](const BipartiteGraph& g, const std::string& s) { return g.labels(parse_side(s)); })
      .def("row", [](const BipartiteGraph& g, const std::string& s,
                     std::size_t v) { return g.row(parse_side(s), v).indices(); })
      .def("adjacent", &BipartiteGraph::adjacent)
      .def("neighborhood",
           [](const BipartiteGraph& g, const std::string& s, const std::vector<std::size_t>& members) {
             const Side side = parse_side(s);
             return g.neighborhood(side, make_set(g, side, members).bits).indices();
           })
      .def("is_complete", &BipartiteGraph::is_complete)
      .def("is_connected", &BipartiteGraph::is_connected)
      .def("biregularity",
           [](const BipartiteGraph& g) -> py::object {
             const auto b = g.biregularity();
             if (!b.regular) return py::none();
             return py::make_tuple(b.dx, b.dy);
           })
      .def("edge_count", &BipartiteGraph::edge_count)
      .def("serialize", [](const BipartiteGraph& g) { return serialize(g); })
      .def_static("deserialize", [](const std::string& text) { return deserialize(text); })
      .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<BipartiteGraph " + g.family().name() + " " + std::to_string(g.x_size()) + "+" +
               std::to_string(g.y_size()) + ">";
      });

  m.def("build_set_graph", [](int n, int a, int b, int t) { return build_set_graph(n, a, b, t); });
  m.def("build_subspace_graph", [](int n, int q, int a, int b, int t) { return build_subspace_graph(n, q, a, b, t); });
  m.def("build_permutation_graph", [](int n, int t) { return build_permutation_graph(n, t); });
  m.def("build_circulant_graph", &build_circulant_graph);

  m.def(
      "alpha",
      [](const BipartiteGraph& g, unsigned workers) {
        NontrivialMisResult r;
        {
          py::gil_scoped_release release;
          r = alpha_nontrivial(g, workers);
        }
        py::dict d;
        d["size"] = r.size;
        d["a"] = r.witness_a.bits.indices();
        d["b"] = r.witness_b.bits.indices();
        d["witness"] = "A=" + g.set_label(r.witness_a) + " B=" + g.set_label(r.witness_b);
        return d;
      },
      py::arg("graph"), py::arg("workers") = 1);
  m.def("max_matching", [](const BipartiteGraph& g) { return max_matching(g).size; });
  m.def("max_independent_set", [](const BipartiteGraph& g) { return max_independent_set(g).size; });
  m.def("enumerate_max_nontrivial", [](const BipartiteGraph& g) {
    py::list out;
    for (const auto& r : enumerate_max_nontrivial(g))
      out.append(py::make_tuple(r.witness_a.bits.indices(), r.witness_b.bits.indices()));
    return out;
  });

  m.def("epsilon", [](const BipartiteGraph& g, const std::string& s) { return epsilon(g, parse_side(s)); });
  m.def("is_fragment", [](const BipartiteGraph& g, const std::string& s, const std::vector<std::size_t>& members) {
    const Side side = parse_side(s);
    return is_fragment(g, make_set(g, side, members));
  });
  m.def(
      "fragments",
      [](const BipartiteGraph& g, const std::string& s, std::optional<std::size_t> max_size, bool with_action) {
        std::optional<GroupAction> action;
        if (with_action) action = maybe_action(g);
        FragmentCalculus calc(g, action ? &*action : nullptr);
        const auto mode = max_size ? EnumerationMode::bounded(*max_size) : EnumerationMode::full();
        py::list out;
        for (const auto& f : calc.enumerate(parse_side(s), mode)) out.append(fragment_dict(g, f));
        return out;
      },
      py::arg("graph"), py::arg("side") = "X", py::arg("max_size") = py::none(), py::arg("with_action") = true);
  m.def("two_fragment_graph",
        [](const BipartiteGraph& g, const std::string& s) { return FragmentCalculus(g).two_fragment_graph(parse_side(s)).summary(); });

  m.def(
      "verify",
      [](const BipartiteGraph& g) {
        const auto action = maybe_action(g);
        const auto r = verify_theorem(g, action ? &*action : nullptr);
        py::dict d;
        d["overall"] = r.overall();
        d["text"] = r.to_text();
        py::dict checks;
        for (const auto& c : r.checks) checks[py::str(c.name)] = status_name(c.status);
        d["checks"] = checks;
        return d;
      },
      py::arg("graph"));

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "crossint");
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
