#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ehlab/cli.hpp"
#include "ehlab/construct.hpp"
#include "ehlab/detect.hpp"
#include "ehlab/homog.hpp"
#include "ehlab/patterns.hpp"
#include "ehlab/search.hpp"

namespace py = pybind11;
using namespace ehlab;

namespace {

py::dict stats_dict(const SearchStats& st) {
  py::dict d;
  d["candidates"] = st.candidates;
  d["canonical"] = st.canonical;
  d["noncanonical"] = st.noncanonical;
  d["pattern_pruned"] = st.pattern_pruned;
  d["bound_pruned"] = st.bound_pruned;
  d["complete"] = st.complete;
  d["tasks"] = st.tasks;
  d["wall_seconds"] = st.wall_seconds;
  return d;
}

py::dict search_dict(const SearchResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["s"] = r.s;
  d["value"] = r.value ? py::object(py::int_(*r.value)) : py::object(py::none());
  d["witness"] = r.witness ? py::cast(*r.witness) : py::object(py::none());
  d["stats"] = stats_dict(r.stats);
  return d;
}

py::dict hom_dict(const HomReport& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness"] = r.witness;
  d["missing_colour"] = r.missing_colour;
  d["alpha_by_colour"] = std::vector<int>(r.alpha_by_colour.begin() + 1, r.alpha_by_colour.end());
  return d;
}

// Runs `fn` without holding the GIL.
template <class F>
auto released(F&& fn) {
  py::gil_scoped_release release;
  return fn();
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw py::value_error("bad edge");
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

PYBIND11_MODULE(_ehlab, m) {
  m.doc() = "ehlab C++ core";
  m.attr("__version__") = cli::kVersion;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<Colouring>(m, "Colouring")
      .def(py::init([](int n, int s, const std::vector<int>& edges) { return Colouring(n, s, edges); }), py::arg("n"),
           py::arg("s"), py::arg("edges"), "Edge colours in row-major pair order (0,1),(0,2),...,(1,2),...")
      .def_static("monochromatic", &Colouring::monochromatic, py::arg("n"), py::arg("s"), py::arg("colour"))
      .def_property_readonly("n", &Colouring::n)
      .def_property_readonly("s", &Colouring::s)
      .def("colour", &Colouring::colour, py::arg("u"), py::arg("v"))
      .def("edges", &Colouring::row_major)
      .def("histogram", &Colouring::histogram)
      .def("used_colours", [](const Colouring& c) { return used_colours(c); })
      .def("relabel", [](const Colouring& c, const std::vector<int>& perm) { return c.relabel(perm); })
      .def("restrict_to", [](const Colouring& c, const std::vector<int>& vs) { return c.restrict_to(vs); })
      .def("__eq__", [](const Colouring& a, const Colouring& b) { return a == b; })
      .def("__repr__",
           [](const Colouring& c) { return "<Colouring n=" + std::to_string(c.n()) + " s=" + std::to_string(c.s()) + ">"; });

  m.def("to_ehc", &to_ehc);
  m.def("parse_ehc", [](const std::string& text) { return parse_ehc(text); });
  m.def("canonical_form", [](const Colouring& c, int max_n) { return py::bytes(canonical_form(c, max_n)); },
        py::arg("c"), py::arg("max_n") = kDefaultCanonicalCap);

  m.def("bundled_patterns", [] {
    py::dict d;
    for (auto& [name, p] : ehlab::bundled_patterns()) d[py::str(name)] = p;
    return d;
  });
  m.def("bundled_pattern", [](const std::string& name) {
    auto p = ehlab::bundled_pattern(name);
    if (!p) throw py::key_error(name);
    return *p;
  });

  m.def(
      "find_copy",
      [](const Colouring& host, const Pattern& p) -> std::optional<std::vector<int>> {
        auto e = find_copy(host, p);
        if (!e) return std::nullopt;
        return e->map;
      },
      py::arg("host"), py::arg("pattern"));
  m.def("is_free", &is_free, py::arg("host"), py::arg("pattern"));
  m.def("count_copies", &count_copies, py::arg("host"), py::arg("pattern"), py::arg("workers") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "find_palette_copy",
      [](const Colouring& host, int k, const std::vector<int>& counts) {
        return find_palette_copy(host, Palette(k, counts));
      },
      py::arg("host"), py::arg("k"), py::arg("counts"));

  m.def(
      "max_independent_set",
      [](int n, const std::vector<std::pair<int, int>>& edges) {
        const auto r = max_independent_set(graph_from_edges(n, edges));
        return py::make_tuple(r.size, r.witness);
      },
      py::arg("n"), py::arg("edges"));
  m.def("homogeneous_number", [](const Colouring& c) { return hom_dict(homogeneous_number(c)); });
  m.def("h_from_s_cliques", [](const Colouring& c) { return hom_dict(h_from_s_cliques(c)); });
  m.def(
      "s_clique",
      [](const Colouring& c, const std::vector<int>& colours) {
        const auto r = s_clique(c, colours);
        return py::make_tuple(r.value, r.witness);
      },
      py::arg("c"), py::arg("colours"));

  m.def(
      "lex_product", [](const Colouring& a, const Colouring& b) { return lex_product(a, b); }, py::arg("outer"),
      py::arg("inner"));
  m.def(
      "random_colouring",
      [](int n, int s, const std::vector<int>& colours, std::uint64_t seed) {
        return random_colouring(n, s, colours, seed);
      },
      py::arg("n"), py::arg("s"), py::arg("colours"), py::arg("seed") = 0);
  m.def("recolour_extra", &recolour_extra, py::arg("c"), py::arg("p") = 0.5, py::arg("seed") = 0);
  m.def(
      "gallai_product_c4",
      [](int m_, std::uint64_t seed, int trials, int workers) {
        const auto g = released([&] { return gallai_product_c4(m_, seed, trials, workers); });
        py::dict d;
        d["product"] = g.product;
        d["factors"] = std::vector<Colouring>(g.factors.begin(), g.factors.end());
        d["factor_h"] = g.factor_h;
        return d;
      },
      py::arg("m"), py::arg("seed") = 0, py::arg("trials") = 20, py::arg("workers") = 1);
  m.def("k4_free_host_colouring", &k4_free_host_colouring, py::arg("n"), py::arg("seed") = 0);

  m.def(
      "exact_h",
      [](int n, int s, const Pattern& p, std::uint64_t max_leaves, int workers) {
        return search_dict(released([&] { return exact_h(n, s, p, SearchOptions{max_leaves, workers}); }));
      },
      py::arg("n"), py::arg("s"), py::arg("pattern"), py::arg("max_leaves") = SearchOptions{}.max_leaves,
      py::arg("workers") = 1);
  m.def(
      "minimize_h",
      [](int n, int s, const Pattern& p, std::uint64_t budget, std::uint64_t seed, int chains, int workers) {
        MinimizeOptions o;
        o.budget = budget;
        o.seed = seed;
        o.chains = chains;
        o.workers = workers;
        const auto r = released([&] { return minimize_h(n, s, p, o); });
        return py::make_tuple(r.colouring, r.value);
      },
      py::arg("n"), py::arg("s"), py::arg("pattern"), py::arg("budget") = 100000, py::arg("seed") = 0,
      py::arg("chains") = 1, py::arg("workers") = 1);
  m.def(
      "verify_monotone",
      [](int n, const Pattern& p, int s) {
        const auto r = released([&] { return verify_monotone(n, p, s); });
        py::dict d;
        d["lower"] = search_dict(r.lower);
        d["upper"] = search_dict(r.upper);
        d["hypothesis_met"] = r.hypothesis_met;
        d["holds"] = r.holds;
        return d;
      },
      py::arg("n"), py::arg("pattern"), py::arg("s"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "ehlab");
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run an ehlab subcommand; returns (exit code, stdout, stderr).");
}
