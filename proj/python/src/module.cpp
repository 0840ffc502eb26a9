#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ramsey/bounds.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/cli.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/search.hpp"

namespace py = pybind11;
using namespace ramsey;

namespace {

Color color_arg(const std::string& name)
{
    if (name == "blue")
        return Color::Blue;
    if (name == "red")
        return Color::Red;
    throw py::value_error("color must be 'blue' or 'red'");
}

py::dict interval_dict(const BoundInterval& b)
{
    py::dict d;
    d["lo"] = b.lo;
    d["hi"] = b.hi;
    d["lo_source"] = std::string(to_string(b.lo_source));
    d["hi_source"] = std::string(to_string(b.hi_source));
    return d;
}

SearchConfig make_config(int threads, std::optional<std::uint64_t> nodes, std::optional<double> seconds, bool prune,
                         bool symmetry)
{
    SearchConfig cfg;
    cfg.worker_count = threads;
    if (nodes)
        cfg.node_budget = *nodes;
    if (seconds)
        cfg.wall_budget = std::chrono::seconds(static_cast<long long>(*seconds < 1 ? 1 : *seconds));
    if (!prune)
        cfg.prune_containment = cfg.prune_degree = cfg.prune_maxdeg_lemma = false;
    if (!symmetry)
        cfg.symmetry_color_swap = cfg.symmetry_first_vertex = false;
    return cfg;
}

std::vector<std::pair<int, int>> blue_pairs(const TwoColoring& c)
{
    std::vector<std::pair<int, int>> out;
    for (auto idx : c.edges(Color::Blue)) {
        const auto e = from_linear(idx);
        out.emplace_back(e.i, e.j);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Ramsey numbers of small trees";

    py::class_<PatternSpec>(m, "Pattern")
        .def_property_readonly("vertex_count", &PatternSpec::vertex_count)
        .def_property_readonly("edge_count", &PatternSpec::edge_count)
        .def_property_readonly("is_tree", &PatternSpec::is_tree)
        .def("edges", [](const PatternSpec& p) { return pattern_graph(p).edges; })
        .def("__str__", &PatternSpec::to_string)
        .def("__repr__", [](const PatternSpec& p) { return "Pattern('" + p.to_string() + "')"; })
        .def("__eq__", [](const PatternSpec& a, const PatternSpec& b) { return a == b; })
        .def("__hash__", [](const PatternSpec& p) { return py::hash(py::str(p.to_string())); });

    py::class_<TwoColoring>(m, "Coloring")
        .def(py::init<int>(), py::arg("n"))
        .def_property_readonly("n", &TwoColoring::n_vertices)
        .def_property_readonly("complete", &TwoColoring::complete)
        .def("color_of",
             [](const TwoColoring& c, int u, int v) -> std::optional<std::string> {
                 const auto col = c.color_of(u, v);
                 if (!col)
                     return std::nullopt;
                 return std::string(to_string(*col));
             })
        .def("set", [](TwoColoring& c, int u, int v, const std::string& col) { c.set(u, v, color_arg(col)); })
        .def("degree", [](const TwoColoring& c, int v, const std::string& col) { return color_degree(c, v, color_arg(col)); })
        .def("blue_edges", &blue_pairs)
        .def("__eq__", [](const TwoColoring& a, const TwoColoring& b) { return a == b; });

    py::register_exception<PatternParseError>(m, "PatternParseError", PyExc_ValueError);

    m.def("parse_pattern", &parse_pattern, py::arg("expr"));
    m.def("bounds", [](const PatternSpec& p) { return interval_dict(pattern_bounds(p)); }, py::arg("pattern"));
    m.def("bistar_bounds", [](int a, int b) { return interval_dict(bistar_bounds(a, b)); }, py::arg("m"), py::arg("n"));

    m.def(
        "decide",
        [](const PatternSpec& p, int order, int threads, std::optional<std::uint64_t> nodes,
           std::optional<double> seconds, bool prune, bool symmetry) {
            const auto cfg = make_config(threads, nodes, seconds, prune, symmetry);
            SearchOutcome outcome = [&] {
                py::gil_scoped_release release;
                return decide_arrow(p, order, cfg);
            }();
            py::dict d;
            d["classification"] = std::string(classification_name(outcome));
            std::visit([&](const auto& o) { d["nodes"] = o.stats.nodes; }, outcome);
            if (const auto* ce = std::get_if<Counterexample>(&outcome))
                d["coloring"] = ce->coloring;
            else
                d["coloring"] = py::none();
            return d;
        },
        py::arg("pattern"), py::arg("order"), py::arg("threads") = 1, py::arg("node_budget") = py::none(),
        py::arg("wall_seconds") = py::none(), py::arg("prune") = true, py::arg("symmetry") = true);

    m.def(
        "compute",
        [](const PatternSpec& p, int threads, std::optional<std::uint64_t> nodes, std::optional<double> seconds) {
            const auto cfg = make_config(threads, nodes, seconds, true, true);
            RamseyResult r = [&] {
                py::gil_scoped_release release;
                return compute_ramsey(p, cfg);
            }();
            py::dict d;
            if (const auto* v = std::get_if<RamseyValue>(&r)) {
                d["value"] = v->value;
                d["lo"] = v->value;
                d["hi"] = v->value;
                d["lower_certificate"] = v->lower_certificate;
                d["nodes"] = v->upper_proof_stats.nodes;
            } else {
                const auto& b = std::get<BoundedOnly>(r).interval;
                d["value"] = py::none();
                d["lo"] = b.lo;
                d["hi"] = b.hi;
                d["lower_certificate"] = py::none();
                d["nodes"] = py::none();
            }
            return d;
        },
        py::arg("pattern"), py::arg("threads") = 1, py::arg("node_budget") = py::none(),
        py::arg("wall_seconds") = py::none());

    m.def("split_clique_coloring", &split_clique_coloring, py::arg("a"), py::arg("b"));
    m.def("circulant_star_coloring", &circulant_star_coloring, py::arg("n"));
    m.def("star_plus_edge_coloring", &star_plus_edge_coloring, py::arg("n"));
    m.def("lower_bound_witness", &lower_bound_witness, py::arg("pattern"));

    m.def(
        "contains_mono",
        [](const TwoColoring& c, const std::string& col, const PatternSpec& p) {
            return contains_mono_pattern(c, color_arg(col), p);
        },
        py::arg("coloring"), py::arg("color"), py::arg("pattern"));

    m.def(
        "certificate",
        [](const PatternSpec& p, const TwoColoring& c) { return emit_certificate(no_mono_certificate(p, c)); },
        py::arg("pattern"), py::arg("coloring"));

    m.def(
        "verify_certificate",
        [](const std::string& text) {
            const auto r = verify_certificate(text);
            py::dict d;
            d["valid"] = r.valid();
            d["problem"] = std::string(to_string(r.problem));
            d["message"] = r.message;
            return d;
        },
        py::arg("text"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = run_cli(args, out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
