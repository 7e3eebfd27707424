#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cdsgame/cli.hpp"
#include "cdsgame/errors.hpp"
#include "cdsgame/families.hpp"
#include "cdsgame/overlap.hpp"
#include "cdsgame/pile.hpp"
#include "cdsgame/serialize.hpp"
#include "cdsgame/suites.hpp"

namespace py = pybind11;
using namespace cds;

namespace {

using PyEdge = std::pair<std::string, std::string>;

struct PyGraph {
    std::vector<std::string> vertices;
    std::vector<PyEdge> edges;
};

py::object to_python(const json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

py::dict graph_out(const Graph& g) {
    py::dict d;
    d["vertices"] = g.labels();
    d["edges"] = g.edges();
    return d;
}

Graph graph_in(const py::dict& d) {
    return Graph(d["vertices"].cast<std::vector<std::string>>(), d["edges"].cast<std::vector<PyEdge>>());
}

std::set<Pointer> codes_in(const std::vector<int>& ks) {
    std::set<Pointer> out;
    for (int k : ks) out.insert(Pointer(k));
    return out;
}

std::vector<int> codes_out(const std::vector<Pointer>& ps) {
    std::vector<int> out;
    for (auto p : ps) out.push_back(p.code);
    return out;
}

std::vector<int> entries(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

} // namespace

PYBIND11_MODULE(_cdsgame, m) {
    m.doc() = "Context directed swap games on permutations and graphs";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<BoundExceeded> bound_exceeded(m, "BoundExceeded", PyExc_RuntimeError);
    static py::exception<NotApplicable> not_applicable(m, "NotApplicable", PyExc_ValueError);
    static py::exception<NotAnEdge> not_an_edge(m, "NotAnEdge", PyExc_ValueError);
    static py::exception<StateError> state_error(m, "StateError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            parse_error(e.what());
        } catch (const BoundExceeded& e) {
            bound_exceeded(e.what());
        } catch (const NotApplicable& e) {
            not_applicable(e.what());
        } catch (const NotAnEdge& e) {
            not_an_edge(e.what());
        } catch (const StateError& e) {
            state_error(e.what());
        }
    });

    m.def("apply_cds", [](const std::vector<int>& perm, int p, int q) {
        return entries(apply_cds(Permutation(perm), Pointer(p), Pointer(q)));
    }, py::arg("perm"), py::arg("p"), py::arg("q"));

    m.def("legal_moves", [](const std::vector<int>& perm) {
        std::vector<std::pair<int, int>> out;
        for (const auto& mv : legal_moves(Permutation(perm))) out.emplace_back(mv.first.code, mv.second.code);
        return out;
    }, py::arg("perm"));

    m.def("is_fixed_point", [](const std::vector<int>& perm) { return is_fixed_point(Permutation(perm)); },
          py::arg("perm"));

    m.def("strategic_pile", [](const std::vector<int>& perm) { return codes_out(strategic_pile(Permutation(perm))); },
          py::arg("perm"), "Pile codes in walk order.");

    m.def("is_sortable", [](const std::vector<int>& perm) { return is_sortable(Permutation(perm)); }, py::arg("perm"));

    m.def("overlap_graph", [](const std::vector<int>& perm) { return graph_out(overlap_graph(Permutation(perm))); },
          py::arg("perm"));

    m.def("gcds", [](const py::dict& g, const std::string& x, const std::string& y) {
        return graph_out(apply_gcds(graph_in(g), x, y));
    }, py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def("gcds2", [](const py::dict& g, const std::string& x, const std::string& y) {
        return graph_out(apply_gcds2(graph_in(g), x, y));
    }, py::arg("graph"), py::arg("x"), py::arg("y"));

    m.def("are_isomorphic", [](const py::dict& a, const py::dict& b) -> std::optional<std::map<std::string, std::string>> {
        auto map = are_isomorphic(graph_in(a), graph_in(b));
        if (!map) return std::nullopt;
        return std::map<std::string, std::string>(map->begin(), map->end());
    }, py::arg("a"), py::arg("b"));

    m.def("gen_chain", [](int mm) { return graph_out(gen_chain(mm)); }, py::arg("m"));
    m.def("gen_favorable", &gen_favorable, py::arg("m"));
    m.def("gen_alpha", [](int n) { return entries(gen_alpha(n)); }, py::arg("n"));

    m.def("solve_gcds", [](const py::dict& g, const std::vector<std::string>& favorable, const std::string& first) {
        return to_python(to_json(solve_gcds(Position(graph_in(g), favorable), parse_player(first))));
    }, py::arg("graph"), py::arg("favorable"), py::arg("first") = "ONE");

    m.def("solve_cds", [](const std::vector<int>& perm, const std::vector<int>& favorable, const std::string& first) {
        return to_python(to_json(solve_cds(Permutation(perm), codes_in(favorable), parse_player(first))));
    }, py::arg("perm"), py::arg("favorable"), py::arg("first") = "ONE");

    m.def("np_status", [](const py::dict& g, const std::vector<std::string>& favorable) {
        return std::string(to_string(np_status(Position(graph_in(g), favorable)).status));
    }, py::arg("graph"), py::arg("favorable"));

    m.def("suite_names", &suite_names);

    m.def("verify_suite", [](const std::string& name, int max_n, int max_m, int samples, std::uint64_t seed, int threads) {
        SuiteLimits l;
        l.max_n = max_n;
        l.max_m = max_m;
        l.collapse_max_m = max_m;
        l.samples = samples;
        l.seed = seed;
        l.threads = threads;
        py::gil_scoped_release release;
        const json doc = to_json(verify_suite(name, l));
        py::gil_scoped_acquire acquire;
        return to_python(doc);
    }, py::arg("name"), py::arg("max_n") = 6, py::arg("max_m") = 5, py::arg("samples") = 10000, py::arg("seed") = 1,
       py::arg("threads") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::vector<std::string> argv_s = {"cdsgame"};
        argv_s.insert(argv_s.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : argv_s) argv.push_back(a.c_str());
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("stdin") = "", "Run the command-line tool in-process; returns (exit code, stdout, stderr).");
}
