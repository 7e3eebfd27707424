#include "cdsgame/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "cdsgame/errors.hpp"

namespace cds {

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
    return {{"vertices", g.labels()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("graph JSON must be an object with \"vertices\" and \"edges\"");
    const auto& jv = doc.at("vertices");
    const auto& je = doc.at("edges");
    if (!jv.is_array() || !je.is_array()) throw ParseError("graph \"vertices\" and \"edges\" must be arrays");
    std::vector<Label> vertices;
    for (const auto& v : jv) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::vector<Edge> edges;
    for (const auto& e : je) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("each edge must be a pair of string labels");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    try {
        return Graph(std::move(vertices), edges);
    } catch (const ArgumentError& err) {
        throw ParseError(std::string("invalid graph: ") + err.what());
    }
}

std::string render_graph(const Graph& g) { return graph_to_json(g).dump(); }

Graph parse_graph(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError(std::string("graph JSON: ") + err.what());
    }
    return graph_from_json(doc);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::vector<Label> parse_label_list(std::string_view csv) {
    std::vector<Label> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = csv.find(',', start);
        std::string item(csv.substr(start, pos - start));
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        item = b == std::string::npos ? "" : item.substr(b, e - b + 1);
        if (item.empty()) throw ParseError("empty item in list '" + std::string(csv) + "'");
        out.push_back(item);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::set<Pointer> parse_code_list(std::string_view csv) {
    std::set<Pointer> out;
    for (const auto& item : parse_label_list(csv)) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || ptr != item.data() + item.size()) throw ParseError("not a pointer code: '" + item + "'");
        out.insert(Pointer(v));
    }
    return out;
}

json to_json(const Permutation& perm) { return json(std::vector<int>(perm.entries().begin(), perm.entries().end())); }

json to_json(const std::vector<Pointer>& codes) {
    json out = json::array();
    for (auto p : codes) out.push_back(p.code);
    return out;
}

json to_json(const std::set<Pointer>& codes) { return to_json(std::vector<Pointer>(codes.begin(), codes.end())); }

json to_json(const Move& m) { return json::array({m.first.code, m.second.code}); }

json to_json(const MasterList& ml) {
    return {{"x", ml.x}, {"y", ml.y}, {"column_x", ml.column_x}, {"column_y", ml.column_y}};
}

json to_json(const VertexMap& map) {
    json out = json::object();
    for (const auto& [a, b] : map) out[a] = b;
    return out;
}

namespace {

template <class MoveT, class Render>
json report_json(const SolveReport<MoveT>& r, Render render) {
    json pv = json::array();
    for (const auto& m : r.principal_variation) pv.push_back(render(m));
    return {{"winner", to_string(r.winner)},
            {"principal_variation", std::move(pv)},
            {"nodes_expanded", r.nodes_expanded},
            {"cache_hits", r.cache_hits}};
}

} // namespace

json to_json(const SolveReport<GcdsMove>& r) {
    return report_json(r, [](const GcdsMove& m) { return json::array({m.first, m.second}); });
}

json to_json(const SolveReport<Move>& r) {
    return report_json(r, [](const Move& m) { return to_json(m); });
}

} // namespace cds
