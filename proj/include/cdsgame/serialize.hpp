#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cdsgame/games.hpp"
#include "cdsgame/graph.hpp"
#include "cdsgame/permutation.hpp"

namespace cds {

using json = nlohmann::json;

// Graph JSON: {"vertices":["1","2",...],"edges":[["1","2"],...]}, labels as strings.
json graph_to_json(const Graph& g);
/// Throws ParseError on a structurally invalid document or an invalid graph.
Graph graph_from_json(const json& doc);

std::string render_graph(const Graph& g);
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);

/// Comma-separated labels; the empty string is the empty list.
std::vector<Label> parse_label_list(std::string_view csv);
/// Comma-separated pointer codes; the empty string is the empty set.
std::set<Pointer> parse_code_list(std::string_view csv);

json to_json(const Permutation& perm);
json to_json(const std::vector<Pointer>& codes);
json to_json(const std::set<Pointer>& codes);
json to_json(const Move& m);
json to_json(const MasterList& ml);
json to_json(const VertexMap& map);
json to_json(const SolveReport<GcdsMove>& r);
json to_json(const SolveReport<Move>& r);

} // namespace cds
