#pragma once

#include <vector>

#include "cdsgame/graph.hpp"

// Worked instances with known before/after states, shared by the verification
// suites and the tests.
namespace cds::fixtures {

/// Seven vertices v1..v7; gcds at {v1, v2}.
Graph seven_vertex_before();
Graph seven_vertex_after();

/// Nine vertices v1..v9; gcds at {v2, v7} isolates four vertices.
Graph nine_vertex_before();
Graph nine_vertex_after();

/// Sample game on vertices 1..7 with favourable set {1,3,5,7}, played with the
/// moves {2,4}, {1,3}, {6,7}; `sample_game_states()[k]` is the graph after k moves.
Graph sample_game_graph();
std::vector<Label> sample_game_favorable();
std::vector<Edge> sample_game_moves();
std::vector<Graph> sample_game_states();

} // namespace cds::fixtures
