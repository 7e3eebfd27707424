#include "cdsgame/fixtures.hpp"

namespace cds::fixtures {

namespace {

Graph named(int count, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Label> v;
    for (int i = 1; i <= count; ++i) v.push_back("v" + std::to_string(i));
    std::vector<Edge> e;
    for (auto [a, b] : edges) e.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
    return Graph(std::move(v), e);
}

} // namespace

Graph seven_vertex_before() {
    return named(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}, {2, 4}, {3, 6}, {1, 4}, {2, 6}, {1, 7}});
}

Graph seven_vertex_after() { return named(7, {{3, 4}, {4, 5}, {5, 6}, {3, 7}, {4, 6}, {4, 7}}); }

Graph nine_vertex_before() {
    return named(9, {{1, 2}, {1, 5}, {1, 6}, {1, 7}, {1, 9}, {2, 3}, {2, 6}, {2, 7}, {2, 9}, {3, 5}, {5, 6}, {5, 7}, {5, 9},
                     {6, 7}, {6, 9}, {7, 8}, {8, 9}});
}

Graph nine_vertex_after() { return named(9, {{1, 3}, {1, 6}, {1, 8}, {3, 6}, {3, 8}, {6, 8}}); }

Graph sample_game_graph() {
    return graph_from_ints({1, 2, 3, 4, 5, 6, 7}, {{1, 2}, {1, 3}, {1, 4}, {1, 7}, {2, 3}, {2, 4}, {2, 6}, {3, 4}, {3, 6},
                                                   {4, 5}, {5, 6}, {6, 7}});
}

std::vector<Label> sample_game_favorable() { return {"1", "3", "5", "7"}; }

std::vector<Edge> sample_game_moves() { return {{"2", "4"}, {"1", "3"}, {"6", "7"}}; }

std::vector<Graph> sample_game_states() {
    return {
        sample_game_graph(),
        graph_from_ints({1, 3, 5, 6, 7}, {{3, 5}, {1, 5}, {6, 7}, {1, 3}, {1, 6}, {1, 7}}),
        graph_from_ints({5, 6, 7}, {{5, 7}, {5, 6}, {6, 7}}),
        graph_from_ints({5}, {}),
    };
}

} // namespace cds::fixtures
