#include "cdsgame/overlap.hpp"

namespace cds {

Graph overlap_graph(const Permutation& perm) {
    std::vector<int> vertices;
    for (int k = 1; k < perm.size(); ++k) vertices.push_back(k);
    std::vector<std::pair<int, int>> edges;
    for (const auto& m : legal_moves(perm)) edges.emplace_back(m.first.code, m.second.code);
    return graph_from_ints(vertices, edges);
}

bool check_commutation(const Permutation& perm, Pointer p, Pointer q) {
    const Graph after_move = overlap_graph(apply_cds(perm, p, q));
    const Graph after_gcds = apply_gcds(overlap_graph(perm), pointer_label(p), pointer_label(q));
    return after_move == after_gcds;
}

} // namespace cds
