#pragma once

#include "cdsgame/graph.hpp"
#include "cdsgame/permutation.hpp"

namespace cds {

/// Move graph of a permutation: one vertex per pointer code 1..n-1 (labelled by
/// its decimal code), an edge for every interlocking pair. Empty for n = 1.
Graph overlap_graph(const Permutation& perm);

/// Label of a pointer's vertex in the overlap graph.
inline Label pointer_label(Pointer p) { return std::to_string(p.code); }

/// Whether the overlap graph of cds_{p,q}(perm) equals gcds of the overlap
/// graph at {p, q}, as labelled graphs. Throws NotApplicable like apply_cds.
bool check_commutation(const Permutation& perm, Pointer p, Pointer q);

} // namespace cds
