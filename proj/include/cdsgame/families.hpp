#pragma once

#include <set>
#include <string_view>
#include <vector>

#include "cdsgame/games.hpp"
#include "cdsgame/graph.hpp"
#include "cdsgame/permutation.hpp"

namespace cds {

/// Chain of m edge-sharing triangles on vertices 1..2m+1: the triangle
/// {1,2,3}, then {2k+1, 2k+2, 2k+3} for k = 1..m-1.
Graph gen_chain(int m);

/// {2} together with the multiples of 4 up to 2m+1.
std::vector<Label> gen_favorable(int m);

inline Position chain_position(int m) { return Position(gen_chain(m), gen_favorable(m)); }

/// [5] ++ [2j+1, 2j] for j = 3..n/2-1 ++ [3, 2, 4, n, 1]; requires n > 4 and 4 | n.
Permutation gen_alpha(int n);

struct TightInstance {
    Permutation alpha;
    int chain_index = 0;         // m = (n-2)/2
    VertexMap chain_to_overlap;  // isomorphism gen_chain(m) -> overlap_graph(alpha)
    std::set<Pointer> favorable; // image of gen_favorable(m)
};

/// alpha_n with the favourable pointer set carried over from the chain
/// position by an isomorphism. Throws std::runtime_error if no isomorphism exists.
TightInstance tight_instance(int n);

/// N iff m is odd.
NpStatus expected_np(int m);

enum class BoundRule : std::uint8_t {
    EndgameOneLow,   // |P| mod 4 = j < 2:  |A| >= 3/4(|P|-j) + j
    EndgameOneHigh,  // |P| mod 4 = j >= 2: |A| >= 3/4(|P|-j) + (j-1)
    EndgameTwo,      // |P \ A| >= 3/4(|P|-j) + j
    ProportionOne,   // |A| >= 3/4 |P|
    ProportionTwo,   // |A| <= max(|P|/4 - 2, 0)
};

std::string_view to_string(BoundRule r);

enum class Verdict : std::uint8_t { One, Two, Undetermined };
std::string_view to_string(Verdict v);

struct BoundPrediction {
    Verdict verdict = Verdict::Undetermined;
    std::vector<BoundRule> fired; // in the order listed in BoundRule
};

/// Closed-form winner prediction from the pile and favourable-set sizes.
/// Throws ArgumentError when a_size > pile_size or sizes are out of range.
BoundPrediction bound_prediction(int pile_size, int a_size);

struct BoundAudit {
    int pairs_checked = 0;
    std::vector<std::pair<int, int>> contradictions;      // both a ONE and a TWO rule fired
    std::vector<std::pair<int, int>> refinement_gaps;     // proportional rule fired, end-game rule for that side did not
};

/// Checks every (|P|, |A|) with 1 <= |P| <= max_pile for rule consistency.
BoundAudit audit_bound_rules(int max_pile);

} // namespace cds
