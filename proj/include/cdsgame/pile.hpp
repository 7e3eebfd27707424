#pragma once

#include <set>
#include <vector>

#include "cdsgame/permutation.hpp"

namespace cds {

/// Cycle graph on vertices 0..n+1: dotted edges i -> i+1 (0 <= i <= n) and one
/// black edge out of every vertex 1..n+1, from each entry to the entry before
/// it, n+1 to the last entry and the first entry to 0.
class CycleGraph {
  public:
    explicit CycleGraph(const Permutation& perm);

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] int vertex_count() const { return n_ + 2; }
    /// Black out-neighbour of v, for 1 <= v <= n+1.
    [[nodiscard]] int black_successor(int v) const { return black_[v]; }
    [[nodiscard]] bool has_black_out(int v) const { return v >= 1 && v <= n_ + 1; }
    /// Dotted out-neighbour of v, for 0 <= v <= n.
    [[nodiscard]] static int dotted_successor(int v) { return v + 1; }
    [[nodiscard]] bool has_dotted_out(int v) const { return v >= 0 && v <= n_; }

  private:
    int n_;
    std::vector<int> black_; // index 0 unused
};

/// One alternating cycle, recorded by its dotted edges i -> i+1 in walk order.
/// The black edge after dotted edge i is i+1 -> black_successor(i+1).
struct AltCycle {
    std::vector<int> dotted;
};

struct AltCycleDecomposition {
    std::vector<AltCycle> cycles;
};

CycleGraph build_cycle_graph(const Permutation& perm);

/// Starts a cycle at each unvisited dotted edge in increasing order of i.
AltCycleDecomposition alternating_cycles(const CycleGraph& cg);

/// Pointer codes on the alternating walk from n -> n+1 to 0 -> 1, in walk order;
/// empty when the two edges lie on different cycles.
std::vector<Pointer> strategic_pile(const Permutation& perm);

bool is_sortable(const Permutation& perm);

inline constexpr int kDefaultOracleBound = 7;

/// Exhaustive search for a cds sequence reaching the identity.
/// Throws BoundExceeded above `max_n`.
bool sortable_bruteforce(const Permutation& perm, int max_n = kDefaultOracleBound);

struct AchievableFixedPoints {
    std::set<Pointer> codes;
    bool identity = false;

    friend bool operator==(const AchievableFixedPoints&, const AchievableFixedPoints&) = default;
};

/// Codes of every fixed point reachable by some sequence of cds moves.
/// Throws BoundExceeded above `max_n`.
AchievableFixedPoints achievable_fixed_points(const Permutation& perm, int max_n = kDefaultOracleBound);

} // namespace cds
