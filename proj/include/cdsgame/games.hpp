#pragma once

#include <cstdint>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cdsgame/graph.hpp"
#include "cdsgame/permutation.hpp"

namespace cds {

enum class Player : std::uint8_t { One = 1, Two = 2 };

constexpr Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }
std::string_view to_string(Player p);
/// Accepts "ONE"/"TWO" (any case) and "1"/"2". Throws ParseError otherwise.
Player parse_player(std::string_view text);

template <class MoveT>
struct SolveReport {
    Player winner = Player::Two;
    std::vector<MoveT> principal_variation;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t cache_hits = 0;
};

/// Solved winners keyed by the textual state keys of the cache file format:
///   G|v1,v2,...|u1-w1,u2-w2,...|a1,a2,...|M   (graph states)
///   P|e1 e2 ...|a1,a2,...|M                   (permutation states)
/// Safe to share between solvers on different threads.
class SolveCache {
  public:
    static constexpr std::string_view kHeader = "GCDSCACHE 1";

    [[nodiscard]] std::optional<Player> get(const std::string& key) const;
    void put(const std::string& key, Player winner);
    [[nodiscard]] std::size_t size() const;

    /// Header line, then one `key<TAB>ONE|TWO` line per entry, keys sorted.
    void save(std::ostream& out) const;
    /// Merges entries from `in`. Throws ParseError naming the line on a bad
    /// header, malformed key or unknown winner.
    void load(std::istream& in);

    void save_file(const std::string& path) const;
    void load_file(const std::string& path);

  private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, Player> entries_;
};

/// Checks a key against the cache key grammar.
bool is_valid_cache_key(std::string_view key);

std::string gcds_state_key(const Graph& g, const std::vector<Label>& favorable, Player mover);
std::string cds_state_key(const Permutation& perm, const std::set<Pointer>& favorable, Player mover);

/// Nonempty and contained in the favourable set: ONE; otherwise TWO.
/// Throws StateError if edges remain.
Player gcds_terminal_winner(const Position& position);
/// Same rule against a favourable set that may name vertices no longer present.
Player gcds_terminal_winner(const Graph& g, const std::vector<Label>& favorable);

/// ONE iff the fixed point's code is favourable; the identity goes to TWO.
/// Throws StateError on a non-fixed point.
Player cds_terminal_winner(const Permutation& perm, const std::set<Pointer>& favorable);

inline constexpr int kDefaultGcdsVertexBound = 16;
inline constexpr int kDefaultCdsBound = 10;

struct SolveOptions {
    int max_vertices = kDefaultGcdsVertexBound;
    int max_n = kDefaultCdsBound;
    SolveCache* cache = nullptr; // persistent store, consulted and filled when set
};

using GcdsMove = Edge;

/// Perfect-play solver for the gcds2 graph game.
///
/// Win/loss propagation with memoisation on the exact labelled state. Moves
/// are tried in lexicographic edge order and the principal variation takes the
/// least winning move for the side to move, else the least move. Every report
/// is replayed to a terminal state before it is returned.
class GcdsSolver {
  public:
    explicit GcdsSolver(SolveOptions options = {});

    /// Throws BoundExceeded above options.max_vertices.
    SolveReport<GcdsMove> solve(const Position& position, Player mover);

  private:
    SolveOptions options_;
};

/// Perfect-play solver for the cds permutation game; moves ordered by (min code, max code).
/// The memo persists across solve() calls on the same instance.
class CdsSolver {
  public:
    explicit CdsSolver(SolveOptions options = {});

    /// Throws BoundExceeded above options.max_n and RangeError on a favourable code outside 1..n-1.
    SolveReport<Move> solve(const Permutation& perm, const std::set<Pointer>& favorable, Player mover);

  private:
    struct Search;
    SolveOptions options_;
    std::unordered_map<std::string, Player> memo_;
};

inline SolveReport<GcdsMove> solve_gcds(const Position& position, Player mover, SolveOptions options = {}) {
    return GcdsSolver(options).solve(position, mover);
}

inline SolveReport<Move> solve_cds(const Permutation& perm, const std::set<Pointer>& favorable, Player mover,
                                   SolveOptions options = {}) {
    return CdsSolver(options).solve(perm, favorable, mover);
}

enum class NpStatus : std::uint8_t { N, P, Anomaly };
std::string_view to_string(NpStatus s);

struct NpReport {
    NpStatus status = NpStatus::Anomaly;
    Player winner_one_first = Player::Two;
    Player winner_two_first = Player::Two;
};

/// N when whoever moves first wins, P when whoever moves first loses. ONE
/// always targets the favourable set; if the same player wins regardless of
/// who starts, the result is flagged as an anomaly.
NpReport np_status(const Position& position, SolveOptions options = {});

} // namespace cds
