#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cds {

/// The pointer (k, k+1), identified by k. In S_n the valid codes are 1..n-1.
struct Pointer {
    int code = 0;

    constexpr Pointer() = default;
    constexpr explicit Pointer(int k) : code(k) {}

    friend constexpr auto operator<=>(Pointer, Pointer) = default;
};

enum class Side : std::uint8_t { TailLeft, HeadRight };

/// Where a pointer sits in a permutation: on the left (tail) or right (head)
/// side of the entry at `position` (1-based).
struct Occurrence {
    int position = 0;
    Side side = Side::TailLeft;

    /// Index in the linear order of all 2n occurrences.
    [[nodiscard]] constexpr int rank() const {
        return 2 * (position - 1) + (side == Side::HeadRight ? 1 : 0);
    }
    /// Number of entries strictly left of the cut this occurrence marks.
    [[nodiscard]] constexpr int cut() const { return side == Side::HeadRight ? position : position - 1; }

    friend constexpr bool operator==(Occurrence, Occurrence) = default;
    friend constexpr auto operator<=>(Occurrence a, Occurrence b) { return a.rank() <=> b.rank(); }
};

/// An element of S_n written as [a_1, ..., a_n]. Immutable once built.
class Permutation {
  public:
    /// Validates that `entries` is a bijection of {1..n}, n >= 1; throws ArgumentError otherwise.
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
    [[nodiscard]] std::span<const int> entries() const { return entries_; }
    /// 1-based entry access.
    [[nodiscard]] int at(int position) const { return entries_[position - 1]; }
    /// 1-based position of `value`.
    [[nodiscard]] int position_of(int value) const { return positions_[value]; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.entries_ == b.entries_; }
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.entries_ <=> b.entries_; }

  private:
    std::vector<int> entries_;
    std::vector<int> positions_; // positions_[v] = 1-based index of v; slot 0 unused
};

/// An unordered pointer pair, stored with first < second.
struct Move {
    Pointer first;
    Pointer second;

    Move() = default;
    Move(Pointer a, Pointer b) : first(a < b ? a : b), second(a < b ? b : a) {}

    friend auto operator<=>(const Move&, const Move&) = default;
};

/// Parses whitespace-separated integers. Throws ParseError naming the offending token.
Permutation parse_permutation(std::string_view text);

/// The two occurrences of `p` (head of k, tail of k+1), sorted in occurrence order.
std::pair<Occurrence, Occurrence> pointer_occurrences(const Permutation& perm, Pointer p);

bool interlocks(const Permutation& perm, Pointer p, Pointer q);

/// All interlocking pairs, ordered by (min code, max code).
std::vector<Move> legal_moves(const Permutation& perm);

enum class CdsCase : std::uint8_t { One = 1, Two = 2, Three = 3, Four = 4 };

/// Which of the four rewrite templates the interlocking pair matches.
/// Throws NotApplicable when the pair does not interlock.
CdsCase cds_case(const Permutation& perm, Pointer p, Pointer q);

/// cds_{p,q}: exchanges the block between the first two occurrences with the
/// block between the last two. Throws NotApplicable on non-interlocking pairs.
Permutation apply_cds(const Permutation& perm, Pointer p, Pointer q);
inline Permutation apply_cds(const Permutation& perm, Move m) { return apply_cds(perm, m.first, m.second); }

bool is_fixed_point(const Permutation& perm);

/// Closed form: the identity or [k+1, ..., n, 1, ..., k].
bool is_identity_or_rotation(const Permutation& perm);

/// Code i-1 for [i, ..., n, 1, ..., i-1] with i >= 2; nullopt for the identity.
/// Throws StateError when `perm` is not a fixed point.
std::optional<Pointer> fixed_point_code(const Permutation& perm);

/// The n fixed points of S_n: identity first, then rotations by code 1..n-1.
std::vector<Permutation> fixed_points(int n);

/// Every permutation of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace cds
