#include "cdsgame/permutation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cdsgame/errors.hpp"

namespace cds {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    if (n < 1) throw ArgumentError("permutation must have at least one entry");
    positions_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = entries_[i];
        if (v < 1 || v > n) throw ArgumentError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (positions_[v] != 0) throw ArgumentError("duplicate entry " + std::to_string(v));
        positions_[v] = i + 1;
    }
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw RangeError("identity needs n >= 1");
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    out += ']';
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::vector<std::string> tokens;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("not an integer: '" + tok + "'");
        values.push_back(v);
        tokens.push_back(tok);
    }
    if (values.empty()) throw ParseError("empty permutation");
    const int n = static_cast<int>(values.size());
    std::vector<bool> seen(n + 1, false);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int v = values[i];
        if (v < 1 || v > n) throw ParseError("value out of range 1.." + std::to_string(n) + ": '" + tokens[i] + "'");
        if (seen[v]) throw ParseError("duplicate value: '" + tokens[i] + "'");
        seen[v] = true;
    }
    return Permutation(std::move(values));
}

namespace {

void check_pointer(const Permutation& perm, Pointer p) {
    if (p.code < 1 || p.code > perm.size() - 1)
        throw RangeError("pointer " + std::to_string(p.code) + " outside 1.." + std::to_string(perm.size() - 1));
}

// Occurrence ranks of a pointer, sorted.
std::pair<int, int> ranks(const Permutation& perm, int k) {
    const int head = 2 * (perm.position_of(k) - 1) + 1;
    const int tail = 2 * (perm.position_of(k + 1) - 1);
    return head < tail ? std::pair{head, tail} : std::pair{tail, head};
}

bool crossing(std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

enum class Role : std::uint8_t { P, Q };

struct Token {
    Role role;
    Side side;
    friend bool operator==(Token, Token) = default;
};

// Occurrence patterns of the four rewrite templates, p's first occurrence leading.
struct CaseTemplate {
    CdsCase id;
    std::array<Token, 4> pattern;
};

constexpr std::array<CaseTemplate, 4> kTemplates{{
    {CdsCase::One, {{{Role::P, Side::TailLeft}, {Role::Q, Side::HeadRight}, {Role::P, Side::HeadRight}, {Role::Q, Side::TailLeft}}}},
    {CdsCase::Two, {{{Role::P, Side::HeadRight}, {Role::Q, Side::HeadRight}, {Role::P, Side::TailLeft}, {Role::Q, Side::TailLeft}}}},
    {CdsCase::Three, {{{Role::P, Side::HeadRight}, {Role::Q, Side::TailLeft}, {Role::P, Side::TailLeft}, {Role::Q, Side::HeadRight}}}},
    {CdsCase::Four, {{{Role::P, Side::TailLeft}, {Role::Q, Side::TailLeft}, {Role::P, Side::HeadRight}, {Role::Q, Side::HeadRight}}}},
}};

struct Matched {
    CdsCase id;
    std::array<Occurrence, 4> occurrences; // in linear order
};

Matched match_template(const Permutation& perm, Pointer p, Pointer q) {
    check_pointer(perm, p);
    check_pointer(perm, q);
    if (p == q) throw ArgumentError("cds needs two distinct pointers");
    if (!interlocks(perm, p, q))
        throw NotApplicable("pointers " + std::to_string(p.code) + " and " + std::to_string(q.code) + " do not interlock in " +
                            perm.to_string());

    auto [p1, p2] = pointer_occurrences(perm, p);
    auto [q1, q2] = pointer_occurrences(perm, q);
    if (q1 < p1) {
        std::swap(p1, q1);
        std::swap(p2, q2);
    }
    const std::array<Occurrence, 4> occ{p1, q1, p2, q2};
    const std::array<Token, 4> seen{Token{Role::P, p1.side}, Token{Role::Q, q1.side}, Token{Role::P, p2.side},
                                    Token{Role::Q, q2.side}};

    const CaseTemplate* hit = nullptr;
    int hits = 0;
    for (const auto& t : kTemplates) {
        if (t.pattern == seen) {
            hit = &t;
            ++hits;
        }
    }
    if (hits != 1)
        throw std::logic_error("cds template matcher found " + std::to_string(hits) + " matches for " + perm.to_string());
    return {hit->id, occ};
}

} // namespace

std::pair<Occurrence, Occurrence> pointer_occurrences(const Permutation& perm, Pointer p) {
    check_pointer(perm, p);
    const Occurrence head{perm.position_of(p.code), Side::HeadRight};
    const Occurrence tail{perm.position_of(p.code + 1), Side::TailLeft};
    return head < tail ? std::pair{head, tail} : std::pair{tail, head};
}

bool interlocks(const Permutation& perm, Pointer p, Pointer q) {
    check_pointer(perm, p);
    check_pointer(perm, q);
    if (p == q) throw ArgumentError("interlock test needs two distinct pointers");
    return crossing(ranks(perm, p.code), ranks(perm, q.code));
}

std::vector<Move> legal_moves(const Permutation& perm) {
    const int pointers = perm.size() - 1;
    std::vector<std::pair<int, int>> r(pointers + 1);
    for (int k = 1; k <= pointers; ++k) r[k] = ranks(perm, k);
    std::vector<Move> moves;
    for (int a = 1; a <= pointers; ++a)
        for (int b = a + 1; b <= pointers; ++b)
            if (crossing(r[a], r[b])) moves.emplace_back(Pointer(a), Pointer(b));
    return moves;
}

CdsCase cds_case(const Permutation& perm, Pointer p, Pointer q) { return match_template(perm, p, q).id; }

Permutation apply_cds(const Permutation& perm, Pointer p, Pointer q) {
    const auto m = match_template(perm, p, q);
    // In every template, block I runs between the first two occurrences and
    // block II between the last two; the rewrite exchanges them.
    const int c1 = m.occurrences[0].cut();
    const int c2 = m.occurrences[1].cut();
    const int c3 = m.occurrences[2].cut();
    const int c4 = m.occurrences[3].cut();
    const auto e = perm.entries();
    std::vector<int> out;
    out.reserve(e.size());
    out.insert(out.end(), e.begin(), e.begin() + c1);
    out.insert(out.end(), e.begin() + c3, e.begin() + c4);
    out.insert(out.end(), e.begin() + c2, e.begin() + c3);
    out.insert(out.end(), e.begin() + c1, e.begin() + c2);
    out.insert(out.end(), e.begin() + c4, e.end());
    return Permutation(std::move(out));
}

bool is_fixed_point(const Permutation& perm) {
    const int pointers = perm.size() - 1;
    std::vector<std::pair<int, int>> r(pointers + 1);
    for (int k = 1; k <= pointers; ++k) r[k] = ranks(perm, k);
    for (int a = 1; a <= pointers; ++a)
        for (int b = a + 1; b <= pointers; ++b)
            if (crossing(r[a], r[b])) return false;
    return true;
}

bool is_identity_or_rotation(const Permutation& perm) {
    const int n = perm.size();
    const int first = perm.at(1);
    for (int i = 1; i <= n; ++i)
        if (perm.at(i) != (first - 1 + i - 1) % n + 1) return false;
    return true;
}

std::optional<Pointer> fixed_point_code(const Permutation& perm) {
    if (!is_fixed_point(perm)) throw StateError(perm.to_string() + " is not a cds fixed point");
    const int first = perm.at(1);
    if (first == 1) return std::nullopt;
    return Pointer(first - 1);
}

std::vector<Permutation> fixed_points(int n) {
    std::vector<Permutation> out;
    out.push_back(Permutation::identity(n));
    for (int k = 1; k < n; ++k) {
        std::vector<int> e;
        for (int v = k + 1; v <= n; ++v) e.push_back(v);
        for (int v = 1; v <= k; ++v) e.push_back(v);
        out.emplace_back(std::move(e));
    }
    return out;
}

std::vector<Permutation> all_permutations(int n) {
    if (n < 1) throw RangeError("all_permutations needs n >= 1");
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(e);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

} // namespace cds
