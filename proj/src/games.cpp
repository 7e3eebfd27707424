#include "cdsgame/games.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "cdsgame/errors.hpp"

namespace cds {

std::string_view to_string(Player p) { return p == Player::One ? "ONE" : "TWO"; }

Player parse_player(std::string_view text) {
    std::string up;
    for (char c : text) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "ONE" || up == "1") return Player::One;
    if (up == "TWO" || up == "2") return Player::Two;
    throw ParseError("unknown player '" + std::string(text) + "' (expected ONE or TWO)");
}

std::string_view to_string(NpStatus s) {
    switch (s) {
    case NpStatus::N: return "N";
    case NpStatus::P: return "P";
    case NpStatus::Anomaly: return "ANOMALY";
    }
    return "ANOMALY";
}

// ---------------------------------------------------------------- cache keys

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool valid_label(std::string_view l) {
    if (l.empty()) return false;
    return std::none_of(l.begin(), l.end(), [](char c) {
        return c == ',' || c == '|' || c == '-' || static_cast<unsigned char>(c) <= ' ';
    });
}

bool valid_uint(std::string_view s) {
    return !s.empty() && s.size() < 10 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string join_labels(const std::vector<Label>& labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out += ',';
        out += labels[i];
    }
    return out;
}

} // namespace

bool is_valid_cache_key(std::string_view key) {
    const auto parts = split(key, '|');
    if (parts.empty()) return false;
    if (parts[0] == "G") {
        if (parts.size() != 5) return false;
        for (auto v : split(parts[1], ','))
            if (!valid_label(v)) return false;
        for (auto e : split(parts[2], ',')) {
            const auto ends = split(e, '-');
            if (ends.size() != 2 || !valid_label(ends[0]) || !valid_label(ends[1])) return false;
        }
        for (auto a : split(parts[3], ','))
            if (!valid_label(a)) return false;
        return parts[4] == "1" || parts[4] == "2";
    }
    if (parts[0] == "P") {
        if (parts.size() != 4) return false;
        const auto entries = split(parts[1], ' ');
        if (entries.empty()) return false;
        for (auto e : entries)
            if (!valid_uint(e)) return false;
        for (auto a : split(parts[2], ','))
            if (!valid_uint(a)) return false;
        return parts[3] == "1" || parts[3] == "2";
    }
    return false;
}

std::string gcds_state_key(const Graph& g, const std::vector<Label>& favorable, Player mover) {
    std::string key = "G|" + join_labels(g.labels()) + "|";
    bool first = true;
    for (const auto& [a, b] : g.edges()) {
        if (!first) key += ',';
        first = false;
        key += a + "-" + b;
    }
    std::vector<Label> fav;
    for (const auto& f : favorable)
        if (g.has_vertex(f)) fav.push_back(f);
    std::sort(fav.begin(), fav.end(), LabelLess{});
    key += "|" + join_labels(fav) + "|" + (mover == Player::One ? "1" : "2");
    return key;
}

std::string cds_state_key(const Permutation& perm, const std::set<Pointer>& favorable, Player mover) {
    std::string key = "P|";
    for (int i = 1; i <= perm.size(); ++i) {
        if (i > 1) key += ' ';
        key += std::to_string(perm.at(i));
    }
    key += '|';
    bool first = true;
    for (auto p : favorable) {
        if (!first) key += ',';
        first = false;
        key += std::to_string(p.code);
    }
    key += '|';
    key += mover == Player::One ? "1" : "2";
    return key;
}

// ---------------------------------------------------------------- cache store

std::optional<Player> SolveCache::get(const std::string& key) const {
    std::lock_guard lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void SolveCache::put(const std::string& key, Player winner) {
    std::lock_guard lock(mu_);
    entries_[key] = winner;
}

std::size_t SolveCache::size() const {
    std::lock_guard lock(mu_);
    return entries_.size();
}

void SolveCache::save(std::ostream& out) const {
    std::vector<std::pair<std::string, Player>> sorted;
    {
        std::lock_guard lock(mu_);
        sorted.assign(entries_.begin(), entries_.end());
    }
    std::sort(sorted.begin(), sorted.end());
    out << kHeader << '\n';
    for (const auto& [k, w] : sorted) out << k << '\t' << to_string(w) << '\n';
}

void SolveCache::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("cache line 1: missing header");
    if (line != kHeader) throw ParseError("cache line 1: unsupported header '" + line + "' (expected GCDSCACHE 1)");
    std::vector<std::pair<std::string, Player>> parsed;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            throw ParseError("cache line " + std::to_string(lineno) + ": expected <key><TAB><ONE|TWO>");
        const std::string key = line.substr(0, tab);
        const std::string who = line.substr(tab + 1);
        if (!is_valid_cache_key(key)) throw ParseError("cache line " + std::to_string(lineno) + ": malformed key");
        if (who != "ONE" && who != "TWO")
            throw ParseError("cache line " + std::to_string(lineno) + ": unknown winner '" + who + "'");
        parsed.emplace_back(key, who == "ONE" ? Player::One : Player::Two);
    }
    std::lock_guard lock(mu_);
    for (auto& [k, w] : parsed) entries_[k] = w;
}

void SolveCache::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file '" + path + "'");
    save(out);
    if (!out) throw std::runtime_error("failed writing cache file '" + path + "'");
}

void SolveCache::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read cache file '" + path + "'");
    load(in);
}

// ---------------------------------------------------------------- terminal rules

Player gcds_terminal_winner(const Position& position) {
    return gcds_terminal_winner(position.graph, position.favorable);
}

Player gcds_terminal_winner(const Graph& g, const std::vector<Label>& favorable) {
    if (!g.is_edgeless()) throw StateError("position still has edges");
    const auto& labels = g.labels();
    if (labels.empty()) return Player::Two;
    const bool inside = std::all_of(labels.begin(), labels.end(), [&](const Label& v) {
        return std::find(favorable.begin(), favorable.end(), v) != favorable.end();
    });
    return inside ? Player::One : Player::Two;
}

Player cds_terminal_winner(const Permutation& perm, const std::set<Pointer>& favorable) {
    auto code = fixed_point_code(perm);
    return code && favorable.contains(*code) ? Player::One : Player::Two;
}

// ---------------------------------------------------------------- GCDS solver

namespace {

class GcdsSearch {
  public:
    GcdsSearch(const std::vector<Label>& labels, std::uint64_t favorable, SolveCache* cache)
        : labels_(labels), favorable_(favorable), cache_(cache) {}

    std::uint64_t nodes_expanded = 0;
    std::uint64_t cache_hits = 0;

    Player terminal(const PackedGraph& g) const {
        return g.alive != 0 && (g.alive & ~favorable_) == 0 ? Player::One : Player::Two;
    }

    std::vector<std::pair<int, int>> moves(const PackedGraph& g) const {
        std::vector<std::pair<int, int>> out;
        std::uint64_t live = g.alive;
        while (live) {
            const int i = std::countr_zero(live);
            live &= live - 1;
            std::uint64_t higher = g.rows[i] & ~((std::uint64_t{2} << i) - 1);
            while (higher) {
                const int j = std::countr_zero(higher);
                higher &= higher - 1;
                out.emplace_back(i, j);
            }
        }
        return out;
    }

    Player solve(const PackedGraph& g, Player mover, int depth) {
        if (g.edgeless()) return terminal(g);
        const auto key = packed_key(g, mover);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++cache_hits;
            return it->second;
        }
        std::string text;
        if (cache_) {
            text = text_key(g, mover);
            if (auto w = cache_->get(text)) {
                ++cache_hits;
                memo_.emplace(key, *w);
                return *w;
            }
        }
        ++nodes_expanded;
        if (2 * depth > static_cast<int>(labels_.size()))
            throw std::logic_error("gcds play exceeded half the vertex count");

        const int active = std::popcount(g.non_isolated());
        Player winner = opponent(mover);
        for (auto [x, y] : moves(g)) {
            const PackedGraph child = packed_gcds2(g, x, y);
            if (std::popcount(child.non_isolated()) >= active)
                throw std::logic_error("gcds2 move did not reduce the number of non-isolated vertices");
            if (solve(child, opponent(mover), depth + 1) == mover) {
                winner = mover;
                break;
            }
        }
        memo_.emplace(key, winner);
        if (cache_) cache_->put(text, winner);
        return winner;
    }

    GcdsMove label_move(std::pair<int, int> m) const { return {labels_[m.first], labels_[m.second]}; }

  private:
    static std::string packed_key(const PackedGraph& g, Player mover) {
        std::string k;
        auto put = [&](std::uint64_t w) { k.append(reinterpret_cast<const char*>(&w), sizeof w); };
        put(g.alive);
        std::uint64_t live = g.alive;
        while (live) {
            const int i = std::countr_zero(live);
            live &= live - 1;
            put(g.rows[i]);
        }
        k.push_back(static_cast<char>(mover));
        return k;
    }

    std::string text_key(const PackedGraph& g, Player mover) const {
        std::vector<Label> fav;
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if ((g.alive & favorable_) >> i & 1) fav.push_back(labels_[i]);
        return gcds_state_key(unpack(g, labels_), fav, mover);
    }

    const std::vector<Label>& labels_;
    std::uint64_t favorable_;
    SolveCache* cache_;
    std::unordered_map<std::string, Player> memo_;
};

} // namespace

GcdsSolver::GcdsSolver(SolveOptions options) : options_(options) {}

SolveReport<GcdsMove> GcdsSolver::solve(const Position& position, Player mover) {
    const Graph& g = position.graph;
    if (g.order() > options_.max_vertices || g.order() > kPackedLimit)
        throw BoundExceeded("gcds solve refused: " + std::to_string(g.order()) + " vertices exceeds bound " +
                            std::to_string(std::min(options_.max_vertices, kPackedLimit)));
    std::uint64_t fav = 0;
    for (const auto& f : position.favorable) fav |= std::uint64_t{1} << *g.index_of(f);

    GcdsSearch search(g.labels(), fav, options_.cache);
    const PackedGraph root = pack(g);
    SolveReport<GcdsMove> report;
    report.winner = search.solve(root, mover, 0);
    report.nodes_expanded = search.nodes_expanded;
    report.cache_hits = search.cache_hits;

    PackedGraph cur = root;
    Player side = mover;
    while (!cur.edgeless()) {
        const Player here = search.solve(cur, side, 0);
        const auto options = search.moves(cur);
        auto chosen = options.front();
        if (here == side) {
            for (auto m : options) {
                if (search.solve(packed_gcds2(cur, m.first, m.second), opponent(side), 0) == side) {
                    chosen = m;
                    break;
                }
            }
        }
        report.principal_variation.push_back(search.label_move(chosen));
        cur = packed_gcds2(cur, chosen.first, chosen.second);
        side = opponent(side);
    }
    if (search.terminal(cur) != report.winner)
        throw std::logic_error("principal variation does not end in a win for the reported winner");
    return report;
}

// ---------------------------------------------------------------- CDS solver

struct CdsSolver::Search {
    std::unordered_map<std::string, Player>& memo;
    const std::set<Pointer>& favorable;
    std::uint64_t favorable_mask;
    SolveCache* cache;
    int n;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t cache_hits = 0;

    std::string key(const Permutation& p, Player mover) const {
        std::string k;
        for (int v : p.entries()) k.push_back(static_cast<char>(v));
        k.append(reinterpret_cast<const char*>(&favorable_mask), sizeof favorable_mask);
        k.push_back(static_cast<char>(mover));
        return k;
    }

    Player solve(const Permutation& p, Player mover, int depth) {
        const auto moves = legal_moves(p);
        if (moves.empty()) return cds_terminal_winner(p, favorable);
        const auto k = key(p, mover);
        if (auto it = memo.find(k); it != memo.end()) {
            ++cache_hits;
            return it->second;
        }
        std::string text;
        if (cache) {
            text = cds_state_key(p, favorable, mover);
            if (auto w = cache->get(text)) {
                ++cache_hits;
                memo.emplace(k, *w);
                return *w;
            }
        }
        ++nodes_expanded;
        if (depth >= n) throw std::logic_error("cds play exceeded n moves from " + p.to_string());
        Player winner = opponent(mover);
        for (const auto& m : moves) {
            if (solve(apply_cds(p, m), opponent(mover), depth + 1) == mover) {
                winner = mover;
                break;
            }
        }
        memo.emplace(k, winner);
        if (cache) cache->put(text, winner);
        return winner;
    }
};

CdsSolver::CdsSolver(SolveOptions options) : options_(options) {}

SolveReport<Move> CdsSolver::solve(const Permutation& perm, const std::set<Pointer>& favorable, Player mover) {
    const int n = perm.size();
    if (n > options_.max_n || n > kPackedLimit)
        throw BoundExceeded("cds solve refused: n = " + std::to_string(n) + " exceeds bound " +
                            std::to_string(options_.max_n));
    std::uint64_t mask = 0;
    for (auto p : favorable) {
        if (p.code < 1 || p.code > n - 1)
            throw RangeError("favorable code " + std::to_string(p.code) + " outside 1.." + std::to_string(n - 1));
        mask |= std::uint64_t{1} << p.code;
    }

    Search search{memo_, favorable, mask, options_.cache, n};
    SolveReport<Move> report;
    report.winner = search.solve(perm, mover, 0);
    report.nodes_expanded = search.nodes_expanded;
    report.cache_hits = search.cache_hits;

    Permutation cur = perm;
    Player side = mover;
    while (true) {
        const auto moves = legal_moves(cur);
        if (moves.empty()) break;
        const Player here = search.solve(cur, side, 0);
        Move chosen = moves.front();
        if (here == side) {
            for (const auto& m : moves) {
                if (search.solve(apply_cds(cur, m), opponent(side), 0) == side) {
                    chosen = m;
                    break;
                }
            }
        }
        report.principal_variation.push_back(chosen);
        cur = apply_cds(cur, chosen);
        side = opponent(side);
        if (static_cast<int>(report.principal_variation.size()) > n)
            throw std::logic_error("principal variation longer than n");
    }
    if (cds_terminal_winner(cur, favorable) != report.winner)
        throw std::logic_error("principal variation does not end in a win for the reported winner");
    return report;
}

// ---------------------------------------------------------------- N/P

NpReport np_status(const Position& position, SolveOptions options) {
    NpReport r;
    r.winner_one_first = GcdsSolver(options).solve(position, Player::One).winner;
    r.winner_two_first = GcdsSolver(options).solve(position, Player::Two).winner;
    if (r.winner_one_first == Player::One && r.winner_two_first == Player::Two)
        r.status = NpStatus::N;
    else if (r.winner_one_first == Player::Two && r.winner_two_first == Player::One)
        r.status = NpStatus::P;
    else
        r.status = NpStatus::Anomaly;
    return r;
}

} // namespace cds
