#include <doctest.h>

#include <random>
#include <sstream>

#include "cdsgame/errors.hpp"
#include "cdsgame/families.hpp"
#include "cdsgame/fixtures.hpp"
#include "cdsgame/games.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

struct GState {
    oracle::MGraph g;
    std::set<std::string> fav;
};

// gcds2 from the literal rules: drop x, y and listed vertices left isolated,
// except a lone listed vertex.
oracle::MGraph oracle_gcds2(const oracle::MGraph& g, const std::string& x, const std::string& y) {
    const auto full = oracle::gcds_rules(g, x, y);
    const int xi = g.index(x), yi = g.index(y);
    std::vector<int> listed;
    for (int i = 0; i < static_cast<int>(g.v.size()); ++i)
        if (i != xi && i != yi && (g.adj[xi][i] || g.adj[yi][i])) listed.push_back(i);
    std::vector<bool> keep(g.v.size(), true);
    keep[xi] = keep[yi] = false;
    if (listed.size() != 1)
        for (int i : listed)
            if (full.degree(i) == 0) keep[i] = false;
    std::vector<std::string> v;
    for (std::size_t i = 0; i < g.v.size(); ++i)
        if (keep[i]) v.push_back(g.v[i]);
    std::vector<std::pair<std::string, std::string>> e;
    for (const auto& [a, b] : full.edge_set())
        if (keep[full.index(a)] && keep[full.index(b)]) e.emplace_back(a, b);
    return oracle::make(v, e);
}

bool oracle_gcds_one_wins(const Graph& g, const std::vector<Label>& fav, bool one_first) {
    const auto e = g.edges();
    const GState start{oracle::make(g.labels(), e), {fav.begin(), fav.end()}};
    std::function<std::vector<GState>(const GState&)> moves = [](const GState& s) {
        std::vector<GState> out;
        for (const auto& [a, b] : s.g.edge_set()) out.push_back({oracle_gcds2(s.g, a, b), s.fav});
        return out;
    };
    std::function<bool(const GState&)> terminal = [](const GState& s) {
        return !s.g.v.empty() &&
               std::all_of(s.g.v.begin(), s.g.v.end(), [&](const std::string& v) { return s.fav.contains(v); });
    };
    return oracle::one_wins(start, one_first, moves, terminal);
}

bool oracle_cds_one_wins(const Permutation& p, const std::set<int>& fav, bool one_first) {
    std::function<std::vector<oracle::Entries>(const oracle::Entries&)> moves = [](const oracle::Entries& a) {
        std::vector<oracle::Entries> out;
        for (auto [x, y] : oracle::overlap_edges(a)) out.push_back(*oracle::cds_by_templates(a, x, y).begin());
        return out;
    };
    std::function<bool(const oracle::Entries&)> terminal = [&](const oracle::Entries& a) {
        return a[0] != 1 && fav.contains(a[0] - 1);
    };
    return oracle::one_wins(oracle::Entries(p.entries().begin(), p.entries().end()), one_first, moves, terminal);
}

Graph random_graph(std::mt19937_64& rng, int order, double density) {
    std::vector<Label> v;
    for (int i = 1; i <= order; ++i) v.push_back(std::to_string(i));
    std::bernoulli_distribution coin(density);
    std::vector<Edge> e;
    for (int i = 0; i < order; ++i)
        for (int j = i + 1; j < order; ++j)
            if (coin(rng)) e.emplace_back(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    return Graph(v, e);
}

std::set<Pointer> codes(std::initializer_list<int> ks) {
    std::set<Pointer> out;
    for (int k : ks) out.insert(Pointer(k));
    return out;
}

} // namespace

TEST_CASE("player names") {
    CHECK(to_string(Player::One) == "ONE");
    CHECK(parse_player("two") == Player::Two);
    CHECK(parse_player("1") == Player::One);
    CHECK_THROWS_AS(parse_player("three"), ParseError);
    CHECK(opponent(Player::One) == Player::Two);
}

TEST_CASE("terminal winners") {
    const Graph single({"5"}, {});
    CHECK(gcds_terminal_winner(Position(single, {"5"})) == Player::One);
    CHECK(gcds_terminal_winner(Position(single, {})) == Player::Two);
    CHECK(gcds_terminal_winner(Position(Graph({"1", "2"}, {}), {"1"})) == Player::Two);
    CHECK(gcds_terminal_winner(Position(Graph(), {})) == Player::Two);
    CHECK(gcds_terminal_winner(single, {"5", "9"}) == Player::One);
    CHECK_THROWS_AS(gcds_terminal_winner(Position(gen_chain(1), {})), StateError);

    CHECK(cds_terminal_winner(Permutation({4, 1, 2, 3}), codes({3})) == Player::One);
    CHECK(cds_terminal_winner(Permutation({4, 1, 2, 3}), codes({1})) == Player::Two);
    CHECK(cds_terminal_winner(Permutation::identity(4), codes({1, 2, 3})) == Player::Two);
    CHECK_THROWS_AS(cds_terminal_winner(Permutation({2, 4, 1, 3}), {}), StateError);
}

TEST_CASE("gcds game examples") {
    CHECK(solve_gcds(Position(gen_chain(1), {"2"}), Player::One).winner == Player::One);
    CHECK(solve_gcds(chain_position(2), Player::One).winner == Player::Two);
    const Position sample(fixtures::sample_game_graph(), fixtures::sample_game_favorable());
    CHECK(solve_gcds(sample, Player::One).winner == Player::One);
    CHECK(oracle_gcds_one_wins(sample.graph, sample.favorable, true));
}

TEST_CASE("gcds solver agrees with plain minimax on random small positions") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 250; ++k) {
        const Graph g = random_graph(rng, 2 + k % 6, 0.55);
        std::vector<Label> fav;
        for (const auto& v : g.labels())
            if (rng() % 2) fav.push_back(v);
        const Position pos(g, fav);
        for (Player mover : {Player::One, Player::Two}) {
            const auto report = solve_gcds(pos, mover);
            REQUIRE((report.winner == Player::One) == oracle_gcds_one_wins(g, fav, mover == Player::One));
        }
    }
}

TEST_CASE("principal variations replay to the reported winner") {
    const Position pos = chain_position(4);
    for (Player mover : {Player::One, Player::Two}) {
        const auto report = solve_gcds(pos, mover);
        Graph g = pos.graph;
        for (const auto& [a, b] : report.principal_variation) {
            REQUIRE(g.has_edge(a, b));
            g = apply_gcds2(g, a, b);
        }
        CHECK(g.is_edgeless());
        CHECK(gcds_terminal_winner(g, pos.favorable) == report.winner);
    }

    const Permutation perm({2, 4, 1, 3});
    const auto report = solve_cds(perm, codes({3}), Player::One);
    Permutation p = perm;
    for (const auto& m : report.principal_variation) p = apply_cds(p, m);
    CHECK(is_fixed_point(p));
    CHECK(cds_terminal_winner(p, codes({3})) == report.winner);
}

TEST_CASE("cds game examples") {
    CHECK(solve_cds(Permutation({2, 4, 1, 3}), codes({3}), Player::One).winner == Player::One);
    CHECK(solve_cds(Permutation({2, 4, 1, 3}), {}, Player::One).winner == Player::Two);
    CHECK(solve_cds(Permutation::identity(3), codes({1, 2}), Player::One).winner == Player::Two);
    CHECK_THROWS_AS(solve_cds(Permutation({2, 4, 1, 3}), codes({4}), Player::One), RangeError);
    CHECK_THROWS_AS(solve_cds(Permutation::identity(11), {}, Player::One), BoundExceeded);
}

TEST_CASE("cds solver agrees with plain minimax for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        CdsSolver solver;
        for (const auto& p : all_permutations(n)) {
            for (int mask = 0; mask < (1 << (n - 1)); mask += (n == 5 ? 3 : 1)) {
                std::set<Pointer> fav;
                std::set<int> fav_ints;
                for (int k = 1; k < n; ++k)
                    if (mask & (1 << (k - 1))) {
                        fav.insert(Pointer(k));
                        fav_ints.insert(k);
                    }
                for (Player mover : {Player::One, Player::Two})
                    REQUIRE((solver.solve(p, fav, mover).winner == Player::One) ==
                            oracle_cds_one_wins(p, fav_ints, mover == Player::One));
            }
        }
    }
}

TEST_CASE("solve cache file format") {
    SolveCache cache;
    const std::string key = gcds_state_key(gen_chain(1), {"2"}, Player::One);
    CHECK(key == "G|1,2,3|1-2,1-3,2-3|2|1");
    CHECK(cds_state_key(Permutation({2, 1}), codes({1}), Player::Two) == "P|2 1|1|2");
    CHECK(is_valid_cache_key(key));
    CHECK(is_valid_cache_key("P|2 1||1"));
    CHECK_FALSE(is_valid_cache_key("G|1,2|1-|2|1"));
    CHECK_FALSE(is_valid_cache_key("Q|1|2"));
    CHECK_FALSE(is_valid_cache_key("P|2 x||1"));

    cache.put(key, Player::One);
    cache.put("P|2 1|1|2", Player::Two);
    std::ostringstream out;
    cache.save(out);
    CHECK(out.str() == "GCDSCACHE 1\nG|1,2,3|1-2,1-3,2-3|2|1\tONE\nP|2 1|1|2\tTWO\n");

    SolveCache back;
    std::istringstream in(out.str());
    back.load(in);
    CHECK(back.size() == 2);
    CHECK(back.get(key) == Player::One);

    auto error_of = [](const std::string& text) -> std::string {
        SolveCache c;
        std::istringstream s(text);
        try {
            c.load(s);
        } catch (const ParseError& e) {
            return e.what();
        }
        return "";
    };
    CHECK(error_of("GCDSCACHE 2\n").find("line 1") != std::string::npos);
    CHECK(error_of("").find("line 1") != std::string::npos);
    CHECK(error_of("GCDSCACHE 1\nP|2 1|1|2\tTWO\nbad key\tONE\n").find("line 3") != std::string::npos);
    CHECK(error_of("GCDSCACHE 1\nP|2 1|1|2\tMAYBE\n").find("line 2") != std::string::npos);
    CHECK(error_of("GCDSCACHE 1\nP|2 1|1|2 TWO\n").find("line 2") != std::string::npos);
}

TEST_CASE("a warm cache shortens the search") {
    SolveCache cache;
    SolveOptions opts;
    opts.cache = &cache;
    const auto cold = solve_gcds(chain_position(5), Player::One, opts);
    CHECK(cache.size() > 0);
    const auto warm = solve_gcds(chain_position(5), Player::One, opts);
    CHECK(warm.winner == cold.winner);
    CHECK(warm.nodes_expanded < cold.nodes_expanded);
    CHECK(warm.cache_hits > 0);
}

TEST_CASE("np status of chain positions") {
    for (int m = 1; m <= 5; ++m) {
        const auto r = np_status(chain_position(m));
        CHECK(r.status == expected_np(m));
        CHECK(r.status != NpStatus::Anomaly);
    }
    CHECK(to_string(NpStatus::Anomaly) == "ANOMALY");
}

TEST_CASE("solver bounds") {
    SolveOptions small;
    small.max_vertices = 5;
    CHECK_THROWS_AS(solve_gcds(chain_position(3), Player::One, small), BoundExceeded);
    CHECK_NOTHROW(solve_gcds(chain_position(2), Player::One, small));
}
