#include <doctest.h>

#include <random>

#include "cdsgame/errors.hpp"
#include "cdsgame/families.hpp"
#include "cdsgame/fixtures.hpp"
#include "cdsgame/graph.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

oracle::MGraph to_oracle(const Graph& g) {
    const auto e = g.edges();
    return oracle::make(g.labels(), e);
}

std::set<std::pair<std::string, std::string>> edge_set(const Graph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [a, b] : g.edges()) out.insert(std::minmax(a, b));
    return out;
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

Graph named(const std::vector<Label>& v, const std::vector<Edge>& e) { return Graph(v, e); }

} // namespace

TEST_CASE("graph construction validates its input") {
    CHECK_THROWS_AS(Graph({"a", "a"}, {}), ArgumentError);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), ArgumentError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "c"}}), ArgumentError);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), ArgumentError);
    CHECK_THROWS_AS(Graph({"a-b"}, {}), ArgumentError);
    CHECK_THROWS_AS(Graph({"a b"}, {}), ArgumentError);
    CHECK_THROWS_AS(Graph({""}, {}), ArgumentError);
}

TEST_CASE("labels order numerically first, then by string") {
    const Graph g({"v2", "10", "2", "v10", "1"}, {});
    CHECK(g.labels() == std::vector<Label>{"1", "2", "10", "v10", "v2"});
    CHECK(label_less("9", "10"));
    CHECK(label_less("10", "a"));
    CHECK_FALSE(label_less("a", "10"));
}

TEST_CASE("masterlist examples") {
    const auto ml6 = masterlist(fixtures::seven_vertex_before(), "v1", "v2");
    CHECK(ml6.column_x == std::vector<Label>{"v3", "v4", "v7"});
    CHECK(ml6.column_y == std::vector<Label>{"v3", "v4", "v6"});
    CHECK(ml6.occurrences("v3") == 2);
    CHECK(ml6.occurrences("v7") == 1);
    CHECK(ml6.occurrences("v5") == 0);

    const auto ml7 = masterlist(fixtures::nine_vertex_before(), "v2", "v7");
    CHECK(ml7.column_x == std::vector<Label>{"v1", "v3", "v6", "v9"});
    CHECK(ml7.column_y == std::vector<Label>{"v1", "v5", "v6", "v8"});

    const Graph tri = named({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    const auto mt = masterlist(tri, "a", "b");
    CHECK(mt.column_x == std::vector<Label>{"c"});
    CHECK(mt.column_y == std::vector<Label>{"c"});
    CHECK(mt.members() == std::vector<Label>{"c"});
    CHECK_THROWS_AS(masterlist(named({"a", "b"}, {}), "a", "b"), NotAnEdge);
}

TEST_CASE("gcds examples") {
    CHECK(apply_gcds(fixtures::seven_vertex_before(), "v1", "v2") == fixtures::seven_vertex_after());
    CHECK(apply_gcds(fixtures::nine_vertex_before(), "v2", "v7") == fixtures::nine_vertex_after());

    const Graph path = named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(apply_gcds(path, "a", "b").is_edgeless());
    CHECK_THROWS_AS(apply_gcds(path, "a", "c"), NotAnEdge);
    CHECK_THROWS_AS(apply_gcds_via_classes(path, "a", "c"), NotAnEdge);
    CHECK_THROWS_AS(apply_gcds2(path, "a", "c"), NotAnEdge);
}

TEST_CASE("vertex classes") {
    const auto c6 = vertex_classes(fixtures::seven_vertex_before(), "v1", "v2");
    CHECK(c6.x_only == std::vector<Label>{"v7"});
    CHECK(c6.y_only == std::vector<Label>{"v6"});
    CHECK(c6.both == std::vector<Label>{"v3", "v4"});
    CHECK(c6.outside == std::vector<Label>{"v5"});

    const auto c10 = vertex_classes(fixtures::sample_game_graph(), "2", "4");
    CHECK(c10.both == std::vector<Label>{"1", "3"});
    CHECK(c10.x_only == std::vector<Label>{"6"});
    CHECK(c10.y_only == std::vector<Label>{"5"});
    CHECK(c10.outside == std::vector<Label>{"7"});

    const Graph tri = named({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    CHECK(vertex_classes(tri, "a", "b").both == std::vector<Label>{"c"});
    CHECK(apply_gcds_via_classes(tri, "a", "b").is_edgeless());
}

TEST_CASE("gcds rules agree with the literal case analysis and the class rule on random graphs") {
    std::mt19937_64 rng(7);
    int compared = 0;
    for (int k = 0; k < 1000; ++k) {
        const Graph g = random_graph(rng, 2 + k % 9, 0.25 + 0.5 * (k % 3) / 2.0);
        for (const auto& [a, b] : g.edges()) {
            const Graph h = apply_gcds(g, a, b);
            REQUIRE(edge_set(h) == oracle::gcds_rules(to_oracle(g), a, b).edge_set());
            REQUIRE(h == apply_gcds_via_classes(g, a, b));
            ++compared;
        }
    }
    CHECK(compared > 1000);
}

TEST_CASE("property: gcds isolates the targets and keeps the vertex set") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 300; ++k) {
        const Graph g = random_graph(rng, 3 + k % 8, 0.5);
        for (const auto& [a, b] : g.edges()) {
            const Graph h = apply_gcds(g, a, b);
            REQUIRE(h.labels() == g.labels());
            REQUIRE(h.degree(*h.index_of(a)) == 0);
            REQUIRE(h.degree(*h.index_of(b)) == 0);
        }
    }
}

TEST_CASE("gcds2 examples") {
    const auto states = fixtures::sample_game_states();
    CHECK(apply_gcds2(states[0], "2", "4") == states[1]);
    CHECK(apply_gcds2(states[1], "1", "3") == states[2]);
    CHECK(apply_gcds2(states[2], "6", "7") == states[3]);

    const Graph after = apply_gcds2(fixtures::nine_vertex_before(), "v2", "v7");
    CHECK(after.labels() == std::vector<Label>{"v1", "v3", "v4", "v6", "v8"});
    CHECK(after.has_vertex("v4"));
    CHECK(after.edge_count() == 6);

    const Graph path = named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    const Graph p2 = apply_gcds2(path, "a", "b");
    CHECK(p2.labels() == std::vector<Label>{"c"}); // sole masterlist member survives
}

TEST_CASE("property: gcds2 removes the targets and only isolated masterlist vertices") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 500; ++k) {
        const Graph g = random_graph(rng, 2 + k % 10, 0.45);
        for (const auto& [a, b] : g.edges()) {
            const auto ml = masterlist(g, a, b);
            const auto members = ml.members();
            const Graph full = apply_gcds(g, a, b);
            const Graph h = apply_gcds2(g, a, b);
            REQUIRE_FALSE(h.has_vertex(a));
            REQUIRE_FALSE(h.has_vertex(b));
            for (const auto& v : g.labels()) {
                if (v == a || v == b) continue;
                const bool listed = std::find(members.begin(), members.end(), v) != members.end();
                const bool isolated = full.degree(*full.index_of(v)) == 0;
                const bool deleted = listed && isolated && members.size() != 1;
                REQUIRE(h.has_vertex(v) == !deleted);
            }
            for (const auto& [u, w] : h.edges()) REQUIRE(full.has_edge(u, w));
            REQUIRE(h.edge_count() == full.edge_count());
        }
    }
}

TEST_CASE("packed gcds2 matches the labelled version") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 400; ++k) {
        const Graph g = random_graph(rng, 2 + k % 12, 0.4);
        const PackedGraph pg = pack(g);
        REQUIRE(unpack(pg, g.labels()) == g);
        for (const auto& [i, j] : g.edge_indices())
            REQUIRE(unpack(packed_gcds2(pg, i, j), g.labels()) == apply_gcds2(g, g.label(i), g.label(j)));
    }
    std::vector<Label> many;
    for (int i = 0; i < 65; ++i) many.push_back(std::to_string(i + 1));
    CHECK_THROWS_AS(pack(Graph(many, {})), BoundExceeded);
}

TEST_CASE("isomorphism examples") {
    const Graph g2 = gen_chain(2);
    VertexMap shuffle = {{"1", "a"}, {"2", "b"}, {"3", "c"}, {"4", "d"}, {"5", "e"}};
    const Graph renamed = relabel(g2, shuffle);
    const auto map = are_isomorphic(g2, renamed);
    REQUIRE(map);
    CHECK(verify_isomorphism(g2, renamed, *map));

    const Graph tri = named({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    const Graph path = named({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(are_isomorphic(tri, path));

    const Position p22(g2, {"2", "4"});
    CHECK(positions_isomorphic(p22, Position(renamed, {"b", "d"})));
    CHECK_FALSE(positions_isomorphic(p22, Position(g2, {"1", "3"})));

    std::vector<Label> big;
    for (int i = 0; i < 33; ++i) big.push_back(std::to_string(i + 1));
    CHECK_THROWS_AS(are_isomorphic(Graph(big, {}), Graph(big, {})), BoundExceeded);
}

TEST_CASE("isomorphism agrees with exhaustive bijection search on small random graphs") {
    std::mt19937_64 rng(19);
    int positive = 0;
    for (int k = 0; k < 400; ++k) {
        const int order = 1 + k % 7;
        const Graph a = random_graph(rng, order, 0.5);
        Graph b = random_graph(rng, order, 0.5);
        if (k % 2 == 0) {
            std::vector<Label> perm = a.labels();
            std::shuffle(perm.begin(), perm.end(), rng);
            VertexMap m;
            for (std::size_t i = 0; i < perm.size(); ++i) m[a.labels()[i]] = perm[i];
            b = relabel(a, m);
        }
        const auto map = are_isomorphic(a, b);
        REQUIRE(map.has_value() == oracle::isomorphic_bruteforce(to_oracle(a), to_oracle(b)));
        if (map) {
            REQUIRE(verify_isomorphism(a, b, *map));
            ++positive;
        }
    }
    CHECK(positive >= 200);
}

TEST_CASE("position isomorphism respects favourable sets") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 200; ++k) {
        const int order = 2 + k % 6;
        const Graph a = random_graph(rng, order, 0.5);
        std::vector<Label> fav_a;
        std::set<std::string> fa;
        for (const auto& v : a.labels())
            if (rng() % 2) {
                fav_a.push_back(v);
                fa.insert(v);
            }
        const Graph b = random_graph(rng, order, 0.5);
        std::vector<Label> fav_b;
        std::set<std::string> fb;
        for (const auto& v : b.labels())
            if (rng() % 2) {
                fav_b.push_back(v);
                fb.insert(v);
            }
        const auto map = positions_isomorphic(Position(a, fav_a), Position(b, fav_b));
        REQUIRE(map.has_value() == oracle::isomorphic_bruteforce(to_oracle(a), to_oracle(b), fa, fb));
    }
}

TEST_CASE("positions require favourable vertices to exist") {
    CHECK_THROWS_AS(Position(gen_chain(1), {"9"}), ArgumentError);
    const Position p(gen_chain(2), {"4", "2", "2"});
    CHECK(p.favorable == std::vector<Label>{"2", "4"});
    CHECK(p.is_favorable("4"));
    CHECK_FALSE(p.is_favorable("3"));
}

TEST_CASE("gcds2 on a triangle chain at an edge off the interior spine gives the next smaller chain") {
    for (int m = 2; m <= 7; ++m) {
        const Graph g = gen_chain(m);
        for (const auto& [a, b] : g.edges()) {
            const int lo = std::stoi(a), hi = std::stoi(b);
            const bool interior_spine = lo % 2 == 1 && hi == lo + 2 && lo >= 3 && hi <= 2 * m - 1;
            if (interior_spine) continue;
            INFO("m=" << m << " edge " << a << "," << b);
            CHECK(are_isomorphic(apply_gcds2(g, a, b), gen_chain(m - 1)).has_value());
        }
    }
}

TEST_CASE("gcds2 at the spine edge of an interior triangle yields a complete graph, not a chain") {
    const Graph after = apply_gcds2(gen_chain(3), "3", "5");
    CHECK(after.labels() == std::vector<Label>{"1", "2", "4", "6", "7"});
    CHECK(after.edge_count() == 10);
    CHECK_FALSE(are_isomorphic(after, gen_chain(2)).has_value());
}
