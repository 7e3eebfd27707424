#include "cdsgame/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "cdsgame/errors.hpp"
#include "cdsgame/families.hpp"
#include "cdsgame/fixtures.hpp"
#include "cdsgame/overlap.hpp"
#include "cdsgame/pile.hpp"

namespace cds {

namespace {

constexpr std::size_t kFailureCap = 25;

// Collects pass/fail outcomes. Callers enumerate instances smallest first, so
// the first recorded failure of each check is its minimal counterexample.
class Recorder {
  public:
    explicit Recorder(SuiteResult& r) : r_(r) {}

    void pass(std::uint64_t count = 1) { r_.cases += count; }

    void check(bool ok, const std::string& what, json input = json::object()) {
        ++r_.cases;
        if (!ok) fail(what, std::move(input));
    }

    // An exception escaping `body` counts as a failure.
    void guard(const std::string& what, json input, const std::function<bool()>& body) {
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            input["exception"] = e.what();
        }
        check(ok, what, std::move(input));
    }

    json& findings() { return r_.findings; }

    void finish() {
        if (total_failures_ > r_.failures.size()) r_.findings["failures_total"] = total_failures_;
    }

  private:
    void fail(const std::string& what, json input) {
        ++total_failures_;
        if (r_.failures.size() < kFailureCap) r_.failures.push_back({what, std::move(input)});
    }

    SuiteResult& r_;
    std::size_t total_failures_ = 0;
};

// Outcome of the checks on one instance, computed on a worker and merged in
// instance order so the output does not depend on scheduling.
struct Batch {
    std::uint64_t passed = 0;
    std::vector<std::pair<std::string, json>> failed;

    void check(bool ok, const char* what, const std::function<json()>& input) {
        if (ok)
            ++passed;
        else
            failed.emplace_back(what, input());
    }
    void merge_into(Recorder& rec) {
        rec.pass(passed);
        for (auto& [what, input] : failed) rec.check(false, what, std::move(input));
    }
};

void fan_out(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
    const auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

json perm_input(const Permutation& p) { return {{"perm", to_json(p)}}; }

json move_input(const Permutation& p, Move m) { return {{"perm", to_json(p)}, {"move", to_json(m)}}; }

std::set<Pointer> as_set(const std::vector<Pointer>& v) { return {v.begin(), v.end()}; }

std::vector<Label> labels_of(const std::set<Pointer>& codes) {
    std::vector<Label> out;
    for (auto c : codes) out.push_back(pointer_label(c));
    return out;
}

std::vector<Label> isolated_labels(const Graph& g) {
    std::vector<Label> out;
    for (int i = 0; i < g.order(); ++i)
        if (g.degree(i) == 0) out.push_back(g.label(i));
    return out;
}

Graph random_graph(std::mt19937_64& rng, int vertices, double density, bool numeric) {
    std::vector<Label> labels;
    for (int i = 0; i < vertices; ++i) labels.push_back(numeric ? std::to_string(i + 1) : "v" + std::to_string(i));
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j)
            if (coin(rng)) edges.emplace_back(labels[i], labels[j]);
    return Graph(labels, edges);
}

// ------------------------------------------------------------------ paper-examples

void suite_paper_examples(Recorder& rec, const SuiteLimits& limits) {
    const Permutation beta = parse_permutation("3 6 5 2 4 8 1 7");
    rec.check(beta == Permutation({3, 6, 5, 2, 4, 8, 1, 7}), "parse worked example", perm_input(beta));
    rec.check(interlocks(beta, Pointer(3), Pointer(6)), "worked example pair interlocks", perm_input(beta));
    rec.check(apply_cds(beta, Pointer(3), Pointer(6)) == Permutation({3, 4, 8, 1, 5, 2, 6, 7}), "cds worked example",
              move_input(beta, Move(Pointer(3), Pointer(6))));

    const CycleGraph cg(beta);
    bool black_ok = true;
    for (auto [from, to] : std::vector<std::pair<int, int>>{{6, 3}, {5, 6}, {2, 5}, {4, 2}, {8, 4}, {1, 8}, {7, 1}, {9, 7}, {3, 0}})
        black_ok = black_ok && cg.black_successor(from) == to;
    rec.check(black_ok, "cycle graph black edges", perm_input(beta));
    const auto dec = alternating_cycles(cg);
    rec.check(dec.cycles.size() == 1 && dec.cycles[0].dotted.size() == 9, "single alternating cycle through every edge",
              perm_input(beta));
    std::set<Pointer> all_codes;
    for (int k = 1; k <= 7; ++k) all_codes.insert(Pointer(k));
    rec.check(as_set(strategic_pile(beta)) == all_codes, "full strategic pile", perm_input(beta));
    rec.check(!is_sortable(beta), "full pile is not sortable", perm_input(beta));

    const Permutation small = parse_permutation("3 1 4 2 5");
    const auto [o1, o2] = pointer_occurrences(small, Pointer(1));
    rec.check(o1 == Occurrence{2, Side::HeadRight} && o2 == Occurrence{4, Side::TailLeft}, "pointer occurrences",
              perm_input(small));
    rec.check(!interlocks(small, Pointer(1), Pointer(2)) && interlocks(small, Pointer(1), Pointer(3)), "interlock table",
              perm_input(small));
    rec.check(overlap_graph(small) == graph_from_ints({1, 2, 3, 4}, {{1, 3}, {2, 4}, {1, 4}}), "overlap graph edges",
              perm_input(small));

    const Permutation rot = parse_permutation("4 1 2 3");
    rec.check(legal_moves(rot).empty() && is_identity_or_rotation(rot), "rotation is a fixed point", perm_input(rot));

    const Graph g6 = fixtures::seven_vertex_before();
    const auto ml6 = masterlist(g6, "v1", "v2");
    rec.check(ml6.column_x == std::vector<Label>{"v3", "v4", "v7"} && ml6.column_y == std::vector<Label>{"v3", "v4", "v6"},
              "seven-vertex masterlist", graph_to_json(g6));
    const auto cls = vertex_classes(g6, "v1", "v2");
    rec.check(cls.x_only == std::vector<Label>{"v7"} && cls.y_only == std::vector<Label>{"v6"} &&
                  cls.both == std::vector<Label>{"v3", "v4"} && cls.outside == std::vector<Label>{"v5"},
              "seven-vertex classes", graph_to_json(g6));
    rec.check(apply_gcds(g6, "v1", "v2") == fixtures::seven_vertex_after(), "seven-vertex gcds", graph_to_json(g6));
    rec.check(apply_gcds_via_classes(g6, "v1", "v2") == fixtures::seven_vertex_after(), "seven-vertex gcds via classes",
              graph_to_json(g6));

    const Graph g7 = fixtures::nine_vertex_before();
    const auto ml7 = masterlist(g7, "v2", "v7");
    rec.check(ml7.column_x == std::vector<Label>{"v1", "v3", "v6", "v9"} &&
                  ml7.column_y == std::vector<Label>{"v1", "v5", "v6", "v8"},
              "nine-vertex masterlist", graph_to_json(g7));
    const Graph after7 = apply_gcds(g7, "v2", "v7");
    rec.check(after7 == fixtures::nine_vertex_after(), "nine-vertex gcds", graph_to_json(g7));
    std::vector<Label> fresh;
    const auto before_isolated = isolated_labels(g7);
    for (const auto& v : isolated_labels(after7))
        if (std::find(before_isolated.begin(), before_isolated.end(), v) == before_isolated.end()) fresh.push_back(v);
    rec.check(fresh == std::vector<Label>{"v2", "v5", "v7", "v9"}, "nine-vertex gcds creates four isolated vertices",
              graph_to_json(after7));

    const auto states = fixtures::sample_game_states();
    const auto moves = fixtures::sample_game_moves();
    Graph cur = fixtures::sample_game_graph();
    for (std::size_t k = 0; k < moves.size(); ++k) {
        cur = apply_gcds2(cur, moves[k].first, moves[k].second);
        rec.check(cur == states[k + 1], "sample game state after move " + std::to_string(k + 1),
                  {{"move", {moves[k].first, moves[k].second}}});
    }
    rec.check(gcds_terminal_winner(cur, fixtures::sample_game_favorable()) == Player::One,
              "sample game ends in a win for ONE", graph_to_json(cur));

    rec.check(gen_chain(1) == graph_from_ints({1, 2, 3}, {{1, 2}, {1, 3}, {2, 3}}), "first chain is a triangle");
    rec.check(gen_chain(3).order() == 7 && gen_chain(3).edge_count() == 9, "three-triangle chain size");
    rec.check(gen_chain(2) == graph_from_ints({1, 2, 3, 4, 5}, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}),
              "two-triangle chain");
    rec.check(gen_favorable(2) == std::vector<Label>{"2", "4"}, "favourable set of the two-triangle chain");

    SolveOptions opts;
    opts.cache = limits.cache;
    rec.guard("two-triangle chain: first mover ONE loses", {{"m", 2}},
              [&] { return solve_gcds(chain_position(2), Player::One, opts).winner == Player::Two; });
    rec.guard("one-triangle chain is an N-position", {{"m", 1}},
              [&] { return np_status(chain_position(1), opts).status == NpStatus::N; });
    rec.guard("two-triangle chain is a P-position", {{"m", 2}},
              [&] { return np_status(chain_position(2), opts).status == NpStatus::P; });
    rec.guard("three-triangle chain collapses to two triangles", {{"m", 3}}, [] {
        const Graph g3 = gen_chain(3);
        const auto edges = g3.edges();
        return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return are_isomorphic(apply_gcds2(g3, e.first, e.second), gen_chain(2)).has_value();
        });
    });

    rec.check(gen_alpha(12) == Permutation({5, 7, 6, 9, 8, 11, 10, 3, 2, 4, 12, 1}), "alpha for n = 12");
    rec.guard("tight instance arithmetic", {{"n", 8}}, [] {
        const auto t = tight_instance(8);
        return strategic_pile(t.alpha).size() == 7 && t.favorable.size() == 2;
    });
    rec.guard("tight instance is a win for ONE", {{"n", 8}}, [&] {
        const auto t = tight_instance(8);
        return solve_cds(t.alpha, t.favorable, Player::One, opts).winner == Player::One;
    });
    rec.check(bound_prediction(7, 1).verdict == Verdict::Two, "bound (7,1) predicts TWO");
    rec.check(bound_prediction(7, 2).verdict == Verdict::Undetermined, "bound (7,2) is undetermined");
}

// ------------------------------------------------------------------ commutation

void suite_commutation(Recorder& rec, const SuiteLimits& limits) {
    for (int n = 1; n <= limits.max_n; ++n) {
        const auto perms = all_permutations(n);
        std::vector<Batch> out(perms.size());
        fan_out(perms.size(), limits.threads, [&](std::size_t i) {
            for (const auto& m : legal_moves(perms[i]))
                out[i].check(check_commutation(perms[i], m.first, m.second), "overlap graph commutes with gcds",
                             [&] { return move_input(perms[i], m); });
        });
        for (auto& b : out) b.merge_into(rec);
    }

    std::mt19937_64 rng(limits.seed);
    int done = 0;
    while (done < limits.samples) {
        const int n = 8 + done % 3;
        std::vector<int> e(static_cast<std::size_t>(n));
        std::iota(e.begin(), e.end(), 1);
        std::shuffle(e.begin(), e.end(), rng);
        const Permutation p(e);
        const auto moves = legal_moves(p);
        if (moves.empty()) continue;
        const Move m = moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
        rec.check(check_commutation(p, m.first, m.second), "overlap graph commutes with gcds (sampled)", move_input(p, m));
        ++done;
    }

    // The masterlist rules, the class-toggle rule and the packed gcds2 agree.
    std::mt19937_64 grng(limits.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int k = 0; k < limits.random_graphs; ++k) {
        const int order = 2 + k % 11;
        const Graph g = random_graph(grng, order, 0.2 + 0.2 * ((k / 11) % 4), k % 2 == 0);
        const PackedGraph pg = pack(g);
        for (const auto& [i, j] : g.edge_indices()) {
            const auto& a = g.label(i);
            const auto& b = g.label(j);
            const Graph via_list = apply_gcds(g, a, b);
            const Graph via_classes = apply_gcds_via_classes(g, a, b);
            const Graph packed = unpack(packed_gcds2(pg, i, j), g.labels());
            const bool ok = via_list == via_classes && packed == apply_gcds2(g, a, b);
            rec.check(ok, "masterlist, class and packed gcds agree", {{"graph", graph_to_json(g)}, {"edge", {a, b}}});
        }
    }
}

// ------------------------------------------------------------------ pile-lemma

bool decomposition_ok(const Permutation& p) {
    const CycleGraph cg(p);
    const int n = p.size();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& c : alternating_cycles(cg).cycles) {
        for (std::size_t k = 0; k < c.dotted.size(); ++k) {
            const int i = c.dotted[k];
            if (i < 0 || i > n) return false;
            ++seen[static_cast<std::size_t>(i)];
            if (cg.black_successor(i + 1) != c.dotted[(k + 1) % c.dotted.size()]) return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

struct PileOutcome {
    Batch batch;
    std::uint64_t additions = 0;
    json first_addition;
};

PileOutcome pile_checks(const Permutation& p, bool all_items) {
    PileOutcome out;
    auto& b = out.batch;
    const auto pile = strategic_pile(p);
    const auto pile_set = as_set(pile);
    b.check(decomposition_ok(p), "alternating cycles partition the edges", [&] { return perm_input(p); });

    const auto moves = legal_moves(p);
    std::vector<std::set<Pointer>> after;
    for (const auto& m : moves) {
        after.push_back(as_set(strategic_pile(apply_cds(p, m))));
        int removed = 0;
        for (auto x : pile_set) removed += after.back().contains(x) ? 0 : 1;
        b.check(removed <= 2, "a move removes at most two pile elements", [&] { return move_input(p, m); });
        for (auto x : after.back())
            if (!pile_set.contains(x) && out.additions++ == 0) out.first_addition = move_input(p, m);
    }
    if (!all_items) return out;

    b.check(pile.empty() == sortable_bruteforce(p, p.size()), "empty pile iff sortable by search",
            [&] { return perm_input(p); });
    if (pile.size() >= 2) {
        for (auto x : pile) {
            const bool removable =
                std::any_of(after.begin(), after.end(), [&](const std::set<Pointer>& s) { return !s.contains(x); });
            b.check(removable, "every pile element is removable by some move",
                    [&] { return json{{"perm", to_json(p)}, {"pointer", x.code}}; });
        }
    }
    const auto reach = achievable_fixed_points(p, p.size());
    if (pile.empty())
        b.check(reach.identity && reach.codes.empty(), "sortable permutations reach only the identity",
                [&] { return perm_input(p); });
    else
        b.check(!reach.identity && reach.codes == pile_set, "achievable fixed points are the pile",
                [&] { return perm_input(p); });
    return out;
}

void suite_pile_lemma(Recorder& rec, const SuiteLimits& limits) {
    std::uint64_t additions = 0;
    json first_addition = nullptr;
    for (int n = 1; n <= limits.max_n + 1; ++n) {
        const auto perms = all_permutations(n);
        std::vector<PileOutcome> out(perms.size());
        fan_out(perms.size(), limits.threads, [&](std::size_t i) { out[i] = pile_checks(perms[i], n <= limits.max_n); });
        for (auto& o : out) {
            o.batch.merge_into(rec);
            if (o.additions && additions == 0) first_addition = o.first_addition;
            additions += o.additions;
        }
    }
    rec.findings()["moves_adding_pile_elements"] = additions;
    rec.findings()["first_move_adding_pile_elements"] = first_addition;
}

// ------------------------------------------------------------------ chain-collapse

void suite_chain_collapse(Recorder& rec, const SuiteLimits& limits) {
    for (int m = 1; m <= std::max(20, limits.collapse_max_m); ++m) {
        const Graph g = gen_chain(m);
        int deg4 = 0;
        int deg2 = 0;
        for (int i = 0; i < g.order(); ++i) {
            deg4 += g.degree(i) == 4 ? 1 : 0;
            deg2 += g.degree(i) == 2 ? 1 : 0;
        }
        rec.check(g.order() == 2 * m + 1 && g.edge_count() == 3 * m && deg4 == m - 1 && deg2 == m + 2,
                  "chain size and degree profile", {{"m", m}});
        rec.check(static_cast<int>(gen_favorable(m).size()) == 1 + (2 * m + 1) / 4, "favourable set size", {{"m", m}});
    }
    json tally = json::object();
    for (int m = 2; m <= limits.collapse_max_m; ++m) {
        const Graph g = gen_chain(m);
        const Graph smaller = gen_chain(m - 1);
        int collapsing = 0;
        for (const auto& [a, b] : g.edges()) {
            rec.guard("gcds2 of a chain is the next smaller chain", {{"m", m}, {"edge", {a, b}}}, [&] {
                const Graph h = apply_gcds2(g, a, b);
                const auto map = are_isomorphic(h, smaller);
                const bool ok = map && verify_isomorphism(h, smaller, *map);
                collapsing += ok ? 1 : 0;
                return ok;
            });
        }
        tally[std::to_string(m)] = {{"edges", g.edge_count()}, {"collapsing", collapsing}};
    }
    rec.findings()["collapse_by_m"] = tally;
}

// ------------------------------------------------------------------ np-classification

void suite_np_classification(Recorder& rec, const SuiteLimits& limits) {
    SolveOptions opts;
    opts.cache = limits.cache;
    json table = json::object();
    for (int m = 1; m <= limits.max_m; ++m) {
        rec.guard("chain position classification", {{"m", m}}, [&] {
            const auto r = np_status(chain_position(m), opts);
            table[std::to_string(m)] = to_string(r.status);
            return r.status == expected_np(m);
        });
    }
    rec.findings()["classification"] = table;
}

// ------------------------------------------------------------------ bounds

struct BoundsOutcome {
    Batch batch;
    std::uint64_t instances = 0;
    std::uint64_t decided = 0;
    std::uint64_t partial_pile_mismatches = 0;
    json first_partial_mismatch;
};

BoundsOutcome bounds_checks(const Permutation& p) {
    BoundsOutcome out;
    const auto pile = strategic_pile(p);
    if (pile.empty()) return out;
    const int psize = static_cast<int>(pile.size());
    const bool full = psize == p.size() - 1;
    CdsSolver solver;
    const Graph overlap = overlap_graph(p);
    for (std::uint32_t mask = 0; mask < (1u << psize); ++mask) {
        std::set<Pointer> fav;
        for (int k = 0; k < psize; ++k)
            if (mask >> k & 1u) fav.insert(pile[static_cast<std::size_t>(k)]);
        auto input = [&] { return json{{"perm", to_json(p)}, {"favorable", to_json(fav)}}; };
        ++out.instances;
        const Player cds_winner = solver.solve(p, fav, Player::One).winner;
        const auto pred = bound_prediction(psize, static_cast<int>(fav.size()));
        if (pred.verdict != Verdict::Undetermined) {
            ++out.decided;
            const Player predicted = pred.verdict == Verdict::One ? Player::One : Player::Two;
            out.batch.check(predicted == cds_winner, "bound prediction agrees with the solver", input);
        }
        const Player gcds_winner = solve_gcds(Position(overlap, labels_of(fav)), Player::One).winner;
        if (full)
            out.batch.check(gcds_winner == cds_winner, "graph game on the overlap graph agrees (full pile)", input);
        else if (gcds_winner != cds_winner && out.partial_pile_mismatches++ == 0)
            out.first_partial_mismatch = input();
    }
    return out;
}

void suite_bounds(Recorder& rec, const SuiteLimits& limits) {
    json per_n = json::object();
    for (int n = 2; n <= limits.max_n; ++n) {
        const auto perms = all_permutations(n);
        std::vector<BoundsOutcome> out(perms.size());
        fan_out(perms.size(), limits.threads, [&](std::size_t i) { out[i] = bounds_checks(perms[i]); });
        std::uint64_t instances = 0;
        std::uint64_t decided = 0;
        std::uint64_t mismatches = 0;
        json first = nullptr;
        for (auto& o : out) {
            o.batch.merge_into(rec);
            instances += o.instances;
            decided += o.decided;
            if (o.partial_pile_mismatches && mismatches == 0) first = o.first_partial_mismatch;
            mismatches += o.partial_pile_mismatches;
        }
        per_n[std::to_string(n)] = {{"instances", instances},
                                    {"decided_by_bounds", decided},
                                    {"partial_pile_cds_gcds_mismatches", mismatches},
                                    {"first_partial_pile_mismatch", first}};
    }
    rec.findings()["per_n"] = per_n;

    const auto audit = audit_bound_rules(64);
    for (const auto& [p, a] : audit.contradictions)
        rec.check(false, "bound rules contradict each other", {{"pile", p}, {"favorable", a}});
    rec.pass(static_cast<std::uint64_t>(audit.pairs_checked) - audit.contradictions.size());
    json gaps = json::array();
    for (const auto& [p, a] : audit.refinement_gaps) gaps.push_back({p, a});
    rec.findings()["audit"] = {{"pairs_checked", audit.pairs_checked}, {"refinement_gaps", gaps}};
}

// ------------------------------------------------------------------ tight

void tight_case(Recorder& rec, int n, const SolveOptions& opts, json& summary) {
    const json input = {{"n", n}};
    const TightInstance t = tight_instance(n);
    const auto pile = as_set(strategic_pile(t.alpha));
    const int psize = static_cast<int>(pile.size());
    const int bsize = static_cast<int>(t.favorable.size());
    rec.check(psize == n - 1 && psize % 4 == 3, "full pile with size 3 mod 4", input);
    rec.check(bsize == (psize - 3) / 4 + 1, "favourable set has the optimal size", input);
    rec.check(std::includes(pile.begin(), pile.end(), t.favorable.begin(), t.favorable.end()),
              "favourable set lies in the pile", input);

    const Position overlap_pos(overlap_graph(t.alpha), labels_of(t.favorable));
    rec.check(positions_isomorphic(chain_position(t.chain_index), overlap_pos).has_value(),
              "overlap position is isomorphic to the chain position", input);

    CdsSolver cds_solver(opts);
    const auto cds = cds_solver.solve(t.alpha, t.favorable, Player::One);
    const auto gcds = solve_gcds(overlap_pos, Player::One, opts);
    rec.check(cds.winner == Player::One, "ONE wins the permutation game", input);
    rec.check(gcds.winner == Player::One, "ONE wins the graph game", input);
    rec.check(bound_prediction(psize, bsize).verdict != Verdict::Two, "bounds do not predict TWO", input);
    rec.check(bound_prediction(psize, bsize - 1).verdict == Verdict::Two, "bounds predict TWO with one pointer fewer",
              input);

    json drops = json::array();
    for (auto b : t.favorable) {
        auto fewer = t.favorable;
        fewer.erase(b);
        const json dinput = {{"n", n}, {"dropped", b.code}};
        const auto c = cds_solver.solve(t.alpha, fewer, Player::One).winner;
        const auto g = solve_gcds(Position(overlap_graph(t.alpha), labels_of(fewer)), Player::One, opts).winner;
        rec.check(c == Player::Two, "dropping a favourable pointer hands the permutation game to TWO", dinput);
        rec.check(g == Player::Two, "dropping a favourable pointer hands the graph game to TWO", dinput);
        drops.push_back({{"dropped", b.code}, {"cds", to_string(c)}, {"gcds", to_string(g)}});
    }
    summary[std::to_string(n)] = {{"alpha", to_json(t.alpha)},
                                  {"favorable", to_json(t.favorable)},
                                  {"pile_size", psize},
                                  {"cds_nodes", cds.nodes_expanded},
                                  {"gcds_nodes", gcds.nodes_expanded},
                                  {"drops", drops}};
}

void suite_tight(Recorder& rec, const SuiteLimits& limits) {
    for (int n = 8; n <= 20; n += 4) {
        rec.guard("alpha is not a fixed point", {{"n", n}}, [&] { return !is_fixed_point(gen_alpha(n)); });
        if (n <= 16)
            rec.guard("overlap graph of alpha is a chain", {{"n", n}}, [&] {
                return are_isomorphic(overlap_graph(gen_alpha(n)), gen_chain((n - 2) / 2)).has_value();
            });
    }

    SolveOptions opts;
    opts.max_n = std::max(kDefaultCdsBound, limits.tight_max_n);
    opts.max_vertices = std::max(kDefaultGcdsVertexBound, limits.tight_max_n);
    opts.cache = limits.cache;
    json summary = json::object();
    for (int n = 8; n <= limits.tight_max_n; n += 4) {
        try {
            tight_case(rec, n, opts, summary);
        } catch (const BoundExceeded&) {
            throw;
        } catch (const std::exception& e) {
            rec.check(false, "tight instance", {{"n", n}, {"exception", e.what()}});
        }
    }
    rec.findings()["instances"] = summary;
}

// ------------------------------------------------------------------ formats

template <class E>
bool throws_as(const std::function<void()>& f) {
    try {
        f();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

bool cache_load_fails(const std::string& text) {
    return throws_as<ParseError>([&] {
        SolveCache c;
        std::istringstream in(text);
        c.load(in);
    });
}

void suite_formats(Recorder& rec, const SuiteLimits& limits) {
    std::vector<Graph> graphs = {Graph(), fixtures::seven_vertex_before(), fixtures::nine_vertex_after(),
                                 fixtures::sample_game_graph()};
    for (int m = 1; m <= 8; ++m) graphs.push_back(gen_chain(m));
    std::mt19937_64 rng(limits.seed);
    for (int k = 0; k < limits.random_graphs; ++k) graphs.push_back(random_graph(rng, k % 14, 0.4, k % 3 != 0));
    for (int k = 0; k < 20; ++k) {
        std::vector<int> e(static_cast<std::size_t>(2 + k % 9));
        std::iota(e.begin(), e.end(), 1);
        std::shuffle(e.begin(), e.end(), rng);
        graphs.push_back(overlap_graph(Permutation(e)));
    }
    for (const auto& g : graphs)
        rec.guard("graph JSON round trip", graph_to_json(g), [&] { return parse_graph(render_graph(g)) == g; });

    rec.check(throws_as<ParseError>([] { parse_graph(R"({"vertices":["1"],"edges":[["1","2"]]})"); }),
              "unknown edge endpoint is a parse error");
    rec.check(throws_as<ParseError>([] { parse_graph(R"({"vertices":[1],"edges":[]})"); }),
              "non-string label is a parse error");
    rec.check(throws_as<ParseError>([] { parse_graph("not json"); }), "invalid JSON is a parse error");
    rec.check(throws_as<ParseError>([] { parse_permutation("1 1"); }), "duplicate entry is a parse error");
    rec.check(throws_as<ParseError>([] { parse_permutation("1 x"); }), "non-integer entry is a parse error");
    rec.check(throws_as<ParseError>([] { parse_permutation(""); }), "empty permutation is a parse error");
    rec.check(throws_as<ParseError>([] { parse_code_list("1,,2"); }), "empty list item is a parse error");
    rec.check(parse_code_list("").empty(), "empty favourable list is legal");

    SolveCache cache;
    SolveOptions opts;
    opts.cache = &cache;
    for (int m = 1; m <= 3; ++m) (void)np_status(chain_position(m), opts);
    (void)solve_cds(gen_alpha(8), tight_instance(8).favorable, Player::One, opts);
    std::ostringstream first;
    cache.save(first);
    SolveCache reloaded;
    std::istringstream in(first.str());
    reloaded.load(in);
    std::ostringstream second;
    reloaded.save(second);
    rec.check(cache.size() > 0 && first.str() == second.str(), "cache file round trip", {{"entries", cache.size()}});
    rec.check(cache_load_fails("GCDSCACHE 1\nG|1,2|1-2||1\tMAYBE\n"), "unknown winner in the cache is a parse error");
    rec.check(cache_load_fails("GCDSCACHE 2\n"), "unknown cache header is a parse error");
    rec.check(cache_load_fails("GCDSCACHE 1\nX|1|\tONE\n"), "malformed cache key is a parse error");

    SuiteLimits small = limits;
    small.max_n = 4;
    small.samples = 50;
    small.random_graphs = 20;
    small.cache = nullptr;
    auto stable = [&] {
        json doc = to_json(verify_suite("commutation", small));
        doc.erase("timing");
        return doc.dump();
    };
    rec.check(stable() == stable(), "suite output is deterministic for a fixed seed");
}

using SuiteFn = void (*)(Recorder&, const SuiteLimits&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"paper-examples", suite_paper_examples},
        {"commutation", suite_commutation},
        {"pile-lemma", suite_pile_lemma},
        {"chain-collapse", suite_chain_collapse},
        {"np-classification", suite_np_classification},
        {"bounds", suite_bounds},
        {"tight", suite_tight},
        {"formats", suite_formats},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& entry : registry()) out.push_back(entry.first);
        return out;
    }();
    return names;
}

SuiteResult verify_suite(std::string_view name, const SuiteLimits& limits) {
    const auto& suites = registry();
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
    if (it == suites.end()) throw ArgumentError("unknown suite '" + std::string(name) + "'");
    SuiteResult result;
    result.name = it->first;
    Recorder rec(result);
    const auto start = std::chrono::steady_clock::now();
    try {
        it->second(rec, limits);
    } catch (const BoundExceeded&) {
        throw;
    } catch (const std::exception& e) {
        rec.check(false, "suite aborted", {{"exception", e.what()}});
    }
    rec.finish();
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

json to_json(const SuiteResult& r) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back({{"check", f.check}, {"input", f.input}});
    return {{"suite", r.name},
            {"cases", r.cases},
            {"passed", r.passed()},
            {"failures", std::move(failures)},
            {"findings", r.findings},
            {"timing", {{"elapsed_seconds", r.elapsed_seconds}}}};
}

} // namespace cds
