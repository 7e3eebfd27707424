#include "cdsgame/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "cdsgame/errors.hpp"
#include "cdsgame/families.hpp"
#include "cdsgame/overlap.hpp"
#include "cdsgame/pile.hpp"
#include "cdsgame/serialize.hpp"
#include "cdsgame/suites.hpp"

namespace cds {

namespace {

struct Options {
    // global
    std::uint64_t seed = 1;
    std::optional<int> max_n;
    std::optional<int> max_m;
    std::string cache_path;
    bool pretty = false;
    int threads = 1;

    // per command
    std::string perm;
    std::string move;
    std::string graph;
    std::string other_graph;
    std::string edge;
    std::string favorable;
    std::string other_favorable;
    std::string first = "ONE";
    std::string human = "ONE";
    std::string game = "gcds";
    std::string suite;
    std::string file;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> chain;
    std::optional<int> samples;
    bool brute = false;
};

class Session {
  public:
    Session(Options& o, std::istream& in, std::ostream& out, std::ostream& err) : o_(o), in_(in), out_(out), err_(err) {}

    void emit(const json& doc) const { out_ << (o_.pretty ? doc.dump(2) : doc.dump()) << '\n'; }

    Permutation perm() const {
        if (o_.perm.empty()) throw ArgumentError("--perm is required");
        return parse_permutation(o_.perm);
    }

    Graph graph_from(const std::string& path) const {
        if (path.empty()) throw ArgumentError("--graph is required");
        if (path == "-") {
            std::stringstream buf;
            buf << in_.rdbuf();
            return parse_graph(buf.str());
        }
        return load_graph_file(path);
    }

    // The graph from --graph, or the chain from --chain.
    Graph graph() const {
        if (o_.chain) return gen_chain(*o_.chain);
        return graph_from(o_.graph);
    }

    std::vector<Label> favorable_labels() const {
        if (o_.favorable.empty() && o_.chain) return gen_favorable(*o_.chain);
        return parse_label_list(o_.favorable);
    }

    Edge edge() const {
        const auto parts = parse_label_list(o_.edge);
        if (parts.size() != 2) throw ArgumentError("--edge takes two vertex labels, e.g. 1,2");
        return {parts[0], parts[1]};
    }

    Move move() const {
        const auto codes = parse_label_list(o_.move);
        if (codes.size() != 2) throw ArgumentError("--move takes two pointer codes, e.g. 3,6");
        const auto set = parse_code_list(o_.move);
        if (set.size() != 2) throw ArgumentError("--move needs two distinct pointer codes");
        return Move(*set.begin(), *set.rbegin());
    }

    SolveOptions solve_options() {
        SolveOptions opts;
        if (o_.max_n) {
            opts.max_n = *o_.max_n;
            opts.max_vertices = std::max(opts.max_vertices, *o_.max_n);
        }
        opts.cache = cache();
        return opts;
    }

    SolveCache* cache() {
        if (o_.cache_path.empty()) return nullptr;
        if (!cache_) {
            cache_.emplace();
            if (std::filesystem::exists(o_.cache_path)) cache_->load_file(o_.cache_path);
        }
        return &*cache_;
    }

    void save_cache() {
        if (cache_) cache_->save_file(o_.cache_path);
    }

    Options& o_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::optional<SolveCache> cache_;
};

// ------------------------------------------------------------------ perm

int perm_apply(Session& s) {
    const auto p = s.perm();
    const auto m = s.move();
    const auto c = cds_case(p, m.first, m.second);
    s.emit({{"perm", to_json(apply_cds(p, m))}, {"case", static_cast<int>(c)}});
    return kExitOk;
}

int perm_moves(Session& s) {
    json moves = json::array();
    for (const auto& m : legal_moves(s.perm())) moves.push_back(to_json(m));
    s.emit({{"moves", moves}});
    return kExitOk;
}

int perm_pile(Session& s) {
    const auto walk = strategic_pile(s.perm());
    const std::set<Pointer> sorted(walk.begin(), walk.end());
    s.emit({{"pile", to_json(sorted)}, {"walk", to_json(walk)}});
    return kExitOk;
}

int perm_sortable(Session& s) {
    const auto p = s.perm();
    json doc = {{"sortable", is_sortable(p)}, {"pile_size", strategic_pile(p).size()}};
    if (s.o_.brute) doc["search"] = sortable_bruteforce(p, s.o_.max_n.value_or(kDefaultOracleBound));
    s.emit(doc);
    return kExitOk;
}

int perm_fixedpoints(Session& s) {
    if (s.o_.n) {
        json list = json::array();
        for (const auto& f : fixed_points(*s.o_.n)) {
            const auto code = fixed_point_code(f);
            list.push_back({{"perm", to_json(f)}, {"code", code ? json(code->code) : json(nullptr)}});
        }
        s.emit({{"fixed_points", list}});
        return kExitOk;
    }
    const auto reach = achievable_fixed_points(s.perm(), s.o_.max_n.value_or(kDefaultOracleBound));
    s.emit({{"codes", to_json(reach.codes)}, {"identity", reach.identity}});
    return kExitOk;
}

// ------------------------------------------------------------------ graph

int graph_gcds(Session& s, bool second) {
    const Graph g = s.graph();
    const auto [x, y] = s.edge();
    const auto ml = masterlist(g, x, y);
    const Graph h = second ? apply_gcds2(g, x, y) : apply_gcds(g, x, y);
    s.emit({{"graph", graph_to_json(h)}, {"masterlist", to_json(ml)}});
    return kExitOk;
}

int graph_iso(Session& s) {
    const Graph g1 = s.graph();
    const Graph g2 = s.graph_from(s.o_.other_graph);
    std::optional<VertexMap> map;
    if (s.o_.favorable.empty() && s.o_.other_favorable.empty())
        map = are_isomorphic(g1, g2);
    else
        map = positions_isomorphic(Position(g1, s.favorable_labels()), Position(g2, parse_label_list(s.o_.other_favorable)));
    s.emit({{"isomorphic", map.has_value()}, {"mapping", map ? to_json(*map) : json(nullptr)}});
    return kExitOk;
}

// ------------------------------------------------------------------ gen

int gen_cmd(Session& s, const std::string& what) {
    auto need = [](const std::optional<int>& v, const char* flag) {
        if (!v) throw ArgumentError(std::string(flag) + " is required");
        return *v;
    };
    if (what == "chain") {
        s.emit(graph_to_json(gen_chain(need(s.o_.m, "--m"))));
    } else if (what == "favorable") {
        s.emit({{"favorable", gen_favorable(need(s.o_.m, "--m"))}});
    } else if (what == "alpha") {
        s.emit({{"perm", to_json(gen_alpha(need(s.o_.n, "--n")))}});
    } else {
        const auto t = tight_instance(need(s.o_.n, "--n"));
        s.emit({{"perm", to_json(t.alpha)},
                {"favorable", to_json(t.favorable)},
                {"chain_index", t.chain_index},
                {"isomorphism", to_json(t.chain_to_overlap)}});
    }
    return kExitOk;
}

// ------------------------------------------------------------------ solve

int solve_cmd(Session& s, const std::string& what) {
    auto opts = s.solve_options();
    json doc;
    if (what == "cds") {
        doc = to_json(CdsSolver(opts).solve(s.perm(), parse_code_list(s.o_.favorable), parse_player(s.o_.first)));
    } else {
        const Position pos(s.graph(), s.favorable_labels());
        if (what == "gcds") {
            doc = to_json(GcdsSolver(opts).solve(pos, parse_player(s.o_.first)));
        } else {
            const auto r = np_status(pos, opts);
            doc = {{"status", to_string(r.status)},
                   {"winner_one_first", to_string(r.winner_one_first)},
                   {"winner_two_first", to_string(r.winner_two_first)}};
        }
    }
    s.save_cache();
    s.emit(doc);
    return kExitOk;
}

// ------------------------------------------------------------------ verify

int verify_cmd(Session& s) {
    SuiteLimits limits;
    if (s.o_.max_n) limits.max_n = *s.o_.max_n;
    if (s.o_.max_m) {
        limits.max_m = *s.o_.max_m;
        limits.collapse_max_m = *s.o_.max_m;
    }
    if (s.o_.samples) limits.samples = *s.o_.samples;
    if (s.o_.n) limits.tight_max_n = *s.o_.n;
    limits.seed = s.o_.seed;
    limits.threads = s.o_.threads;
    limits.cache = s.cache();

    std::vector<std::string> names;
    if (s.o_.suite == "all")
        names = suite_names();
    else
        names.push_back(s.o_.suite);

    bool ok = true;
    json results = json::array();
    json timing = json::object();
    for (const auto& name : names) {
        const auto r = verify_suite(name, limits);
        ok = ok && r.passed();
        json doc = to_json(r);
        timing[name] = doc["timing"];
        if (names.size() > 1) doc.erase("timing");
        results.push_back(std::move(doc));
    }
    s.save_cache();
    if (names.size() == 1)
        s.emit(results[0]);
    else
        s.emit({{"passed", ok}, {"suites", results}, {"timing", timing}});
    return ok ? kExitOk : kExitVerificationFailed;
}

// ------------------------------------------------------------------ play

// One side is typed in, the other is played by the solver. The engine checks
// after each of its moves that a won position stayed won.
template <class State, class MoveT>
struct PlayDriver {
    std::function<bool(const State&)> terminal;
    std::function<Player(const State&)> evaluate;
    std::function<SolveReport<MoveT>(const State&, Player)> solve;
    std::function<std::optional<MoveT>(const State&, const std::string&)> parse_move;
    std::function<State(const State&, const MoveT&)> apply;
    std::function<json(const MoveT&)> move_json;
    std::function<json(const State&)> state_json;
};

template <class State, class MoveT>
json play_loop(const PlayDriver<State, MoveT>& d, State state, Player human, Player first, std::istream& in,
               std::ostream& err) {
    json history = json::array();
    Player mover = first;
    bool abandoned = false;
    while (!d.terminal(state)) {
        MoveT chosen;
        if (mover == human) {
            err << "position: " << d.state_json(state).dump() << "\n" << to_string(mover) << " to move> " << std::flush;
            std::string line;
            if (!std::getline(in, line)) {
                abandoned = true;
                break;
            }
            const auto mv = d.parse_move(state, line);
            if (!mv) {
                err << "not a legal move: '" << line << "'\n";
                continue;
            }
            chosen = *mv;
        } else {
            const auto report = d.solve(state, mover);
            chosen = report.principal_variation.front();
            const State next = d.apply(state, chosen);
            if (report.winner == mover && !d.terminal(next) && d.solve(next, opponent(mover)).winner != mover)
                throw std::logic_error("engine gave away a won position");
            if (report.winner == mover && d.terminal(next) && d.evaluate(next) != mover)
                throw std::logic_error("engine gave away a won position");
            err << to_string(mover) << " (engine) plays " << d.move_json(chosen).dump() << "\n";
        }
        history.push_back({{"player", to_string(mover)},
                           {"by", mover == human ? "human" : "engine"},
                           {"move", d.move_json(chosen)}});
        state = d.apply(state, chosen);
        mover = opponent(mover);
    }
    json doc = {{"moves", history}, {"final", d.state_json(state)}, {"finished", !abandoned}};
    doc["winner"] = abandoned ? json(nullptr) : json(to_string(d.evaluate(state)));
    return doc;
}

int play_cmd(Session& s) {
    const Player human = parse_player(s.o_.human);
    const Player first = parse_player(s.o_.first);
    auto opts = s.solve_options();
    json doc;
    if (s.o_.game == "cds") {
        const auto fav = parse_code_list(s.o_.favorable);
        auto solver = std::make_shared<CdsSolver>(opts);
        PlayDriver<Permutation, Move> d;
        d.terminal = [](const Permutation& p) { return is_fixed_point(p); };
        d.evaluate = [fav](const Permutation& p) { return cds_terminal_winner(p, fav); };
        d.solve = [solver, fav](const Permutation& p, Player who) { return solver->solve(p, fav, who); };
        d.parse_move = [](const Permutation& p, const std::string& line) -> std::optional<Move> {
            std::istringstream is(line);
            int a = 0;
            int b = 0;
            if (!(is >> a >> b) || a == b || a < 1 || b < 1 || a >= p.size() || b >= p.size()) return std::nullopt;
            if (!interlocks(p, Pointer(a), Pointer(b))) return std::nullopt;
            return Move(Pointer(a), Pointer(b));
        };
        d.apply = [](const Permutation& p, const Move& m) { return apply_cds(p, m); };
        d.move_json = [](const Move& m) { return to_json(m); };
        d.state_json = [](const Permutation& p) { return to_json(p); };
        doc = play_loop(d, s.perm(), human, first, s.in_, s.err_);
    } else if (s.o_.game == "gcds") {
        const auto fav = s.favorable_labels();
        const Position start(s.graph(), fav);
        PlayDriver<Graph, GcdsMove> d;
        d.terminal = [](const Graph& g) { return g.is_edgeless(); };
        d.evaluate = [fav](const Graph& g) { return gcds_terminal_winner(g, fav); };
        d.solve = [opts, fav](const Graph& g, Player who) {
            std::vector<Label> present;
            for (const auto& f : fav)
                if (g.has_vertex(f)) present.push_back(f);
            return GcdsSolver(opts).solve(Position(g, present), who);
        };
        d.parse_move = [](const Graph& g, const std::string& line) -> std::optional<GcdsMove> {
            std::istringstream is(line);
            std::string a;
            std::string b;
            if (!(is >> a >> b) || !g.has_vertex(a) || !g.has_vertex(b) || !g.has_edge(a, b)) return std::nullopt;
            return GcdsMove(a, b);
        };
        d.apply = [](const Graph& g, const GcdsMove& m) { return apply_gcds2(g, m.first, m.second); };
        d.move_json = [](const GcdsMove& m) { return json::array({m.first, m.second}); };
        d.state_json = [](const Graph& g) { return graph_to_json(g); };
        doc = play_loop(d, start.graph, human, first, s.in_, s.err_);
    } else {
        throw ArgumentError("--game must be gcds or cds");
    }
    s.save_cache();
    s.emit(doc);
    return kExitOk;
}

// ------------------------------------------------------------------ cache

int cache_cmd(Session& s, const std::string& what) {
    if (s.o_.cache_path.empty()) throw ArgumentError("--cache <file> is required");
    SolveCache* cache = s.cache();
    if (what == "export") {
        std::ostringstream text;
        cache->save(text);
        std::istringstream lines(text.str());
        std::string line;
        std::getline(lines, line);
        json entries = json::object();
        while (std::getline(lines, line)) {
            const auto tab = line.find('\t');
            entries[line.substr(0, tab)] = line.substr(tab + 1);
        }
        s.emit({{"format", std::string(SolveCache::kHeader)}, {"entries", entries}});
        return kExitOk;
    }
    if (s.o_.file.empty()) throw ArgumentError("--file is required");
    std::ifstream in(s.o_.file);
    if (!in) throw ParseError("cannot read '" + s.o_.file + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("cache import: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") || !doc["entries"].is_object())
        throw ParseError("cache import: expected an object with \"entries\"");
    std::string text = std::string(SolveCache::kHeader) + "\n";
    for (const auto& [key, who] : doc["entries"].items()) {
        if (!who.is_string()) throw ParseError("cache import: winner for '" + key + "' must be a string");
        text += key + "\t" + who.get<std::string>() + "\n";
    }
    std::istringstream merged(text);
    const auto before = cache->size();
    cache->load(merged);
    s.save_cache();
    s.emit({{"imported", doc["entries"].size()}, {"added", cache->size() - before}, {"entries", cache->size()}});
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Context-directed swap games: permutations, overlap graphs and exact solvers", "cdsgame"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--seed", o.seed, "Seed for randomized suites");
    app.add_option("--max-n", o.max_n, "Size bound for exhaustive work");
    app.add_option("--max-m", o.max_m, "Chain index bound for chain suites");
    app.add_option("--cache", o.cache_path, "Persistent solve cache file");
    app.add_flag("--pretty", o.pretty, "Indent the JSON output");
    app.add_option("--threads", o.threads, "Workers for batch suites")->check(CLI::PositiveNumber);

    auto* perm = app.add_subcommand("perm", "Permutation operations")->require_subcommand(1);
    auto* p_apply = perm->add_subcommand("apply", "Apply cds to an interlocking pointer pair");
    auto* p_moves = perm->add_subcommand("moves", "List interlocking pointer pairs");
    auto* p_pile = perm->add_subcommand("pile", "Strategic pile");
    auto* p_overlap = perm->add_subcommand("overlap", "Overlap graph");
    auto* p_sortable = perm->add_subcommand("sortable", "Whether cds moves can reach the identity");
    auto* p_fixed = perm->add_subcommand("fixedpoints", "Reachable fixed points, or the fixed points of S_n with --n");
    for (auto* c : {p_apply, p_moves, p_pile, p_overlap, p_sortable, p_fixed})
        c->add_option("--perm", o.perm, "Whitespace-separated entries, e.g. \"3 1 4 2 5\"");
    p_apply->add_option("--move", o.move, "Two pointer codes, e.g. 3,6")->required();
    p_sortable->add_flag("--brute", o.brute, "Also decide by exhaustive search");
    p_fixed->add_option("--n", o.n, "List the n fixed points of S_n");

    auto* graph = app.add_subcommand("graph", "Graph operations")->require_subcommand(1);
    auto* g_gcds = graph->add_subcommand("gcds", "Apply gcds at an edge");
    auto* g_gcds2 = graph->add_subcommand("gcds2", "Apply gcds2 at an edge");
    auto* g_iso = graph->add_subcommand("iso", "Isomorphism test");
    for (auto* c : {g_gcds, g_gcds2, g_iso}) {
        c->add_option("--graph", o.graph, "Graph JSON file, '-' for stdin");
        c->add_option("--chain", o.chain, "Use the chain of this many triangles instead of --graph");
    }
    for (auto* c : {g_gcds, g_gcds2}) c->add_option("--edge", o.edge, "Edge endpoints, e.g. 1,2")->required();
    g_iso->add_option("--other", o.other_graph, "Second graph JSON file")->required();
    g_iso->add_option("--favorable", o.favorable, "Favourable labels of the first graph");
    g_iso->add_option("--other-favorable", o.other_favorable, "Favourable labels of the second graph");

    auto* gen = app.add_subcommand("gen", "Family generators")->require_subcommand(1);
    std::string gen_what;
    for (const char* name : {"chain", "favorable", "alpha", "tight"}) {
        auto* c = gen->add_subcommand(name, std::string("Generate ") + name);
        if (std::string(name) == "chain" || std::string(name) == "favorable")
            c->add_option("--m", o.m, "Number of triangles");
        else
            c->add_option("--n", o.n, "Permutation length, a multiple of 4 above 4");
        c->callback([&gen_what, name] { gen_what = name; });
    }

    auto* solve = app.add_subcommand("solve", "Perfect-play solvers")->require_subcommand(1);
    std::string solve_what;
    for (const char* name : {"gcds", "cds", "np"}) {
        auto* c = solve->add_subcommand(name, std::string("Solve the ") + name + " game");
        if (std::string(name) == "cds") {
            c->add_option("--perm", o.perm, "Starting permutation");
        } else {
            c->add_option("--graph", o.graph, "Graph JSON file, '-' for stdin");
            c->add_option("--chain", o.chain, "Chain of this many triangles with its standard favourable set");
        }
        c->add_option("--favorable", o.favorable, "ONE's favourable set, comma-separated");
        if (std::string(name) != "np") c->add_option("--first", o.first, "Player to move: ONE or TWO");
        c->callback([&solve_what, name] { solve_what = name; });
    }

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name or 'all'")->required();
    verify->add_option("--samples", o.samples, "Random commutation samples");
    verify->add_option("--tight-max-n", o.n, "Largest tight instance");

    auto* play = app.add_subcommand("play", "Play against the solver; moves are read one per line");
    play->add_option("--game", o.game, "gcds or cds");
    play->add_option("--perm", o.perm, "Starting permutation (cds)");
    play->add_option("--graph", o.graph, "Graph JSON file (gcds)");
    play->add_option("--chain", o.chain, "Chain position (gcds)");
    play->add_option("--favorable", o.favorable, "ONE's favourable set");
    play->add_option("--human", o.human, "Side played by the human");
    play->add_option("--first", o.first, "Player to move first");

    auto* cache = app.add_subcommand("cache", "Solve cache maintenance")->require_subcommand(1);
    auto* c_export = cache->add_subcommand("export", "Print the cache file as JSON");
    auto* c_import = cache->add_subcommand("import", "Merge a JSON export into the cache file");
    c_import->add_option("--file", o.file, "JSON produced by cache export")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    Session s(o, in, out, err);
    try {
        if (p_apply->parsed()) return perm_apply(s);
        if (p_moves->parsed()) return perm_moves(s);
        if (p_pile->parsed()) return perm_pile(s);
        if (p_overlap->parsed()) {
            s.emit(graph_to_json(overlap_graph(s.perm())));
            return kExitOk;
        }
        if (p_sortable->parsed()) return perm_sortable(s);
        if (p_fixed->parsed()) return perm_fixedpoints(s);
        if (g_gcds->parsed()) return graph_gcds(s, false);
        if (g_gcds2->parsed()) return graph_gcds(s, true);
        if (g_iso->parsed()) return graph_iso(s);
        if (gen->parsed()) return gen_cmd(s, gen_what);
        if (solve->parsed()) return solve_cmd(s, solve_what);
        if (verify->parsed()) return verify_cmd(s);
        if (play->parsed()) return play_cmd(s);
        if (c_export->parsed()) return cache_cmd(s, "export");
        if (c_import->parsed()) return cache_cmd(s, "import");
        err << "error: no command given\n";
        return kExitInvalidInput;
    } catch (const BoundExceeded& e) {
        err << "refused: " << e.what() << '\n';
        return kExitBoundRefused;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::invalid_argument& e) { // ArgumentError
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::out_of_range& e) { // RangeError
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NotApplicable& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const NotAnEdge& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const StateError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "internal check failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
}

} // namespace cds
