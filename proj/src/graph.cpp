#include "cdsgame/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "cdsgame/errors.hpp"

namespace cds {

namespace {

bool is_decimal(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
    while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
    return s;
}

std::vector<Label> sorted_labels(std::vector<Label> v) {
    std::sort(v.begin(), v.end(), LabelLess{});
    return v;
}

int require_vertex(const Graph& g, std::string_view v) {
    auto i = g.index_of(v);
    if (!i) throw ArgumentError("unknown vertex '" + std::string(v) + "'");
    return *i;
}

std::pair<int, int> require_edge(const Graph& g, std::string_view x, std::string_view y) {
    auto xi = g.index_of(x);
    auto yi = g.index_of(y);
    if (!xi || !yi || *xi == *yi || !g.adjacent(*xi, *yi))
        throw NotAnEdge("{" + std::string(x) + "," + std::string(y) + "} is not an edge");
    return {*xi, *yi};
}

} // namespace

bool label_less(std::string_view a, std::string_view b) {
    const bool da = is_decimal(a), db = is_decimal(b);
    if (da != db) return da;
    if (da) {
        auto sa = strip_zeros(a), sb = strip_zeros(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

void validate_label(std::string_view label) {
    if (label.empty()) throw ArgumentError("empty vertex label");
    for (char c : label) {
        if (c == ',' || c == '|' || c == '-' || static_cast<unsigned char>(c) <= ' ')
            throw ArgumentError("vertex label '" + std::string(label) + "' contains a reserved character");
    }
}

Graph::Graph(std::vector<Label> vertices, const std::vector<Edge>& edges) : labels_(sorted_labels(std::move(vertices))) {
    for (const auto& l : labels_) validate_label(l);
    for (std::size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i] == labels_[i - 1]) throw ArgumentError("duplicate vertex '" + labels_[i] + "'");
    adj_.assign(labels_.size() * labels_.size(), 0);
    for (const auto& [a, b] : edges) {
        const int i = require_vertex(*this, a);
        const int j = require_vertex(*this, b);
        if (i == j) throw ArgumentError("self-loop at '" + a + "'");
        if (adjacent(i, j)) throw ArgumentError("duplicate edge {" + a + "," + b + "}");
        set_adjacent(i, j, true);
    }
}

std::optional<int> Graph::index_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label, LabelLess{});
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<int>(it - labels_.begin());
}

bool Graph::has_edge(std::string_view a, std::string_view b) const {
    auto i = index_of(a);
    auto j = index_of(b);
    return i && j && *i != *j && adjacent(*i, *j);
}

void Graph::set_adjacent(int i, int j, bool on) {
    const auto n = static_cast<std::size_t>(order());
    adj_[i * n + j] = on;
    adj_[j * n + i] = on;
}

int Graph::degree(int i) const {
    int d = 0;
    for (int j = 0; j < order(); ++j) d += adjacent(i, j);
    return d;
}

std::vector<int> Graph::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < order(); ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

int Graph::edge_count() const {
    return static_cast<int>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1}) / 2);
}

std::vector<std::pair<int, int>> Graph::edge_indices() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < order(); ++i)
        for (int j = i + 1; j < order(); ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (auto [i, j] : edge_indices()) out.emplace_back(labels_[i], labels_[j]);
    return out;
}

Graph Graph::induced(const std::vector<bool>& keep) const {
    std::vector<Label> kept;
    for (int i = 0; i < order(); ++i)
        if (keep[i]) kept.push_back(labels_[i]);
    std::vector<Edge> e;
    for (auto [i, j] : edge_indices())
        if (keep[i] && keep[j]) e.emplace_back(labels_[i], labels_[j]);
    return Graph(std::move(kept), e);
}

Graph graph_from_ints(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges) {
    std::vector<Label> v;
    for (int x : vertices) v.push_back(std::to_string(x));
    std::vector<Edge> e;
    for (auto [a, b] : edges) e.emplace_back(std::to_string(a), std::to_string(b));
    return Graph(std::move(v), e);
}

std::vector<Label> MasterList::members() const {
    std::vector<Label> out = column_x;
    out.insert(out.end(), column_y.begin(), column_y.end());
    std::sort(out.begin(), out.end(), LabelLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int MasterList::occurrences(std::string_view v) const {
    return static_cast<int>(std::count(column_x.begin(), column_x.end(), v) +
                            std::count(column_y.begin(), column_y.end(), v));
}

MasterList masterlist(const Graph& g, std::string_view x, std::string_view y) {
    auto [xi, yi] = require_edge(g, x, y);
    MasterList ml{std::string(x), std::string(y), {}, {}};
    for (int v : g.neighbors(xi))
        if (v != yi) ml.column_x.push_back(g.label(v));
    for (int v : g.neighbors(yi))
        if (v != xi) ml.column_y.push_back(g.label(v));
    return ml;
}

Graph apply_gcds(const Graph& g, std::string_view x, std::string_view y) {
    const MasterList ml = masterlist(g, x, y);
    const int xi = *g.index_of(x), yi = *g.index_of(y);
    const int n = g.order();

    std::vector<bool> in_x(n, false), in_y(n, false);
    for (const auto& l : ml.column_x) in_x[*g.index_of(l)] = true;
    for (const auto& l : ml.column_y) in_y[*g.index_of(l)] = true;

    Graph out = g;
    for (int v = 0; v < n; ++v) {
        out.set_adjacent(xi, v, false);
        out.set_adjacent(yi, v, false);
    }
    for (int p = 0; p < n; ++p) {
        if (p == xi || p == yi) continue;
        for (int q = p + 1; q < n; ++q) {
            if (q == xi || q == yi) continue;
            const int occ_p = in_x[p] + in_y[p];
            const int occ_q = in_x[q] + in_y[q];
            if (occ_p == 0 || occ_q == 0) continue; // case a
            const bool same_column = (in_x[p] && in_x[q]) || (in_y[p] && in_y[q]);
            const bool toggle = !same_column || (occ_p + occ_q) % 2 == 1; // b.1 / b.3
            if (toggle) out.set_adjacent(p, q, !g.adjacent(p, q));
        }
    }
    return out;
}

VertexClasses vertex_classes(const Graph& g, std::string_view x, std::string_view y) {
    auto [xi, yi] = require_edge(g, x, y);
    VertexClasses c;
    for (int v = 0; v < g.order(); ++v) {
        if (v == xi || v == yi) continue;
        const bool nx = g.adjacent(v, xi), ny = g.adjacent(v, yi);
        auto& bucket = nx && ny ? c.both : nx ? c.x_only : ny ? c.y_only : c.outside;
        bucket.push_back(g.label(v));
    }
    return c;
}

Graph apply_gcds_via_classes(const Graph& g, std::string_view x, std::string_view y) {
    auto [xi, yi] = require_edge(g, x, y);
    const int n = g.order();
    // flag bit 0: adjacent to x; bit 1: adjacent to y
    std::vector<int> flags(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == xi || v == yi) continue;
        flags[v] = (g.adjacent(v, xi) ? 1 : 0) | (g.adjacent(v, yi) ? 2 : 0);
    }
    Graph out = g;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (flags[p] && flags[q] && flags[p] != flags[q]) out.set_adjacent(p, q, !g.adjacent(p, q));
    for (int v = 0; v < n; ++v) {
        out.set_adjacent(xi, v, false);
        out.set_adjacent(yi, v, false);
    }
    return out;
}

Graph apply_gcds2(const Graph& g, std::string_view x, std::string_view y) {
    const MasterList ml = masterlist(g, x, y);
    const Graph after = apply_gcds(g, x, y);
    const auto members = ml.members();
    std::vector<bool> keep(after.order(), true);
    keep[*after.index_of(x)] = false;
    keep[*after.index_of(y)] = false;
    if (members.size() > 1) {
        for (const auto& m : members) {
            const int i = *after.index_of(m);
            if (after.degree(i) == 0) keep[i] = false;
        }
    }
    return after.induced(keep);
}

bool PackedGraph::edgeless() const {
    std::uint64_t live = alive;
    while (live) {
        const int i = std::countr_zero(live);
        live &= live - 1;
        if (rows[i]) return false;
    }
    return true;
}

std::uint64_t PackedGraph::non_isolated() const {
    std::uint64_t out = 0;
    std::uint64_t live = alive;
    while (live) {
        const int i = std::countr_zero(live);
        live &= live - 1;
        if (rows[i]) out |= std::uint64_t{1} << i;
    }
    return out;
}

PackedGraph pack(const Graph& g) {
    if (g.order() > kPackedLimit)
        throw BoundExceeded("graph has " + std::to_string(g.order()) + " vertices; packed form holds at most 64");
    PackedGraph pg;
    pg.rows.assign(g.order(), 0);
    for (int i = 0; i < g.order(); ++i) {
        pg.alive |= std::uint64_t{1} << i;
        for (int j = 0; j < g.order(); ++j)
            if (g.adjacent(i, j)) pg.rows[i] |= std::uint64_t{1} << j;
    }
    return pg;
}

Graph unpack(const PackedGraph& pg, std::span<const Label> labels) {
    std::vector<Label> v;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!(pg.alive >> i & 1)) continue;
        v.push_back(labels[i]);
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (pg.rows[i] >> j & 1) e.emplace_back(labels[i], labels[j]);
    }
    return Graph(std::move(v), e);
}

PackedGraph packed_gcds2(const PackedGraph& pg, int x, int y) {
    const std::uint64_t bx = std::uint64_t{1} << x, by = std::uint64_t{1} << y;
    const std::uint64_t nx = pg.rows[x] & ~by;
    const std::uint64_t ny = pg.rows[y] & ~bx;
    const std::uint64_t x_only = nx & ~ny, y_only = ny & ~nx, both = nx & ny;
    const std::uint64_t listed = nx | ny;

    PackedGraph out = pg;
    auto toggle_class = [&](std::uint64_t cls, std::uint64_t against) {
        while (cls) {
            const int v = std::countr_zero(cls);
            cls &= cls - 1;
            out.rows[v] ^= against;
        }
    };
    toggle_class(x_only, y_only | both);
    toggle_class(y_only, x_only | both);
    toggle_class(both, x_only | y_only);

    std::uint64_t live = out.alive;
    while (live) {
        const int v = std::countr_zero(live);
        live &= live - 1;
        out.rows[v] &= ~(bx | by);
    }
    out.rows[x] = 0;
    out.rows[y] = 0;
    out.alive &= ~(bx | by);
    if (std::popcount(listed) > 1) {
        std::uint64_t m = listed;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (out.rows[v] == 0) out.alive &= ~(std::uint64_t{1} << v);
        }
    }
    return out;
}

Position::Position(Graph g, std::vector<Label> fav) : graph(std::move(g)), favorable(sorted_labels(std::move(fav))) {
    favorable.erase(std::unique(favorable.begin(), favorable.end()), favorable.end());
    for (const auto& f : favorable)
        if (!graph.has_vertex(f)) throw ArgumentError("favorable vertex '" + f + "' is not in the graph");
}

bool Position::is_favorable(std::string_view v) const {
    return std::binary_search(favorable.begin(), favorable.end(), v, LabelLess{});
}

namespace {

// Backtracking search for a colour-preserving isomorphism.
class IsoSearch {
  public:
    IsoSearch(const Graph& a, const Graph& b, std::vector<int> colour_a, std::vector<int> colour_b)
        : a_(a), b_(b), ca_(std::move(colour_a)), cb_(std::move(colour_b)) {}

    std::optional<std::vector<int>> run() {
        const int n = a_.order();
        if (n != b_.order() || a_.edge_count() != b_.edge_count()) return std::nullopt;
        sig_a_ = signatures(a_, ca_);
        sig_b_ = signatures(b_, cb_);
        auto sa = sig_a_, sb = sig_b_;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;

        order_ = search_order();
        map_.assign(n, -1);
        used_.assign(n, false);
        if (!extend(0)) return std::nullopt;
        return map_;
    }

  private:
    using Signature = std::pair<std::pair<int, int>, std::vector<int>>; // (colour, degree), neighbour degrees

    static std::vector<Signature> signatures(const Graph& g, const std::vector<int>& colour) {
        std::vector<Signature> out;
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> nd;
            for (int w : g.neighbors(v)) nd.push_back(g.degree(w));
            std::sort(nd.begin(), nd.end());
            out.push_back({{colour[v], g.degree(v)}, std::move(nd)});
        }
        return out;
    }

    // Highest degree first, then vertices with the most already-ordered neighbours.
    std::vector<int> search_order() const {
        const int n = a_.order();
        std::vector<int> order;
        std::vector<bool> placed(n, false);
        for (int step = 0; step < n; ++step) {
            int best = -1;
            std::pair<int, int> best_score{-1, -1};
            for (int v = 0; v < n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : order) links += a_.adjacent(v, w);
                const std::pair<int, int> score{links, a_.degree(v)};
                if (score > best_score) {
                    best_score = score;
                    best = v;
                }
            }
            placed[best] = true;
            order.push_back(best);
        }
        return order;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        const int u = order_[depth];
        for (int v = 0; v < b_.order(); ++v) {
            if (used_[v] || sig_a_[u] != sig_b_[v]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const int w = order_[k];
                ok = a_.adjacent(u, w) == b_.adjacent(v, map_[w]);
            }
            if (!ok) continue;
            map_[u] = v;
            used_[v] = true;
            if (extend(depth + 1)) return true;
            used_[v] = false;
            map_[u] = -1;
        }
        return false;
    }

    const Graph& a_;
    const Graph& b_;
    std::vector<int> ca_, cb_;
    std::vector<Signature> sig_a_, sig_b_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

std::optional<VertexMap> iso_with_colours(const Graph& g1, const Graph& g2, std::vector<int> c1, std::vector<int> c2,
                                          int max_vertices) {
    if (g1.order() > max_vertices || g2.order() > max_vertices)
        throw BoundExceeded("isomorphism search refused above " + std::to_string(max_vertices) + " vertices");
    IsoSearch search(g1, g2, std::move(c1), std::move(c2));
    auto m = search.run();
    if (!m) return std::nullopt;
    VertexMap out;
    for (int i = 0; i < g1.order(); ++i) out.emplace(g1.label(i), g2.label((*m)[i]));
    if (!verify_isomorphism(g1, g2, out)) throw std::logic_error("isomorphism search returned an invalid mapping");
    return out;
}

} // namespace

std::optional<VertexMap> are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices) {
    return iso_with_colours(g1, g2, std::vector<int>(g1.order(), 0), std::vector<int>(g2.order(), 0), max_vertices);
}

std::optional<VertexMap> positions_isomorphic(const Position& p1, const Position& p2, int max_vertices) {
    if (p1.favorable.size() != p2.favorable.size()) return std::nullopt;
    std::vector<int> c1(p1.graph.order()), c2(p2.graph.order());
    for (int i = 0; i < p1.graph.order(); ++i) c1[i] = p1.is_favorable(p1.graph.label(i));
    for (int i = 0; i < p2.graph.order(); ++i) c2[i] = p2.is_favorable(p2.graph.label(i));
    return iso_with_colours(p1.graph, p2.graph, std::move(c1), std::move(c2), max_vertices);
}

bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map) {
    if (g1.order() != g2.order() || static_cast<int>(map.size()) != g1.order()) return false;
    std::vector<int> image(g1.order());
    std::vector<bool> hit(g2.order(), false);
    for (int i = 0; i < g1.order(); ++i) {
        auto it = map.find(g1.label(i));
        if (it == map.end()) return false;
        auto j = g2.index_of(it->second);
        if (!j || hit[*j]) return false;
        hit[*j] = true;
        image[i] = *j;
    }
    for (int i = 0; i < g1.order(); ++i)
        for (int k = i + 1; k < g1.order(); ++k)
            if (g1.adjacent(i, k) != g2.adjacent(image[i], image[k])) return false;
    return true;
}

Graph relabel(const Graph& g, const VertexMap& map) {
    std::vector<Label> v;
    for (const auto& l : g.labels()) v.push_back(map.at(l));
    std::vector<Edge> e;
    for (const auto& [a, b] : g.edges()) e.emplace_back(map.at(a), map.at(b));
    return Graph(std::move(v), e);
}

} // namespace cds
