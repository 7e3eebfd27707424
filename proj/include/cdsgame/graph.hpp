#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cds {

/// Total order on vertex labels: decimal labels numerically and ahead of all
/// others, the rest by plain string comparison.
bool label_less(std::string_view a, std::string_view b);

struct LabelLess {
    bool operator()(std::string_view a, std::string_view b) const { return label_less(a, b); }
};

using Label = std::string;
using Edge = std::pair<Label, Label>;

/// Finite simple undirected graph with string-labelled vertices.
///
/// Vertices are kept in label_less order, so vertex indices, edge lists and
/// move orderings are deterministic. Labels must be non-empty and free of
/// whitespace and the separators `,`, `|` and `-` used by the cache key format.
class Graph {
  public:
    Graph() = default;
    /// Throws ArgumentError on a self-loop, an unknown endpoint, a duplicate vertex or edge,
    /// or an unrepresentable label.
    Graph(std::vector<Label> vertices, const std::vector<Edge>& edges);

    [[nodiscard]] int order() const { return static_cast<int>(labels_.size()); }
    [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
    [[nodiscard]] const Label& label(int i) const { return labels_[i]; }
    [[nodiscard]] std::optional<int> index_of(std::string_view label) const;
    [[nodiscard]] bool has_vertex(std::string_view label) const { return index_of(label).has_value(); }

    [[nodiscard]] bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i) * order() + j] != 0; }
    [[nodiscard]] bool has_edge(std::string_view a, std::string_view b) const;
    void set_adjacent(int i, int j, bool on);

    [[nodiscard]] int degree(int i) const;
    [[nodiscard]] std::vector<int> neighbors(int i) const;
    [[nodiscard]] int edge_count() const;
    /// Index pairs (i < j) in lexicographic order.
    [[nodiscard]] std::vector<std::pair<int, int>> edge_indices() const;
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] bool is_edgeless() const { return edge_count() == 0; }

    /// Subgraph induced on the vertices with keep[i] set.
    [[nodiscard]] Graph induced(const std::vector<bool>& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.labels_ == b.labels_ && a.adj_ == b.adj_; }

  private:
    std::vector<Label> labels_;
    std::vector<std::uint8_t> adj_;
};

void validate_label(std::string_view label);

/// Builds a graph whose labels are decimal renderings of `vertices`.
Graph graph_from_ints(const std::vector<int>& vertices, const std::vector<std::pair<int, int>>& edges);

/// Neighbours of x other than y, and of y other than x. Each column is sorted by label_less.
struct MasterList {
    Label x;
    Label y;
    std::vector<Label> column_x;
    std::vector<Label> column_y;

    /// Distinct vertices across both columns.
    [[nodiscard]] std::vector<Label> members() const;
    [[nodiscard]] int occurrences(std::string_view v) const;
};

/// Throws NotAnEdge unless {x, y} is an edge of g.
MasterList masterlist(const Graph& g, std::string_view x, std::string_view y);

/// gcds by the master-list rules: x and y become isolated; a pair of other
/// vertices keeps its status unless both are listed, in which case it is
/// toggled when they share no column or when their total occurrence count is odd.
Graph apply_gcds(const Graph& g, std::string_view x, std::string_view y);

struct VertexClasses {
    std::vector<Label> x_only;
    std::vector<Label> y_only;
    std::vector<Label> both;
    std::vector<Label> outside;
};

VertexClasses vertex_classes(const Graph& g, std::string_view x, std::string_view y);

/// gcds by neighbourhood classes: toggle every pair of listed vertices whose
/// (in N(x), in N(y)) flags differ.
Graph apply_gcds_via_classes(const Graph& g, std::string_view x, std::string_view y);

/// gcds followed by deletion of x, y and of every master-list vertex left
/// isolated, unless it is the list's only member.
Graph apply_gcds2(const Graph& g, std::string_view x, std::string_view y);

/// Bit-packed graph over an index space of at most 64 vertices fixed by a root
/// graph; `alive` marks the vertices still present.
struct PackedGraph {
    std::uint64_t alive = 0;
    std::vector<std::uint64_t> rows;

    [[nodiscard]] bool edgeless() const;
    [[nodiscard]] std::uint64_t non_isolated() const;

    friend bool operator==(const PackedGraph&, const PackedGraph&) = default;
};

inline constexpr int kPackedLimit = 64;

/// Throws BoundExceeded when g has more than kPackedLimit vertices.
PackedGraph pack(const Graph& g);
/// Reconstructs the labelled graph; `labels` is the index space of the root.
Graph unpack(const PackedGraph& pg, std::span<const Label> labels);

/// gcds2 on the packed form; x and y must be adjacent alive vertices.
PackedGraph packed_gcds2(const PackedGraph& pg, int x, int y);

using VertexMap = std::map<Label, Label, LabelLess>;

inline constexpr int kIsomorphismBound = 32;

/// Some isomorphism g1 -> g2, or nullopt. Throws BoundExceeded above `max_vertices`.
std::optional<VertexMap> are_isomorphic(const Graph& g1, const Graph& g2, int max_vertices = kIsomorphismBound);

/// A graph with favourable vertex set; `favorable` is sorted by label_less.
struct Position {
    Graph graph;
    std::vector<Label> favorable;

    /// Throws ArgumentError when a favourable label is not a vertex.
    Position(Graph g, std::vector<Label> fav);

    [[nodiscard]] bool is_favorable(std::string_view v) const;
};

/// An isomorphism of the graphs that maps the favourable set onto the favourable set.
std::optional<VertexMap> positions_isomorphic(const Position& p1, const Position& p2,
                                              int max_vertices = kIsomorphismBound);

/// Checks that `map` is a bijection g1 -> g2 preserving adjacency in both directions.
bool verify_isomorphism(const Graph& g1, const Graph& g2, const VertexMap& map);

/// The image of g under a vertex relabelling (`map` must cover every vertex).
Graph relabel(const Graph& g, const VertexMap& map);

} // namespace cds
