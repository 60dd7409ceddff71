#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphtensor {

using Vertex = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    bool is_loop() const noexcept { return u == v; }
    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Half-edge id 2e+s: side 0 sits at edges[e].u, side 1 at edges[e].v.
struct HalfEdge {
    int edge = 0;
    int side = 0;

    int id() const noexcept { return 2 * edge + side; }
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

/// Finite undirected multigraph with loops. Vertices are dense ids 0..n-1;
/// edges keep their insertion order and parallel edges stay distinct.
/// Immutable once built.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }

    /// Number of half-edges at v; a loop contributes two.
    int degree(Vertex v) const { return static_cast<int>(incidence_.at(static_cast<std::size_t>(v)).size()); }

    /// Half-edges at v in increasing id order. Loops appear twice (both sides).
    std::span<const HalfEdge> half_edges(Vertex v) const { return incidence_.at(static_cast<std::size_t>(v)); }

    bool has_loops() const noexcept;
    bool has_multi_edges() const noexcept;
    bool is_simple() const noexcept { return !has_loops() && !has_multi_edges(); }
    int max_degree() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> incidence_;
};

/// Reads the edge-list format: '#' comments, blank lines skipped, header
/// "n <count>", then one "<u> <v>" line per edge.
Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);

/// Writes g in the same format parse_graph reads.
void write_graph(std::ostream& out, const Graph& g);
std::string to_text(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

/// Edge (u, v) becomes (perm[u], perm[v]); edge order is kept.
Graph relabel(const Graph& g, std::span<const int> perm);

/// complete, cycle, path, star (size = number of vertices) and petersen (no size).
Graph make_named(std::string_view name, std::optional<int> size = std::nullopt);

Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_star(int n);
Graph make_petersen();
Graph make_complete_bipartite(int a, int b);

}  // namespace graphtensor
