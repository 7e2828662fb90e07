#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace udgcut {

using VertexId = std::uint32_t;

/// Unordered vertex pair stored canonically (u < v).
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;

    bool has(VertexId w) const { return u == w || v == w; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Canonical edge from two endpoints. Throws InputError on a loop.
Edge make_edge(VertexId a, VertexId b);

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted, so iteration order and every derived
/// output is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Throws InputError on loops, duplicates or out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    /// All edges, sorted.
    std::vector<Edge> edges() const;

    const std::vector<VertexId>& neighbors(VertexId v) const;
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }
    bool has_edge(VertexId a, VertexId b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

    VertexId add_vertex();
    void add_edge(VertexId a, VertexId b);
    void remove_edge(VertexId a, VertexId b);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

using Side = std::vector<std::uint8_t>;

/// A two-sided partition together with its size.
struct Cut {
    Side side;
    std::size_t size = 0;
};

/// Number of edges whose endpoints lie on different sides.
/// Throws InputError if `side` does not cover every vertex or holds a
/// value other than 0/1.
std::size_t cut_size(const Graph& g, std::span<const std::uint8_t> side);

bool is_bisection(std::span<const std::uint8_t> side);

/// Replace e = uv by the path u-a-b-v with two fresh vertices a, b appended.
Graph subdivide_edge_twice(const Graph& g, Edge e);

/// g followed by h with h's ids shifted by n(g).
Graph disjoint_union(const Graph& g, const Graph& h);

std::size_t max_degree(const Graph& g);

/// Text format: first line "n m", then m lines "u v", 0-indexed.
Graph parse_graph_text(std::string_view text);
std::string format_graph_text(const Graph& g);

}  // namespace udgcut
