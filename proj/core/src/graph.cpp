#include "udgcut/graph.hpp"

#include <algorithm>
#include <sstream>

#include "udgcut/errors.hpp"

namespace udgcut {

Edge make_edge(VertexId a, VertexId b) {
    if (a == b) throw InputError("loop at vertex " + std::to_string(a));
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t n) : adj_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) g.add_edge(e.u, e.v);
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < adj_.size(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

void Graph::check_vertex(VertexId v) const {
    if (v >= adj_.size())
        throw InputError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(adj_.size()) + ")");
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a >= adj_.size() || b >= adj_.size()) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

VertexId Graph::add_vertex() {
    adj_.emplace_back();
    return static_cast<VertexId>(adj_.size() - 1);
}

void Graph::add_edge(VertexId a, VertexId b) {
    check_vertex(a);
    check_vertex(b);
    const Edge e = make_edge(a, b);
    if (has_edge(a, b))
        throw InputError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    auto insert_sorted = [](std::vector<VertexId>& list, VertexId w) {
        list.insert(std::lower_bound(list.begin(), list.end(), w), w);
    };
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
    ++edge_count_;
}

void Graph::remove_edge(VertexId a, VertexId b) {
    if (!has_edge(a, b))
        throw InputError("edge " + std::to_string(a) + " " + std::to_string(b) + " not in graph");
    auto erase_sorted = [](std::vector<VertexId>& list, VertexId w) {
        list.erase(std::lower_bound(list.begin(), list.end(), w));
    };
    erase_sorted(adj_[a], b);
    erase_sorted(adj_[b], a);
    --edge_count_;
}

std::size_t cut_size(const Graph& g, std::span<const std::uint8_t> side) {
    if (side.size() != g.vertex_count())
        throw InputError("side assignment covers " + std::to_string(side.size()) + " of " +
                         std::to_string(g.vertex_count()) + " vertices");
    for (std::uint8_t s : side)
        if (s > 1) throw InputError("side values must be 0 or 1");
    std::size_t count = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v && side[u] != side[v]) ++count;
    return count;
}

bool is_bisection(std::span<const std::uint8_t> side) {
    auto ones = std::count(side.begin(), side.end(), std::uint8_t{1});
    return 2 * static_cast<std::size_t>(ones) == side.size();
}

Graph subdivide_edge_twice(const Graph& g, Edge e) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e))
        throw InputError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " not in graph");
    Graph out = g;
    out.remove_edge(e.u, e.v);
    const VertexId a = out.add_vertex();
    const VertexId b = out.add_vertex();
    out.add_edge(e.u, a);
    out.add_edge(a, b);
    out.add_edge(b, e.v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const auto shift = static_cast<VertexId>(g.vertex_count());
    Graph out = g;
    for (std::size_t i = 0; i < h.vertex_count(); ++i) out.add_vertex();
    for (const Edge& e : h.edges()) out.add_edge(e.u + shift, e.v + shift);
    return out;
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

Graph parse_graph_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw InputError("graph text: expected header 'n m'");
    if (n > 50'000'000) throw InputError("graph text: vertex count too large");
    Graph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = -1;
        long long v = -1;
        if (!(in >> u >> v))
            throw InputError("graph text: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("graph text: edge " + std::to_string(u) + " " + std::to_string(v) + " out of range");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    std::string extra;
    if (in >> extra) throw InputError("graph text: trailing content '" + extra + "'");
    return g;
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace udgcut
