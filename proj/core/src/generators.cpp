#include "udgcut/generators.hpp"

#include <algorithm>

#include "udgcut/errors.hpp"

namespace udgcut::gen {

Graph edgeless(std::size_t n) { return Graph(n); }

Graph complete(std::size_t n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(std::size_t n) {
    Graph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw InputError("cycle needs at least 3 vertices");
    Graph g = path(n);
    g.add_edge(0, static_cast<VertexId>(n - 1));
    return g;
}

Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (VertexId v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
    std::bernoulli_distribution keep(p);
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (keep(rng)) g.add_edge(u, v);
    return g;
}

Graph random_bounded_degree(Rng& rng, std::size_t n, std::size_t max_deg, double p) {
    std::vector<Edge> pairs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::bernoulli_distribution keep(p);
    Graph g(n);
    for (const Edge& e : pairs) {
        if (!keep(rng)) continue;
        if (g.degree(e.u) >= max_deg || g.degree(e.v) >= max_deg) continue;
        g.add_edge(e.u, e.v);
    }
    return g;
}

}  // namespace udgcut::gen
