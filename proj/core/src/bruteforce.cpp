#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>
#include <vector>

#include "udgcut/errors.hpp"
#include "udgcut/solvers.hpp"

namespace udgcut {

namespace {

using Mask = std::uint64_t;

// Side vectors compare lexicographically by vertex 0, 1, ...; bit v of a
// mask is side[v].
bool lex_less(Mask a, Mask b) {
    const Mask d = a ^ b;
    if (d == 0) return false;
    return (a & (d & (~d + 1))) == 0;
}

struct Best {
    std::size_t size = 0;
    Mask mask = 0;
    bool set = false;

    void offer(std::size_t s, Mask m) {
        if (!set || s > size || (s == size && lex_less(m, mask))) {
            size = s;
            mask = m;
            set = true;
        }
    }
    void merge(const Best& o) {
        if (o.set) offer(o.size, o.mask);
    }
};

struct Adjacency {
    std::vector<Mask> adj;
    std::vector<int> deg;

    explicit Adjacency(const Graph& g) : adj(g.vertex_count(), 0), deg(g.vertex_count(), 0) {
        for (const Edge& e : g.edges()) {
            adj[e.u] |= Mask{1} << e.v;
            adj[e.v] |= Mask{1} << e.u;
        }
        for (std::size_t v = 0; v < adj.size(); ++v) deg[v] = std::popcount(adj[v]);
    }

    std::size_t cut_of(Mask s) const {
        std::size_t c = 0;
        for (std::size_t v = 0; v < adj.size(); ++v)
            if (s >> v & 1) c += static_cast<std::size_t>(std::popcount(adj[v] & ~s));
        return c;
    }
};

Cut to_cut(std::size_t n, const Best& b) {
    Cut c;
    c.size = b.size;
    c.side.resize(n);
    for (std::size_t v = 0; v < n; ++v) c.side[v] = static_cast<std::uint8_t>(b.mask >> v & 1);
    return c;
}

unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

void check_limit(const Graph& g, std::size_t limit) {
    const std::size_t hard = 63;
    if (g.vertex_count() > std::min(limit, hard))
        throw SizeLimitError("brute force is limited to " + std::to_string(std::min(limit, hard)) +
                             " vertices (graph has " + std::to_string(g.vertex_count()) +
                             "); use the treewidth DP solver");
}

}  // namespace

Cut max_cut_bruteforce(const Graph& g, const BruteForceOptions& opts) {
    check_limit(g, opts.limit);
    const std::size_t n = g.vertex_count();
    if (n <= 1) return Cut{Side(n, 0), 0};

    const Adjacency A(g);
    const std::size_t free_bits = n - 1;
    const unsigned threads = resolve_threads(opts.threads);
    // Top `prefix_bits` free vertices are fixed per job; the rest are Gray-enumerated.
    std::size_t prefix_bits = 0;
    while (prefix_bits < free_bits && prefix_bits < 10 && (Mask{1} << prefix_bits) < Mask{threads} * 8) ++prefix_bits;
    const std::size_t low_bits = free_bits - prefix_bits;
    const Mask jobs = Mask{1} << prefix_bits;

    std::atomic<Mask> next{0};
    auto worker = [&](Best& best) {
        for (Mask job = next++; job < jobs; job = next++) {
            Mask s = job << (1 + low_bits);
            std::size_t cut = A.cut_of(s);
            best.offer(cut, s);
            const Mask steps = Mask{1} << low_bits;
            for (Mask i = 1; i < steps; ++i) {
                const std::size_t v = 1 + static_cast<std::size_t>(std::countr_zero(i));
                const bool on_one = s >> v & 1;
                const int crossing = std::popcount(A.adj[v] & (on_one ? ~s : s));
                cut = static_cast<std::size_t>(static_cast<long>(cut) + A.deg[v] - 2 * crossing);
                s ^= Mask{1} << v;
                best.offer(cut, s);
            }
        }
    };

    const unsigned used = static_cast<unsigned>(std::min<Mask>(threads, jobs));
    std::vector<Best> partial(used);
    if (used == 1) {
        worker(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < used; ++t) pool.emplace_back([&, t] { worker(partial[t]); });
    }
    Best best;
    for (const Best& b : partial) best.merge(b);
    return to_cut(n, best);
}

Cut max_bisection_bruteforce(const Graph& g, const BruteForceOptions& opts) {
    const std::size_t n = g.vertex_count();
    if (n % 2 != 0) throw ParityError("bisection needs an even vertex count, got " + std::to_string(n));
    check_limit(g, opts.limit);
    if (n == 0) return Cut{};

    const Adjacency A(g);
    const std::size_t free_bits = n - 1;
    const std::size_t ones = n / 2;
    const Mask limit = Mask{1} << free_bits;
    Best best;
    // Gosper's hack over the free vertices; bit i stands for vertex i + 1.
    for (Mask c = (Mask{1} << ones) - 1; c < limit;) {
        const Mask s = c << 1;
        best.offer(A.cut_of(s), s);
        const Mask low = c & (~c + 1);
        const Mask ripple = c + low;
        c = (((ripple ^ c) >> 2) / low) | ripple;
    }
    return to_cut(n, best);
}

}  // namespace udgcut
