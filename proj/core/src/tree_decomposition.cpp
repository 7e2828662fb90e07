#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

#include "udgcut/errors.hpp"
#include "udgcut/solvers.hpp"

namespace udgcut {

namespace {

using Key = std::tuple<std::size_t, std::size_t, VertexId>;  // fill, degree, id

bool contains(const std::vector<VertexId>& sorted, VertexId v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) list.erase(it);
}

std::size_t fill_in(const std::vector<std::vector<VertexId>>& adj, VertexId v) {
    const auto& nb = adj[v];
    std::size_t missing = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!contains(adj[nb[i]], nb[j])) ++missing;
    return missing;
}

}  // namespace

long TreeDecomposition::width() const {
    long w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<long>(b.size()) - 1);
    return w;
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
    const std::size_t n = g.vertex_count();
    const std::size_t nb = td.bags.size();
    if (td.tree.size() != nb) return false;
    if (nb == 0) return n == 0;

    std::vector<std::vector<std::size_t>> bags_of(n);
    for (std::size_t b = 0; b < nb; ++b) {
        const auto& bag = td.bags[b];
        if (!std::is_sorted(bag.begin(), bag.end()) || std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            return false;
        for (VertexId v : bag) {
            if (v >= n) return false;
            bags_of[v].push_back(b);
        }
    }

    // The bag graph must be a tree: symmetric, nb - 1 edges, connected.
    std::size_t degree_sum = 0;
    for (std::size_t b = 0; b < nb; ++b)
        for (std::size_t c : td.tree[b]) {
            if (c >= nb || c == b) return false;
            if (std::find(td.tree[c].begin(), td.tree[c].end(), b) == td.tree[c].end()) return false;
            ++degree_sum;
        }
    if (degree_sum != 2 * (nb - 1)) return false;
    {
        std::vector<bool> seen(nb, false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        std::size_t reached = 1;
        while (!q.empty()) {
            const std::size_t b = q.front();
            q.pop();
            for (std::size_t c : td.tree[b])
                if (!seen[c]) {
                    seen[c] = true;
                    ++reached;
                    q.push(c);
                }
        }
        if (reached != nb) return false;
    }

    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (std::size_t b : bags_of[e.u])
            if (contains(td.bags[b], e.v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }

    // Running intersection: bags holding v form a connected subtree.
    std::vector<int> mark(nb, -1);
    for (VertexId v = 0; v < n; ++v) {
        const auto& holders = bags_of[v];
        if (holders.empty()) return false;
        for (std::size_t b : holders) mark[b] = static_cast<int>(v);
        std::vector<std::size_t> stack{holders.front()};
        std::size_t reached = 0;
        mark[holders.front()] = -2;
        while (!stack.empty()) {
            const std::size_t b = stack.back();
            stack.pop_back();
            ++reached;
            for (std::size_t c : td.tree[b])
                if (mark[c] == static_cast<int>(v)) {
                    mark[c] = -2;
                    stack.push_back(c);
                }
        }
        if (reached != holders.size()) return false;
        for (std::size_t b : holders) mark[b] = -1;
    }
    return true;
}

TreeDecomposition greedy_tree_decomposition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (VertexId v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    std::vector<Key> key(n);
    std::set<Key> queue;
    auto refresh = [&](VertexId v) {
        queue.erase(key[v]);
        key[v] = {fill_in(adj, v), adj[v].size(), v};
        queue.insert(key[v]);
    };
    for (VertexId v = 0; v < n; ++v) {
        key[v] = {fill_in(adj, v), adj[v].size(), v};
        queue.insert(key[v]);
    }

    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> position(n, kNone);
    TreeDecomposition td;
    std::vector<std::vector<VertexId>> later;  // neighbours at elimination time
    while (!queue.empty()) {
        const VertexId v = std::get<2>(*queue.begin());
        queue.erase(queue.begin());
        position[v] = td.bags.size();

        const std::vector<VertexId> nb = adj[v];
        std::vector<VertexId> bag = nb;
        insert_sorted(bag, v);
        td.bags.push_back(std::move(bag));
        later.push_back(nb);

        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                insert_sorted(adj[nb[i]], nb[j]);
                insert_sorted(adj[nb[j]], nb[i]);
            }
        for (VertexId w : nb) erase_sorted(adj[w], v);
        adj[v].clear();

        std::set<VertexId> touched(nb.begin(), nb.end());
        for (VertexId w : nb)
            for (VertexId x : adj[w]) touched.insert(x);
        for (VertexId w : touched) refresh(w);
    }

    td.tree.assign(td.bags.size(), {});
    std::size_t previous_root = kNone;
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        std::size_t parent = kNone;
        for (VertexId w : later[b]) parent = std::min(parent, position[w]);
        if (parent == kNone) {
            // Last bag of a component; chain components together.
            if (previous_root != kNone) parent = previous_root;
            previous_root = b;
        }
        if (parent != kNone) {
            td.tree[b].push_back(parent);
            td.tree[parent].push_back(b);
        }
    }
    return td;
}

}  // namespace udgcut
