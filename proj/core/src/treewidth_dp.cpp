#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>

#include "udgcut/errors.hpp"
#include "udgcut/solvers.hpp"

namespace udgcut {

namespace {

using Mask = std::uint32_t;

enum class NodeType { leaf, introduce, forget, join };

struct NiceNode {
    NodeType type = NodeType::leaf;
    VertexId vertex = 0;           // introduced / forgotten vertex
    std::vector<VertexId> bag;     // sorted
    std::vector<std::size_t> children;
};

/// Nice decomposition: every node is a leaf (empty bag), introduces or
/// forgets one vertex, or joins two children with identical bags. Nodes are
/// stored children-first and the last node is the root with an empty bag.
class NiceDecomposition {
public:
    NiceDecomposition(const TreeDecomposition& td) {
        if (td.bags.empty()) {
            add({NodeType::leaf, 0, {}, {}});
            return;
        }
        const std::size_t nb = td.bags.size();
        std::vector<std::size_t> parent(nb, nb), order;
        std::vector<bool> seen(nb, false);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            const std::size_t b = q.front();
            q.pop();
            order.push_back(b);
            for (std::size_t c : td.tree[b])
                if (!seen[c]) {
                    seen[c] = true;
                    parent[c] = b;
                    q.push(c);
                }
        }
        std::vector<std::vector<std::size_t>> kids(nb);
        for (std::size_t b : order)
            if (parent[b] != nb) kids[parent[b]].push_back(b);

        std::vector<std::size_t> top(nb);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const std::size_t b = *it;
            const auto& bag = td.bags[b];
            if (kids[b].empty()) {
                top[b] = chain(add({NodeType::leaf, 0, {}, {}}), bag);
                continue;
            }
            std::size_t acc = chain(top[kids[b][0]], bag);
            for (std::size_t i = 1; i < kids[b].size(); ++i) {
                const std::size_t other = chain(top[kids[b][i]], bag);
                acc = add({NodeType::join, 0, bag, {acc, other}});
            }
            top[b] = acc;
        }
        chain(top[0], {});
    }

    const std::vector<NiceNode>& nodes() const { return nodes_; }

private:
    std::size_t add(NiceNode n) {
        nodes_.push_back(std::move(n));
        return nodes_.size() - 1;
    }

    // Forget then introduce one vertex at a time, from node `from` up to `target`.
    std::size_t chain(std::size_t from, const std::vector<VertexId>& target) {
        std::size_t cur = from;
        const std::vector<VertexId> start = nodes_[cur].bag;
        for (VertexId v : start) {
            if (std::binary_search(target.begin(), target.end(), v)) continue;
            std::vector<VertexId> bag = nodes_[cur].bag;
            bag.erase(std::lower_bound(bag.begin(), bag.end(), v));
            cur = add({NodeType::forget, v, std::move(bag), {cur}});
        }
        for (VertexId v : target) {
            if (std::binary_search(start.begin(), start.end(), v)) continue;
            std::vector<VertexId> bag = nodes_[cur].bag;
            bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
            cur = add({NodeType::introduce, v, std::move(bag), {cur}});
        }
        return cur;
    }

    std::vector<NiceNode> nodes_;
};

std::size_t position_of(const std::vector<VertexId>& bag, VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

Mask insert_bit(Mask m, std::size_t pos, Mask bit) {
    const Mask low = m & ((Mask{1} << pos) - 1);
    return ((m >> pos) << (pos + 1)) | (bit << pos) | low;
}

Mask remove_bit(Mask m, std::size_t pos) {
    const Mask low = m & ((Mask{1} << pos) - 1);
    return ((m >> (pos + 1)) << pos) | low;
}

// Neighbours of v inside `bag` (which does not contain v), as a bag mask.
Mask neighbour_mask(const Graph& g, const std::vector<VertexId>& bag, VertexId v) {
    Mask m = 0;
    for (std::size_t i = 0; i < bag.size(); ++i)
        if (g.has_edge(v, bag[i])) m |= Mask{1} << i;
    return m;
}

struct DpResult {
    std::size_t value = 0;
    Side side;
};

DpResult run_dp(const Graph& g, const TreeDecomposition& td, std::size_t max_width, bool want_cut) {
    if (!is_valid_decomposition(g, td)) throw InputError("tree decomposition is not valid for this graph");
    if (td.width() > static_cast<long>(max_width))
        throw WidthLimitError("decomposition width " + std::to_string(td.width()) + " exceeds ceiling " +
                              std::to_string(max_width));
    if (g.vertex_count() == 0) return {};

    const NiceDecomposition nice(td);
    const auto& nodes = nice.nodes();
    std::vector<std::vector<std::int64_t>> table(nodes.size());

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const NiceNode& node = nodes[i];
        const Mask states = Mask{1} << node.bag.size();
        auto& out = table[i];
        out.resize(states);
        switch (node.type) {
            case NodeType::leaf:
                out[0] = 0;
                break;
            case NodeType::introduce: {
                const auto& in = table[node.children[0]];
                const std::size_t pos = position_of(node.bag, node.vertex);
                for (Mask a = 0; a < states; ++a) out[a] = in[remove_bit(a, pos)];
                break;
            }
            case NodeType::forget: {
                const auto& child = nodes[node.children[0]];
                const auto& in = table[node.children[0]];
                const std::size_t pos = position_of(child.bag, node.vertex);
                const Mask nbm = neighbour_mask(g, node.bag, node.vertex);
                for (Mask a = 0; a < states; ++a) {
                    const std::int64_t on0 = in[insert_bit(a, pos, 0)] + std::popcount(nbm & a);
                    const std::int64_t on1 = in[insert_bit(a, pos, 1)] + std::popcount(nbm & ~a & (states - 1));
                    out[a] = std::max(on0, on1);
                }
                break;
            }
            case NodeType::join: {
                const auto& l = table[node.children[0]];
                const auto& r = table[node.children[1]];
                for (Mask a = 0; a < states; ++a) out[a] = l[a] + r[a];
                break;
            }
        }
        if (!want_cut)
            for (std::size_t c : node.children) std::vector<std::int64_t>().swap(table[c]);
    }

    DpResult res;
    res.value = static_cast<std::size_t>(table.back()[0]);
    if (!want_cut) return res;

    // Walk down from the root, fixing each vertex's side where it is forgotten.
    res.side.assign(g.vertex_count(), 0);
    std::vector<std::pair<std::size_t, Mask>> stack{{nodes.size() - 1, 0}};
    while (!stack.empty()) {
        const auto [i, a] = stack.back();
        stack.pop_back();
        const NiceNode& node = nodes[i];
        switch (node.type) {
            case NodeType::leaf:
                break;
            case NodeType::introduce:
                stack.push_back({node.children[0], remove_bit(a, position_of(node.bag, node.vertex))});
                break;
            case NodeType::forget: {
                const auto& child = nodes[node.children[0]];
                const auto& in = table[node.children[0]];
                const std::size_t pos = position_of(child.bag, node.vertex);
                const Mask nbm = neighbour_mask(g, node.bag, node.vertex);
                const std::int64_t on0 = in[insert_bit(a, pos, 0)] + std::popcount(nbm & a);
                const Mask s = on0 == table[i][a] ? 0 : 1;
                res.side[node.vertex] = static_cast<std::uint8_t>(s);
                stack.push_back({node.children[0], insert_bit(a, pos, s)});
                break;
            }
            case NodeType::join:
                stack.push_back({node.children[0], a});
                stack.push_back({node.children[1], a});
                break;
        }
    }
    if (cut_size(g, res.side) != res.value)
        throw ConstructionError("DP traceback does not reproduce the optimum");
    return res;
}

}  // namespace

std::size_t max_cut_treewidth_dp(const Graph& g, const TreeDecomposition& td, std::size_t max_width) {
    return run_dp(g, td, max_width, false).value;
}

Cut max_cut_treewidth_dp_with_cut(const Graph& g, const TreeDecomposition& td, std::size_t max_width) {
    DpResult r = run_dp(g, td, max_width, true);
    return Cut{std::move(r.side), r.value};
}

Cut max_cut(const Graph& g, const SolveOptions& opts) {
    const bool brute = opts.method == SolveMethod::brute ||
                       (opts.method == SolveMethod::automatic && g.vertex_count() <= opts.brute_limit);
    if (brute) return max_cut_bruteforce(g, {opts.brute_limit, opts.threads});
    return max_cut_treewidth_dp_with_cut(g, greedy_tree_decomposition(g), opts.max_width);
}

}  // namespace udgcut
