#pragma once

#include <cstddef>
#include <vector>

#include "udgcut/graph.hpp"

namespace udgcut {

inline constexpr std::size_t kDefaultBruteLimit = 26;
inline constexpr std::size_t kDefaultWidthCeiling = 12;

struct BruteForceOptions {
    std::size_t limit = kDefaultBruteLimit;  ///< maximum vertex count
    unsigned threads = 1;                    ///< 0 = hardware concurrency
};

/// Exact maximum cut by enumerating the 2^(n-1) assignments with vertex 0
/// on side 0 (Gray-code order, incremental gain). Among optima the
/// lexicographically smallest side vector wins, independent of threading.
/// Throws SizeLimitError above opts.limit.
Cut max_cut_bruteforce(const Graph& g, const BruteForceOptions& opts = {});

/// Exact maximum bisection, same tie-break. Throws ParityError for odd n.
Cut max_bisection_bruteforce(const Graph& g, const BruteForceOptions& opts = {});

struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;  ///< each bag sorted
    std::vector<std::vector<std::size_t>> tree;  ///< adjacency between bags

    /// Largest bag size minus one; -1 with no bags.
    long width() const;
};

/// Checks the three decomposition properties (vertex cover, edge cover,
/// running intersection) and that `tree` is a forest-free tree.
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition from a greedy min-fill elimination ordering (ties broken by
/// degree, then vertex id).
TreeDecomposition greedy_tree_decomposition(const Graph& g);

/// Exact mc(g) by dynamic programming over side assignments of each bag of
/// a nice decomposition derived from `td`. Throws InputError if td is not a
/// decomposition of g and WidthLimitError if td.width() > max_width.
std::size_t max_cut_treewidth_dp(const Graph& g, const TreeDecomposition& td,
                                 std::size_t max_width = kDefaultWidthCeiling);

/// As above, also reconstructing an optimal side assignment.
Cut max_cut_treewidth_dp_with_cut(const Graph& g, const TreeDecomposition& td,
                                  std::size_t max_width = kDefaultWidthCeiling);

enum class SolveMethod { brute, dp, automatic };

struct SolveOptions {
    SolveMethod method = SolveMethod::automatic;
    std::size_t brute_limit = kDefaultBruteLimit;
    std::size_t max_width = kDefaultWidthCeiling;
    unsigned threads = 1;
};

/// Brute force up to brute_limit vertices under `automatic`, DP beyond.
Cut max_cut(const Graph& g, const SolveOptions& opts = {});

}  // namespace udgcut
