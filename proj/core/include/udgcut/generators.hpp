#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "udgcut/graph.hpp"

namespace udgcut::gen {

using Rng = std::mt19937_64;

Graph edgeless(std::size_t n);
Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();

/// Erdos-Renyi G(n, p).
Graph random_graph(Rng& rng, std::size_t n, double p);

/// Random graph with every degree <= max_deg: candidate pairs visited in a
/// shuffled order, each kept with probability p if both endpoints still
/// have room.
Graph random_bounded_degree(Rng& rng, std::size_t n, std::size_t max_deg, double p);

}  // namespace udgcut::gen
