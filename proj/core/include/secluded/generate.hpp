#pragma once

#include <cstdint>

#include "secluded/digraph.hpp"

namespace secluded {

// Each ordered pair becomes an edge with probability p; weights uniform in [1, max_weight].
Digraph gnp(int n, double p, std::uint64_t seed, Weight max_weight = 1);

// One direction per pair, chosen uniformly.
Digraph random_tournament(int n, std::uint64_t seed, Weight max_weight = 1);

// Symmetric graph: a bidirected clique on `clique_size` random vertices, `k` of its
// outside vertices wired to random clique members, plus sparse symmetric noise.
Digraph planted_clique(int n, int clique_size, int k, std::uint64_t seed);

// `count` bidirected cliques of `block` vertices in a chain, consecutive blocks sharing a
// cut vertex; some edges lose one direction, weights in [1,3].
Digraph chained_cliques(int block, int count, std::uint64_t seed);

} // namespace secluded
