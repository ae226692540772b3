#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secluded/instance.hpp"

namespace secluded {

struct BranchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t max_depth = 0;
    std::uint64_t guesses_tried = 0;
    std::uint64_t leaves = 0;
    std::uint64_t max_children = 0; // widest branching seen at a single node
    std::vector<std::uint64_t> leaves_per_guess;
};

struct BranchResult {
    std::optional<Solution> solution;
    BranchStats stats;
};

// Independent set from which every other vertex is reachable by a directed path of
// length at most two; built by the inductive construction (v, T = V \ N+[v], recurse).
VertexSet two_hop_dominating_is(const Digraph& g);

// Vertices of a shortest u_set -> v path without its first vertex, ending at v.
// Multi-source BFS in increasing id order, so each vertex keeps its smallest-id parent.
// Empty when v is in u_set; throws std::invalid_argument if v is unreachable.
std::vector<Vertex> shor(const Digraph& g, const VertexSet& u_set, Vertex v);

// Maximum-weight k-out-secluded alpha-bounded set (weight >= w), by guessing an
// independent U (|U| <= alpha) and branching inside N+[N+[U]].
BranchResult solve_out_alpha_bounded(const Digraph& g, Weight w, int k, int alpha);

// Total-neighborhood variant working inside N[U].
BranchResult solve_total_alpha_bounded(const Digraph& g, Weight w, int k, int alpha);

// alpha = 1 plus a rule that breaks antiparallel pairs.
BranchResult solve_out_tournament(const Digraph& g, Weight w, int k);

// Secluded clique on a symmetric digraph with the (1,2) branching vector.
BranchResult solve_secluded_clique(const Digraph& g, Weight w, int k);

} // namespace secluded
