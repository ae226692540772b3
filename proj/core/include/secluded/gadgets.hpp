#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "secluded/instance.hpp"

namespace secluded {

// Simple undirected graph; edges stored as sorted (u < v) pairs.
struct UndirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

// Normalizes and validates; self-loops and out-of-range ids throw.
UndirectedGraph make_undirected(int n, std::vector<std::pair<int, int>> edges);

// Brute force: does g contain a clique on k vertices?
bool has_clique(const UndirectedGraph& g, int k);

enum class GadgetKind { Tsscs, FFree, FFreeEdgePath, Dag };

struct Gadget {
    GadgetKind kind = GadgetKind::Tsscs;
    SecludedInstance instance;
    UndirectedGraph source;
    int k = 0;
    // ids in the gadget graph
    VertexSet vertex_ids; // one per vertex of the source graph
    VertexSet edge_ids;   // one per source edge, in edge order
    VertexSet connector;  // s, or the s_e path
};

// Vertices 0..n-1, edge vertices n.., their private out-neighbours after those.
// Total neighbourhood, strong connectivity, k' = k + |E|, w = C(k,2). Rejects k < 3.
Gadget reduce_clique_to_tsscs(const UndirectedGraph& g, int k);

// True iff all edges of f point to one common head.
bool is_inward_star_subgraph(const Digraph& f);

// True iff f is acyclic with out-degrees <= 1 and in-degrees <= 2, the shape of the
// solutions of the edge-path gadget.
bool fits_in_caterpillar(const Digraph& f);

// Out neighbourhood, weakly connected and F-free, k' = k. Ids: source vertices, edge
// vertices, then s (or the s_e path), then k+2 copies of the first family member.
// Standard mode: w = C(k,2)+1; rejects families with an inward-star subgraph member.
// EdgePath mode: w = C(k,2)+|E|; rejects members fitting the solution shape.
Gadget reduce_clique_to_ffree(const UndirectedGraph& g, int k, const std::vector<Digraph>& family,
                              bool edge_path = false);

// Standard construction with directed triangles as copies and acyclicity as property.
Gadget reduce_clique_to_dag(const UndirectedGraph& g, int k);

// Source vertices touched by the edge vertices in s.
VertexSet clique_from_solution(const Gadget& gadget, const VertexSet& s);

// The set a k-clique maps to (edge vertices of the clique plus the connector).
VertexSet solution_from_clique(const Gadget& gadget, const VertexSet& clique);

struct FFreeWitness {
    int member = -1;
    std::vector<int> embedding; // embedding[i] = host vertex playing member vertex i
};

// Nothing when g is F-free, otherwise an induced copy.
std::optional<FFreeWitness> check_ffree(const Digraph& g, const std::vector<Digraph>& family);

} // namespace secluded
