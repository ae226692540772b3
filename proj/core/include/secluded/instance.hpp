#pragma once

#include <optional>
#include <string>
#include <vector>

#include "secluded/digraph.hpp"
#include "secluded/mask_graph.hpp"

namespace secluded {

struct Property {
    enum class Kind {
        StronglyConnected,
        AlphaBounded,
        Clique,
        Tournament,
        WeaklyConnectedAlphaBounded,
        WeaklyConnectedFFree,
        WeaklyConnectedAcyclic,
    };
    Kind kind = Kind::StronglyConnected;
    int alpha = 0;
    std::vector<Digraph> family; // forbidden induced subgraphs for WeaklyConnectedFFree

    static Property strongly_connected() { return {}; }
    static Property alpha_bounded(int a) { return {Kind::AlphaBounded, a, {}}; }
    static Property clique() { return {Kind::Clique, 0, {}}; }
    static Property tournament() { return {Kind::Tournament, 0, {}}; }
    static Property weakly_connected_alpha(int a) { return {Kind::WeaklyConnectedAlphaBounded, a, {}}; }
    static Property weakly_connected_ffree(std::vector<Digraph> fam) { return {Kind::WeaklyConnectedFFree, 0, std::move(fam)}; }
    static Property weakly_connected_acyclic() { return {Kind::WeaklyConnectedAcyclic, 0, {}}; }

    // Connectivity properties reject the empty set.
    bool needs_nonempty() const;
    bool strong() const { return kind == Kind::StronglyConnected; }
    bool weak() const;
    std::string name() const;
};

struct SecludedInstance {
    Digraph graph;
    Neighborhood kind = Neighborhood::Total;
    Property property;
    int k = 0;
    Weight w = 0;
};

// Max TSSCS input with boundary terminals.
struct BoundariedInstance {
    Digraph graph;
    VertexSet include;  // I
    VertexSet exclude;  // O
    VertexSet boundary; // B
    VertexSet terminals; // T
    int k = 0;
};

// I = O = T = {} and B = V.
BoundariedInstance plain_boundaried(const Digraph& g, int k);

struct Solution {
    VertexSet set;
    Weight weight = 0;
    VertexSet neighborhood;

    friend bool operator==(const Solution&, const Solution&) = default;
};

Solution make_solution(const Digraph& g, Neighborhood kind, const VertexSet& s);

// Does induced(g, s) have the property?
bool holds(const Digraph& g, const Property& p, const VertexSet& s);
bool holds(const MaskGraph& g, const Property& p, const std::vector<MaskGraph>& family, Mask s);

// Returns a reason when `s` is not a feasible solution of inst (weight target included).
std::optional<std::string> check_solution(const SecludedInstance& inst, const VertexSet& s);
std::optional<std::string> check_solution(const BoundariedInstance& inst, const VertexSet& s);

// Better under the global tie-break: larger weight, then lexicographically smaller set.
bool better(const Solution& a, const Solution& b);
void keep_better(std::optional<Solution>& best, Solution cand);

// Induced copy of f inside g[s]; result[i] is the image of f's vertex i.
// When `forced` >= 0 only embeddings using that vertex are considered.
std::optional<std::vector<int>> find_induced_copy(const MaskGraph& g, Mask s, const MaskGraph& f, int forced = -1);
std::optional<std::vector<int>> find_induced_copy(const Digraph& g, const VertexSet& s, const Digraph& f);

} // namespace secluded
