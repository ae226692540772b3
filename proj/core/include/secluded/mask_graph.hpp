#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "secluded/digraph.hpp"

namespace secluded {

using Mask = std::uint64_t;

inline constexpr int kMaskLimit = 64;

inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

// Word-parallel view of a graph with at most 64 vertices.
class MaskGraph {
public:
    explicit MaskGraph(const Digraph& g);

    int size() const { return n_; }
    Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
    Mask out(int v) const { return out_[v]; }
    Mask in(int v) const { return in_[v]; }
    Mask und(int v) const { return out_[v] | in_[v]; }
    Weight weight(int v) const { return w_[v]; }
    Weight weight_of(Mask s) const;

    Mask out_nb(Mask s) const;
    Mask in_nb(Mask s) const;
    Mask nb(Neighborhood kind, Mask s) const;

    // Vertices of `within` reachable from `from` inside `within` (forward / backward).
    Mask reach(Mask from, Mask within) const;
    Mask reach_back(Mask from, Mask within) const;
    Mask weak_reach(Mask from, Mask within) const;

    bool strongly_connected(Mask s) const;
    bool weakly_connected(Mask s) const;
    std::vector<Mask> strong_components(Mask s) const;
    std::vector<Mask> weak_components(Mask s) const;

    bool independent(Mask s) const;
    // True if s contains an independent set of size alpha+1.
    bool has_independent_set(Mask s, int size) const;
    bool is_clique(Mask s) const;      // every pair joined in both directions
    bool is_tournament(Mask s) const;  // every pair joined in exactly one direction
    bool acyclic(Mask s) const;

private:
    int n_;
    std::vector<Mask> out_, in_;
    std::vector<Weight> w_;
};

} // namespace secluded
