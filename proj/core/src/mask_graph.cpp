#include "secluded/mask_graph.hpp"

#include <stdexcept>

namespace secluded {

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (Vertex v : s) {
        if (v < 0 || v >= kMaskLimit) throw std::invalid_argument("vertex id too large for a 64-bit mask");
        m |= bit(v);
    }
    return m;
}

VertexSet from_mask(Mask m) {
    VertexSet r;
    for (; m; m &= m - 1) r.push_back(lowest(m));
    return r;
}

MaskGraph::MaskGraph(const Digraph& g) : n_(g.size()), out_(g.size(), 0), in_(g.size(), 0), w_(g.weights()) {
    if (n_ > kMaskLimit) throw std::length_error("graph has more than 64 vertices");
    for (auto [u, v] : g.edges()) {
        out_[u] |= bit(v);
        in_[v] |= bit(u);
    }
}

Weight MaskGraph::weight_of(Mask s) const {
    Weight t = 0;
    for (; s; s &= s - 1) t = checked_add(t, w_[lowest(s)]);
    return t;
}

Mask MaskGraph::out_nb(Mask s) const {
    Mask r = 0;
    for (Mask t = s; t; t &= t - 1) r |= out_[lowest(t)];
    return r & ~s;
}

Mask MaskGraph::in_nb(Mask s) const {
    Mask r = 0;
    for (Mask t = s; t; t &= t - 1) r |= in_[lowest(t)];
    return r & ~s;
}

Mask MaskGraph::nb(Neighborhood kind, Mask s) const {
    switch (kind) {
    case Neighborhood::Out: return out_nb(s);
    case Neighborhood::In: return in_nb(s);
    case Neighborhood::Total: return out_nb(s) | in_nb(s);
    }
    return 0;
}

Mask MaskGraph::reach(Mask from, Mask within) const {
    Mask seen = from & within, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (; frontier; frontier &= frontier - 1) next |= out_[lowest(frontier)];
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

Mask MaskGraph::reach_back(Mask from, Mask within) const {
    Mask seen = from & within, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (; frontier; frontier &= frontier - 1) next |= in_[lowest(frontier)];
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

Mask MaskGraph::weak_reach(Mask from, Mask within) const {
    Mask seen = from & within, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (; frontier; frontier &= frontier - 1) next |= und(lowest(frontier));
        frontier = next & within & ~seen;
        seen |= frontier;
    }
    return seen;
}

bool MaskGraph::strongly_connected(Mask s) const {
    if (!s) return false;
    Mask start = s & (~s + 1);
    return reach(start, s) == s && reach_back(start, s) == s;
}

bool MaskGraph::weakly_connected(Mask s) const {
    if (!s) return false;
    return weak_reach(s & (~s + 1), s) == s;
}

std::vector<Mask> MaskGraph::strong_components(Mask s) const {
    std::vector<Mask> comps;
    Mask left = s;
    while (left) {
        Mask start = left & (~left + 1);
        Mask c = reach(start, left) & reach_back(start, left);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

std::vector<Mask> MaskGraph::weak_components(Mask s) const {
    std::vector<Mask> comps;
    Mask left = s;
    while (left) {
        Mask c = weak_reach(left & (~left + 1), left);
        comps.push_back(c);
        left &= ~c;
    }
    return comps;
}

bool MaskGraph::independent(Mask s) const {
    for (Mask t = s; t; t &= t - 1)
        if (und(lowest(t)) & s) return false;
    return true;
}

bool MaskGraph::has_independent_set(Mask s, int size) const {
    if (size <= 0) return true;
    if (popcount(s) < size) return false;
    int v = lowest(s);
    Mask rest = s & ~bit(v);
    if (has_independent_set(rest & ~und(v), size - 1)) return true;
    return has_independent_set(rest, size);
}

bool MaskGraph::is_clique(Mask s) const {
    for (Mask t = s; t; t &= t - 1) {
        int v = lowest(t);
        Mask others = s & ~bit(v);
        if ((out_[v] & in_[v] & others) != others) return false;
    }
    return true;
}

bool MaskGraph::is_tournament(Mask s) const {
    for (Mask t = s; t; t &= t - 1) {
        int v = lowest(t);
        Mask others = s & ~bit(v);
        if ((und(v) & others) != others) return false;
        if (out_[v] & in_[v] & others) return false;
    }
    return true;
}

bool MaskGraph::acyclic(Mask s) const {
    // repeatedly peel vertices without in-edges inside s
    Mask left = s;
    while (left) {
        Mask peel = 0;
        for (Mask t = left; t; t &= t - 1) {
            int v = lowest(t);
            if (!(in_[v] & left)) peel |= bit(v);
        }
        if (!peel) return false;
        left &= ~peel;
    }
    return true;
}

} // namespace secluded
