#include "secluded/instance.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace secluded {

bool Property::needs_nonempty() const { return kind == Kind::StronglyConnected || weak(); }

bool Property::weak() const {
    return kind == Kind::WeaklyConnectedAlphaBounded || kind == Kind::WeaklyConnectedFFree ||
           kind == Kind::WeaklyConnectedAcyclic;
}

std::string Property::name() const {
    switch (kind) {
    case Kind::StronglyConnected: return "scc";
    case Kind::AlphaBounded: return "alpha:" + std::to_string(alpha);
    case Kind::Clique: return "clique";
    case Kind::Tournament: return "tournament";
    case Kind::WeaklyConnectedAlphaBounded: return "wcalpha:" + std::to_string(alpha);
    case Kind::WeaklyConnectedFFree: return "ffree";
    case Kind::WeaklyConnectedAcyclic: return "dag";
    }
    return "?";
}

BoundariedInstance plain_boundaried(const Digraph& g, int k) {
    BoundariedInstance b;
    b.graph = g;
    b.k = k;
    for (int v = 0; v < g.size(); ++v) b.boundary.push_back(v);
    return b;
}

Solution make_solution(const Digraph& g, Neighborhood kind, const VertexSet& s) {
    return Solution{s, g.weight_of(s), neighbors(g, kind, s)};
}

namespace {

template <class Adj>
bool extend_copy(std::vector<int>& img, std::vector<char>& used, const std::vector<int>& cand, int nf,
                 const Adj& g_edge, const Adj& f_edge) {
    int i = static_cast<int>(img.size());
    if (i == nf) return true;
    for (std::size_t c = 0; c < cand.size(); ++c) {
        if (used[c]) continue;
        int x = cand[c];
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
            if (f_edge(i, j) != g_edge(x, img[j])) ok = false;
            if (f_edge(j, i) != g_edge(img[j], x)) ok = false;
        }
        if (!ok) continue;
        used[c] = 1;
        img.push_back(x);
        if (extend_copy(img, used, cand, nf, g_edge, f_edge)) return true;
        img.pop_back();
        used[c] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_induced_copy(const MaskGraph& g, Mask s, const MaskGraph& f, int forced) {
    const int nf = f.size();
    if (nf == 0) return std::vector<int>{};
    if (popcount(s) < nf) return std::nullopt;
    if (forced >= 0 && !(s & bit(forced))) return std::nullopt;
    std::vector<int> cand = [&] {
        std::vector<int> c;
        for (Mask t = s; t; t &= t - 1) c.push_back(lowest(t));
        return c;
    }();
    std::function<bool(int, int)> ge = [&](int a, int b) { return (g.out(a) & bit(b)) != 0; };
    std::function<bool(int, int)> fe = [&](int a, int b) { return (f.out(a) & bit(b)) != 0; };
    std::vector<int> img;
    std::vector<char> used(cand.size(), 0);
    if (forced >= 0) {
        // pin the forced vertex to each position of f in turn
        for (int pos = 0; pos < nf; ++pos) {
            std::vector<int> order;
            order.push_back(pos);
            for (int i = 0; i < nf; ++i)
                if (i != pos) order.push_back(i);
            std::function<bool(int, int)> fo = [&](int a, int b) { return (f.out(order[a]) & bit(order[b])) != 0; };
            img.assign(1, forced);
            std::fill(used.begin(), used.end(), 0);
            for (std::size_t c = 0; c < cand.size(); ++c)
                if (cand[c] == forced) used[c] = 1;
            if (extend_copy(img, used, cand, nf, ge, fo)) {
                std::vector<int> res(nf);
                for (int i = 0; i < nf; ++i) res[order[i]] = img[i];
                return res;
            }
        }
        return std::nullopt;
    }
    if (extend_copy(img, used, cand, nf, ge, fe)) return img;
    return std::nullopt;
}

std::optional<std::vector<int>> find_induced_copy(const Digraph& g, const VertexSet& s, const Digraph& f) {
    require_vertices(g, s);
    const int nf = f.size();
    if (static_cast<int>(s.size()) < nf) return std::nullopt;
    std::function<bool(int, int)> ge = [&](int a, int b) { return g.has_edge(a, b); };
    std::function<bool(int, int)> fe = [&](int a, int b) { return f.has_edge(a, b); };
    std::vector<int> img;
    std::vector<char> used(s.size(), 0);
    if (extend_copy(img, used, s, nf, ge, fe)) return img;
    return std::nullopt;
}

bool holds(const Digraph& g, const Property& p, const VertexSet& s) {
    require_vertices(g, s);
    if (s.empty()) return !p.needs_nonempty();
    if (g.size() <= kMaskLimit) {
        MaskGraph mg(g);
        std::vector<MaskGraph> fam;
        for (const auto& f : p.family) fam.emplace_back(f);
        return holds(mg, p, fam, to_mask(s));
    }
    Digraph h = induced(g, s);
    switch (p.kind) {
    case Property::Kind::StronglyConnected: return is_strongly_connected(h);
    case Property::Kind::AlphaBounded: return is_alpha_bounded(h, p.alpha).bounded;
    case Property::Kind::Clique:
        for (int u = 0; u < h.size(); ++u)
            for (int v = 0; v < h.size(); ++v)
                if (u != v && !h.has_edge(u, v)) return false;
        return true;
    case Property::Kind::Tournament:
        for (int u = 0; u < h.size(); ++u)
            for (int v = u + 1; v < h.size(); ++v)
                if (h.has_edge(u, v) == h.has_edge(v, u)) return false;
        return true;
    case Property::Kind::WeaklyConnectedAlphaBounded:
        return is_weakly_connected(h) && is_alpha_bounded(h, p.alpha).bounded;
    case Property::Kind::WeaklyConnectedFFree: {
        if (!is_weakly_connected(h)) return false;
        VertexSet all;
        for (int v = 0; v < h.size(); ++v) all.push_back(v);
        for (const auto& f : p.family)
            if (find_induced_copy(h, all, f)) return false;
        return true;
    }
    case Property::Kind::WeaklyConnectedAcyclic:
        return is_weakly_connected(h) && strong_components(h).size() == static_cast<std::size_t>(h.size());
    }
    return false;
}

bool holds(const MaskGraph& g, const Property& p, const std::vector<MaskGraph>& family, Mask s) {
    if (!s) return !p.needs_nonempty();
    switch (p.kind) {
    case Property::Kind::StronglyConnected: return g.strongly_connected(s);
    case Property::Kind::AlphaBounded: return !g.has_independent_set(s, p.alpha + 1);
    case Property::Kind::Clique: return g.is_clique(s);
    case Property::Kind::Tournament: return g.is_tournament(s);
    case Property::Kind::WeaklyConnectedAlphaBounded:
        return g.weakly_connected(s) && !g.has_independent_set(s, p.alpha + 1);
    case Property::Kind::WeaklyConnectedFFree:
        if (!g.weakly_connected(s)) return false;
        for (const auto& f : family)
            if (find_induced_copy(g, s, f)) return false;
        return true;
    case Property::Kind::WeaklyConnectedAcyclic: return g.weakly_connected(s) && g.acyclic(s);
    }
    return false;
}

std::optional<std::string> check_solution(const SecludedInstance& inst, const VertexSet& s) {
    for (Vertex v : s)
        if (!inst.graph.has_vertex(v)) return "vertex " + std::to_string(v) + " not in graph";
    if (make_set(s) != s) return "solution set is not sorted and duplicate-free";
    if (!holds(inst.graph, inst.property, s)) return "property " + inst.property.name() + " violated";
    auto nb = neighbors(inst.graph, inst.kind, s);
    if (static_cast<int>(nb.size()) > inst.k)
        return "neighborhood has " + std::to_string(nb.size()) + " vertices, budget is " + std::to_string(inst.k);
    if (inst.graph.weight_of(s) < inst.w) return "weight below target";
    return std::nullopt;
}

std::optional<std::string> check_solution(const BoundariedInstance& inst, const VertexSet& s) {
    for (Vertex v : s)
        if (!inst.graph.has_vertex(v)) return "vertex " + std::to_string(v) + " not in graph";
    if (make_set(s) != s) return "solution set is not sorted and duplicate-free";
    if (!is_subset(inst.include, s)) return "misses a forced vertex";
    if (intersects(inst.exclude, s)) return "contains an excluded vertex";
    auto nb = total_neighbors(inst.graph, s);
    if (!is_subset(nb, inst.boundary)) return "neighborhood leaves the boundary set";
    if (static_cast<int>(nb.size()) > inst.k) return "neighborhood exceeds budget";
    if (!holds(inst.graph, Property::strongly_connected(), s)) return "not strongly connected";
    return std::nullopt;
}

bool better(const Solution& a, const Solution& b) {
    if (a.weight != b.weight) return a.weight > b.weight;
    return a.set < b.set;
}

void keep_better(std::optional<Solution>& best, Solution cand) {
    if (!best || better(cand, *best)) best = std::move(cand);
}

} // namespace secluded
