#include "secluded/gadgets.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace secluded {

UndirectedGraph make_undirected(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop in undirected graph");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return {n, std::move(edges)};
}

bool has_clique(const UndirectedGraph& g, int k) {
    if (k <= 0) return true;
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    std::vector<int> cur;
    std::function<bool(int)> rec = [&](int from) {
        if (static_cast<int>(cur.size()) == k) return true;
        for (int v = from; v < g.n; ++v) {
            bool ok = true;
            for (int u : cur)
                if (!adj[u][v]) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            if (rec(v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    return rec(0);
}

namespace {

Weight choose2(int k) { return static_cast<Weight>(k) * (k - 1) / 2; }

VertexSet range(int from, int count) {
    VertexSet r(count);
    for (int i = 0; i < count; ++i) r[i] = from + i;
    return r;
}

void check_source(const UndirectedGraph& g, int k) {
    if (k < 2) throw std::invalid_argument("clique reductions need k >= 2");
    for (auto [u, v] : g.edges)
        if (u < 0 || v >= g.n || u >= v) throw std::invalid_argument("undirected graph is not normalized");
}

Gadget ffree_core(const UndirectedGraph& g, int k, const Digraph& copy, Property prop, bool edge_path, GadgetKind kind) {
    const int n = g.n, m = static_cast<int>(g.edges.size());
    const int connectors = edge_path ? m : 1;
    const int base = n + m + connectors;
    const int fs = copy.size();
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        auto [a, b] = g.edges[i];
        edges.emplace_back(n + i, a);
        edges.emplace_back(n + i, b);
        edges.emplace_back(n + i, edge_path ? n + m + i : n + m);
    }
    if (edge_path)
        for (int i = 0; i + 1 < m; ++i) edges.emplace_back(n + m + i, n + m + i + 1);
    for (int c = 0; c < k + 2; ++c) {
        const int off = base + c * fs;
        for (auto [u, v] : copy.edges()) edges.emplace_back(off + u, off + v);
        for (int v = 0; v < n; ++v)
            for (int x = 0; x < fs; ++x) edges.emplace_back(v, off + x);
        for (int d = 0; d < k + 2; ++d) {
            if (d == c) continue;
            for (int x = 0; x < fs; ++x)
                for (int y = 0; y < fs; ++y) edges.emplace_back(off + x, base + d * fs + y);
        }
    }
    Gadget gd;
    gd.kind = kind;
    gd.source = g;
    gd.k = k;
    gd.vertex_ids = range(0, n);
    gd.edge_ids = range(n, m);
    gd.connector = range(n + m, connectors);
    const int total = base + (k + 2) * fs;
    gd.instance = SecludedInstance{Digraph(total, std::move(edges)), Neighborhood::Out, std::move(prop), k,
                                   choose2(k) + static_cast<Weight>(connectors)};
    return gd;
}

} // namespace

Gadget reduce_clique_to_tsscs(const UndirectedGraph& g, int k) {
    check_source(g, k);
    if (k < 3) throw std::invalid_argument("clique-to-tsscs needs k >= 3: with w = 1 any single vertex is a solution");
    const int n = g.n, m = static_cast<int>(g.edges.size());
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j)
            if (i != j) edges.emplace_back(n + i, n + j);
        edges.emplace_back(n + i, n + m + i);
        edges.emplace_back(n + i, g.edges[i].first);
        edges.emplace_back(n + i, g.edges[i].second);
    }
    Gadget gd;
    gd.kind = GadgetKind::Tsscs;
    gd.source = g;
    gd.k = k;
    gd.vertex_ids = range(0, n);
    gd.edge_ids = range(n, m);
    gd.instance = SecludedInstance{Digraph(n + 2 * m, std::move(edges)), Neighborhood::Total,
                                   Property::strongly_connected(), k + m, choose2(k)};
    return gd;
}

bool is_inward_star_subgraph(const Digraph& f) {
    auto edges = f.edges();
    for (auto [u, v] : edges)
        if (v != edges.front().second) return false;
    return true;
}

bool fits_in_caterpillar(const Digraph& f) {
    for (int v = 0; v < f.size(); ++v)
        if (f.out(v).size() > 1 || f.in(v).size() > 2) return false;
    return strong_components(f).size() == static_cast<std::size_t>(f.size());
}

Gadget reduce_clique_to_ffree(const UndirectedGraph& g, int k, const std::vector<Digraph>& family, bool edge_path) {
    check_source(g, k);
    if (family.empty()) throw std::invalid_argument("forbidden family is empty");
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!edge_path && is_inward_star_subgraph(family[i]))
            throw std::invalid_argument("family member " + std::to_string(i) +
                                        " is a subgraph of an inward star; the construction needs none to be");
        if (edge_path && fits_in_caterpillar(family[i]))
            throw std::invalid_argument("family member " + std::to_string(i) +
                                        " can occur inside the edge-path solutions");
    }
    return ffree_core(g, k, family.front(), Property::weakly_connected_ffree(family), edge_path,
                      edge_path ? GadgetKind::FFreeEdgePath : GadgetKind::FFree);
}

Gadget reduce_clique_to_dag(const UndirectedGraph& g, int k) {
    check_source(g, k);
    Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
    return ffree_core(g, k, triangle, Property::weakly_connected_acyclic(), false, GadgetKind::Dag);
}

VertexSet clique_from_solution(const Gadget& gadget, const VertexSet& s) {
    VertexSet r;
    for (std::size_t i = 0; i < gadget.edge_ids.size(); ++i)
        if (contains(s, gadget.edge_ids[i])) {
            r.push_back(gadget.source.edges[i].first);
            r.push_back(gadget.source.edges[i].second);
        }
    return make_set(std::move(r));
}

VertexSet solution_from_clique(const Gadget& gadget, const VertexSet& clique) {
    VertexSet r;
    for (std::size_t i = 0; i < gadget.edge_ids.size(); ++i) {
        auto [a, b] = gadget.source.edges[i];
        if (contains(clique, a) && contains(clique, b)) r.push_back(gadget.edge_ids[i]);
    }
    if (gadget.kind != GadgetKind::Tsscs) r.insert(r.end(), gadget.connector.begin(), gadget.connector.end());
    return make_set(std::move(r));
}

std::optional<FFreeWitness> check_ffree(const Digraph& g, const std::vector<Digraph>& family) {
    VertexSet all(g.size());
    for (int v = 0; v < g.size(); ++v) all[v] = v;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (auto emb = find_induced_copy(g, all, family[i])) return FFreeWitness{static_cast<int>(i), *emb};
    return std::nullopt;
}

} // namespace secluded
