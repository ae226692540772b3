#pragma once

// Independent reference implementations for the tests. Nothing here goes through the
// bitmask graph or the library's own oracle.

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <vector>

#include "secluded/digraph.hpp"
#include "secluded/extensions.hpp"
#include "secluded/instance.hpp"

namespace secluded {

inline void PrintTo(const VertexSet& s, std::ostream* os) {
    *os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) *os << (i ? "," : "") << s[i];
    *os << '}';
}

inline void PrintTo(const ExtensionSignature& sig, std::ostream* os) {
    *os << "source";
    for (const auto& s : sig.source) PrintTo(s, os);
    *os << " sink";
    for (const auto& s : sig.sink) PrintTo(s, os);
    *os << " conn";
    for (auto [a, b] : sig.conn) *os << ' ' << a << "->" << b;
}

} // namespace secluded

namespace secluded::testing {

using Rng = std::mt19937_64;

inline Digraph random_digraph(Rng& rng, int n, double p, Weight max_weight = 1) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<Weight> wd(1, max_weight);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) edges.emplace_back(u, v);
    std::vector<Weight> w(n);
    for (auto& x : w) x = wd(rng);
    return Digraph(n, edges, w);
}

inline Digraph random_symmetric(Rng& rng, int n, double p, Weight max_weight = 1) {
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<Weight> wd(1, max_weight);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            }
    std::vector<Weight> w(n);
    for (auto& x : w) x = wd(rng);
    return Digraph(n, edges, w);
}

// Every pair joined; each pair is one-way except with probability `both`.
inline Digraph random_semicomplete(Rng& rng, int n, double both, Weight max_weight = 1) {
    std::bernoulli_distribution coin(0.5), two(both);
    std::uniform_int_distribution<Weight> wd(1, max_weight);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (two(rng)) {
                edges.emplace_back(u, v);
                edges.emplace_back(v, u);
            } else if (coin(rng)) {
                edges.emplace_back(u, v);
            } else {
                edges.emplace_back(v, u);
            }
        }
    std::vector<Weight> w(n);
    for (auto& x : w) x = wd(rng);
    return Digraph(n, edges, w);
}

inline VertexSet subset_of(std::uint64_t bits, int n) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
        if (bits >> i & 1) s.push_back(i);
    return s;
}

// reach[a][b]: b reachable from a using only vertices of s (a, b in s).
inline std::vector<std::vector<bool>> reach_within(const Digraph& g, const VertexSet& s) {
    int n = g.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (Vertex a : s) {
        r[a][a] = true;
        for (Vertex b : s)
            if (g.has_edge(a, b)) r[a][b] = true;
    }
    for (Vertex m : s)
        for (Vertex a : s)
            if (r[a][m])
                for (Vertex b : s)
                    if (r[m][b]) r[a][b] = true;
    return r;
}

inline bool naive_strong(const Digraph& g, const VertexSet& s) {
    if (s.empty()) return false;
    auto r = reach_within(g, s);
    for (Vertex a : s)
        for (Vertex b : s)
            if (!r[a][b]) return false;
    return true;
}

inline bool naive_weak(const Digraph& g, const VertexSet& s) {
    if (s.empty()) return false;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(v, u);
    }
    return naive_strong(Digraph(g.size(), edges), s);
}

inline bool naive_acyclic(const Digraph& g, const VertexSet& s) {
    auto r = reach_within(g, s);
    for (Vertex a : s)
        for (Vertex b : s)
            if (a != b && r[a][b] && r[b][a]) return false;
    return true;
}

inline bool naive_independent(const Digraph& g, const VertexSet& s) {
    for (Vertex a : s)
        for (Vertex b : s)
            if (a != b && g.has_edge(a, b)) return false;
    return true;
}

inline bool naive_alpha(const Digraph& g, const VertexSet& s, int alpha) {
    int m = static_cast<int>(s.size());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
        if (std::popcount(bits) != alpha + 1) continue;
        VertexSet t;
        for (int i = 0; i < m; ++i)
            if (bits >> i & 1) t.push_back(s[i]);
        if (naive_independent(g, t)) return false;
    }
    return true;
}

inline bool naive_clique(const Digraph& g, const VertexSet& s) {
    for (Vertex a : s)
        for (Vertex b : s)
            if (a != b && !g.has_edge(a, b)) return false;
    return true;
}

inline bool naive_tournament(const Digraph& g, const VertexSet& s) {
    for (Vertex a : s)
        for (Vertex b : s)
            if (a < b && g.has_edge(a, b) == g.has_edge(b, a)) return false;
    return true;
}

inline VertexSet naive_neighborhood(const Digraph& g, Neighborhood kind, const VertexSet& s) {
    VertexSet r;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (contains(s, v)) continue;
        for (Vertex x : s) {
            bool out = g.has_edge(x, v), in = g.has_edge(v, x);
            if ((kind == Neighborhood::Out && out) || (kind == Neighborhood::In && in) ||
                (kind == Neighborhood::Total && (out || in))) {
                r.push_back(v);
                break;
            }
        }
    }
    return r;
}

inline bool naive_holds(const Digraph& g, const Property& p, const VertexSet& s) {
    switch (p.kind) {
    case Property::Kind::StronglyConnected: return naive_strong(g, s);
    case Property::Kind::AlphaBounded: return naive_alpha(g, s, p.alpha);
    case Property::Kind::Clique: return naive_clique(g, s);
    case Property::Kind::Tournament: return naive_tournament(g, s);
    case Property::Kind::WeaklyConnectedAlphaBounded: return naive_weak(g, s) && naive_alpha(g, s, p.alpha);
    case Property::Kind::WeaklyConnectedAcyclic: return naive_weak(g, s) && naive_acyclic(g, s);
    case Property::Kind::WeaklyConnectedFFree: break;
    }
    throw std::logic_error("no naive check for this property");
}

// Maximum weight over all feasible sets, or nothing when below w.
inline std::optional<Weight> naive_opt(const Digraph& g, Neighborhood kind, const std::function<bool(const VertexSet&)>& ok,
                                       int k, Weight w = 0) {
    std::optional<Weight> best;
    int n = g.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s = subset_of(bits, n);
        if (static_cast<int>(naive_neighborhood(g, kind, s).size()) > k || !ok(s)) continue;
        Weight x = g.weight_of(s);
        if (!best || x > *best) best = x;
    }
    if (best && *best < w) return std::nullopt;
    return best;
}

inline std::optional<Weight> naive_opt(const SecludedInstance& inst) {
    return naive_opt(inst.graph, inst.kind, [&](const VertexSet& s) { return naive_holds(inst.graph, inst.property, s); },
                     inst.k, inst.w);
}

inline bool naive_tsscs_feasible(const BoundariedInstance& b, const VertexSet& s) {
    if (!is_subset(b.include, s) || intersects(b.exclude, s)) return false;
    VertexSet nb = naive_neighborhood(b.graph, Neighborhood::Total, s);
    return static_cast<int>(nb.size()) <= b.k && is_subset(nb, b.boundary) && naive_strong(b.graph, s);
}

inline std::optional<Weight> naive_tsscs(const BoundariedInstance& b) {
    std::optional<Weight> best;
    int n = b.graph.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s = subset_of(bits, n);
        if (!naive_tsscs_feasible(b, s)) continue;
        Weight x = b.graph.weight_of(s);
        if (!best || x > *best) best = x;
    }
    return best;
}

inline std::optional<Weight> weight_of(const std::optional<Solution>& s) {
    if (!s) return std::nullopt;
    return s->weight;
}

// Random boundaried instance: B, I, O drawn independently with small probabilities.
inline BoundariedInstance random_boundaried(Rng& rng, int n, double p, int k, Weight max_weight, double pb = 0.5,
                                            double pi = 0.1, double po = 0.1) {
    BoundariedInstance b;
    b.graph = random_digraph(rng, n, p, max_weight);
    b.k = k;
    std::uniform_real_distribution<double> u(0, 1);
    for (int v = 0; v < n; ++v) {
        if (u(rng) < pb) b.boundary.push_back(v);
        double r = u(rng);
        if (r < pi) b.include.push_back(v);
        else if (r < pi + po) b.exclude.push_back(v);
    }
    return b;
}

} // namespace secluded::testing
