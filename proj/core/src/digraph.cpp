#include "secluded/digraph.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace secluded {

Weight checked_add(Weight a, Weight b) {
    if (a > std::numeric_limits<Weight>::max() - b) throw std::overflow_error("weight sum overflows 64 bits");
    return a + b;
}

Digraph::Digraph(int n) : Digraph(n, {}, {}) {}

Digraph::Digraph(int n, std::vector<Edge> edges, std::vector<Weight> weights) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (weights.empty()) weights.assign(n, 1);
    if (static_cast<int>(weights.size()) != n) throw std::invalid_argument("weight vector has wrong length");
    out_.assign(n, {});
    in_.assign(n, {});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    // edges were sorted, so out_ lists are sorted; in_ lists are filled in order of u
    m_ = edges.size();
    weights_ = std::move(weights);
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return contains(out_[u], v);
}

Weight Digraph::weight_of(const VertexSet& s) const {
    Weight total = 0;
    for (Vertex v : s) total = checked_add(total, weights_.at(v));
    return total;
}

std::vector<Edge> Digraph::edges() const {
    std::vector<Edge> r;
    r.reserve(m_);
    for (int u = 0; u < size(); ++u)
        for (Vertex v : out_[u]) r.emplace_back(u, v);
    return r;
}

Digraph Digraph::with_weights(std::vector<Weight> weights) const {
    return Digraph(size(), edges(), std::move(weights));
}

void require_vertices(const Digraph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " not in graph");
}

namespace {

VertexSet collect(const Digraph& g, const VertexSet& s, bool closed, bool use_out, bool use_in) {
    require_vertices(g, s);
    std::vector<char> mark(g.size(), 0);
    for (Vertex v : s) {
        if (use_out) for (Vertex u : g.out(v)) mark[u] = 1;
        if (use_in) for (Vertex u : g.in(v)) mark[u] = 1;
    }
    for (Vertex v : s) mark[v] = closed ? 1 : 0;
    VertexSet r;
    for (int v = 0; v < g.size(); ++v)
        if (mark[v]) r.push_back(v);
    return r;
}

} // namespace

VertexSet out_neighbors(const Digraph& g, const VertexSet& s, bool closed) { return collect(g, s, closed, true, false); }
VertexSet in_neighbors(const Digraph& g, const VertexSet& s, bool closed) { return collect(g, s, closed, false, true); }
VertexSet total_neighbors(const Digraph& g, const VertexSet& s, bool closed) { return collect(g, s, closed, true, true); }

VertexSet neighbors(const Digraph& g, Neighborhood kind, const VertexSet& s, bool closed) {
    switch (kind) {
    case Neighborhood::In: return in_neighbors(g, s, closed);
    case Neighborhood::Out: return out_neighbors(g, s, closed);
    case Neighborhood::Total: return total_neighbors(g, s, closed);
    }
    return {};
}

Digraph induced(const Digraph& g, const VertexSet& s) {
    require_vertices(g, s);
    std::vector<int> pos(g.size(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    std::vector<Weight> w;
    w.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        w.push_back(g.weight(s[i]));
        for (Vertex v : g.out(s[i]))
            if (pos[v] >= 0) edges.emplace_back(static_cast<int>(i), pos[v]);
    }
    return Digraph(static_cast<int>(s.size()), std::move(edges), std::move(w));
}

Digraph reverse(const Digraph& g) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
    return Digraph(g.size(), std::move(edges), g.weights());
}

Digraph symmetrize(const Digraph& g) {
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : g.edges()) edges.emplace_back(v, u);
    return Digraph(g.size(), std::move(edges), g.weights());
}

bool is_symmetric(const Digraph& g) {
    for (auto [u, v] : g.edges())
        if (!g.has_edge(v, u)) return false;
    return true;
}

std::vector<VertexSet> strong_components(const Digraph& g) {
    // iterative Tarjan
    const int n = g.size();
    std::vector<int> index(n, -1), low(n, 0), stack;
    std::vector<char> on_stack(n, 0);
    std::vector<VertexSet> comps;
    int counter = 0;
    std::vector<std::pair<Vertex, std::size_t>> call;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < g.out(v).size()) {
                Vertex w = g.out(v)[i++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            Vertex done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                VertexSet comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
        }
    }
    std::sort(comps.begin(), comps.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return comps;
}

std::vector<VertexSet> weak_components(const Digraph& g) {
    const int n = g.size();
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            Vertex v = comp[i];
            for (const VertexSet* nb : {&g.out(v), &g.in(v)})
                for (Vertex u : *nb)
                    if (!seen[u]) {
                        seen[u] = 1;
                        comp.push_back(u);
                    }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Condensation condensation(const Digraph& g) {
    Condensation c;
    c.components = strong_components(g);
    c.component_of.assign(g.size(), -1);
    for (std::size_t i = 0; i < c.components.size(); ++i)
        for (Vertex v : c.components[i]) c.component_of[v] = static_cast<int>(i);
    std::vector<Edge> edges;
    std::vector<Weight> w;
    for (const auto& comp : c.components) w.push_back(g.weight_of(comp));
    for (auto [u, v] : g.edges())
        if (c.component_of[u] != c.component_of[v]) edges.emplace_back(c.component_of[u], c.component_of[v]);
    c.dag = Digraph(static_cast<int>(c.components.size()), std::move(edges), std::move(w));
    return c;
}

bool is_strongly_connected(const Digraph& g) {
    return g.size() > 0 && strong_components(g).size() == 1;
}

bool is_weakly_connected(const Digraph& g) {
    return g.size() > 0 && weak_components(g).size() == 1;
}

bool is_independent(const Digraph& g, const VertexSet& s) {
    require_vertices(g, s);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) return false;
    return true;
}

AlphaCheck is_alpha_bounded(const Digraph& g, int alpha) {
    if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
    const int need = alpha + 1;
    AlphaCheck res;
    if (g.size() < need) return res;
    VertexSet cur;
    // depth-first over increasing vertex ids, extending only independent prefixes
    auto rec = [&](auto&& self, Vertex from) -> bool {
        if (static_cast<int>(cur.size()) == need) return true;
        for (Vertex v = from; v < g.size(); ++v) {
            if (g.size() - v < need - static_cast<int>(cur.size())) break;
            bool ok = true;
            for (Vertex u : cur)
                if (g.adjacent(u, v)) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(v);
            if (self(self, v + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (rec(rec, 0)) {
        res.bounded = false;
        res.witness = cur;
    }
    return res;
}

} // namespace secluded
