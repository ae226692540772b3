#include "secluded/branching.hpp"

#include <functional>
#include <stdexcept>

namespace secluded {

VertexSet two_hop_dominating_is(const Digraph& g) {
    if (g.size() == 0) throw std::invalid_argument("two-hop dominating set of an empty graph");
    std::vector<char> in_v(g.size(), 0);
    std::function<VertexSet(const VertexSet&)> rec = [&](const VertexSet& vs) -> VertexSet {
        for (Vertex x : vs) in_v[x] = 1;
        Vertex v = vs.front();
        std::vector<char> hit(g.size(), 0);
        hit[v] = 1;
        VertexSet first;
        for (Vertex a : g.out(v))
            if (in_v[a] && !hit[a]) hit[a] = 1, first.push_back(a);
        for (Vertex a : first)
            for (Vertex b : g.out(a))
                if (in_v[b]) hit[b] = 2;
        VertexSet rest; // T = V \ N+[v]
        bool all = true;
        for (Vertex x : vs) {
            if (!hit[x]) all = false;
            if (x != v && !contains(first, x)) rest.push_back(x);
        }
        for (Vertex x : vs) in_v[x] = 0;
        if (all) return {v};
        VertexSet sub = rec(rest);
        for (Vertex t : sub)
            if (g.has_edge(t, v)) return sub;
        sub.push_back(v);
        return make_set(std::move(sub));
    };
    VertexSet all;
    for (int v = 0; v < g.size(); ++v) all.push_back(v);
    return rec(all);
}

namespace {

using Alive = std::vector<char>;

// BFS tree from `src` over alive vertices; parent[x] = -1 for sources, -2 unreached.
std::vector<int> bfs_parents(const Digraph& g, const Alive& alive, const VertexSet& src, bool undirected) {
    std::vector<int> parent(g.size(), -2);
    VertexSet level;
    for (Vertex u : src)
        if (alive[u]) parent[u] = -1, level.push_back(u);
    while (!level.empty()) {
        VertexSet next;
        for (Vertex x : level) {
            auto visit = [&](Vertex y) {
                if (alive[y] && parent[y] == -2) parent[y] = x, next.push_back(y);
            };
            for (Vertex y : g.out(x)) visit(y);
            if (undirected)
                for (Vertex y : g.in(x)) visit(y);
        }
        level = make_set(std::move(next));
    }
    return parent;
}

std::vector<Vertex> path_to(const std::vector<int>& parent, Vertex v) {
    if (parent[v] == -2) throw std::invalid_argument("vertex " + std::to_string(v) + " is unreachable");
    std::vector<Vertex> path;
    for (Vertex x = v; parent[x] != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

VertexSet closed_nb(const Digraph& g, const Alive& alive, const VertexSet& s, bool undirected) {
    VertexSet r = s;
    for (Vertex x : s) {
        for (Vertex y : g.out(x))
            if (alive[y]) r.push_back(y);
        if (undirected)
            for (Vertex y : g.in(x))
                if (alive[y]) r.push_back(y);
    }
    return make_set(std::move(r));
}

VertexSet open_nb(const Digraph& g, const Alive& alive, const VertexSet& s, bool undirected) {
    return set_difference(closed_nb(g, alive, s, undirected), s);
}

// Lexicographically first independent subset of c with `size` members.
std::optional<VertexSet> first_independent(const Digraph& g, const VertexSet& c, int size) {
    VertexSet cur;
    std::function<bool(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == size) return true;
        for (std::size_t i = from; i < c.size(); ++i) {
            if (c.size() - i < size - cur.size()) break;
            bool ok = true;
            for (Vertex u : cur)
                if (g.adjacent(u, c[i])) { ok = false; break; }
            if (!ok) continue;
            cur.push_back(c[i]);
            if (rec(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (rec(0)) return cur;
    return std::nullopt;
}

std::optional<std::pair<Vertex, Vertex>> first_antiparallel(const Digraph& g, const VertexSet& c) {
    for (Vertex a : c)
        for (Vertex b : g.out(a))
            if (b > a && contains(c, b) && g.has_edge(b, a)) return std::make_pair(a, b);
    return std::nullopt;
}

enum class Variant { Out, Total, Tournament };

struct AlphaSolver {
    const Digraph& g;
    int alpha;
    Variant variant;
    BranchStats stats;
    std::optional<Solution> best;
    VertexSet u;
    Alive alive;
    std::uint64_t guess_leaves = 0;

    bool undirected() const { return variant == Variant::Total; }

    void leaf() {
        ++stats.leaves;
        ++guess_leaves;
    }

    void rec(int k, std::uint64_t depth) {
        ++stats.nodes_expanded;
        stats.max_depth = std::max(stats.max_depth, depth);
        VertexSet c = undirected() ? closed_nb(g, alive, u, true)
                                   : closed_nb(g, alive, closed_nb(g, alive, u, false), false);
        VertexSet outside = open_nb(g, alive, c, undirected());
        auto indep = first_independent(g, c, alpha + 1);
        std::optional<std::pair<Vertex, Vertex>> pair;
        if (!indep && variant == Variant::Tournament) pair = first_antiparallel(g, c);
        if (!indep && !pair && static_cast<int>(outside.size()) <= k) {
            keep_better(best, make_solution(g, undirected() ? Neighborhood::Total : Neighborhood::Out, c));
            return leaf();
        }
        VertexSet branch;
        if (indep) {
            if (undirected()) {
                branch = set_difference(*indep, u);
            } else {
                auto parent = bfs_parents(g, alive, u, false);
                for (Vertex x : *indep)
                    for (Vertex y : path_to(parent, x)) branch.push_back(y);
            }
        } else if (pair) {
            auto parent = bfs_parents(g, alive, u, false);
            for (Vertex x : {pair->first, pair->second})
                for (Vertex y : path_to(parent, x)) branch.push_back(y);
        } else {
            auto parent = bfs_parents(g, alive, u, undirected());
            branch = path_to(parent, outside.front());
        }
        branch = make_set(std::move(branch));
        // every branch removes a vertex that would join the neighbourhood
        if (branch.empty() || k == 0) return leaf();
        stats.max_children = std::max<std::uint64_t>(stats.max_children, branch.size());
        for (Vertex v : branch) {
            alive[v] = 0;
            rec(k - 1, depth + 1);
            alive[v] = 1;
        }
    }

    BranchResult run(Weight w, int k) {
        if (alpha < 1) throw std::invalid_argument("alpha must be at least 1");
        if (k < 0) throw std::invalid_argument("negative budget");
        const int n = g.size();
        alive.assign(n, 1);
        // independent U with 1 <= |U| <= alpha, by size then lexicographically
        for (int size = 1; size <= alpha; ++size) {
            VertexSet cur;
            std::function<void(int)> each = [&](int from) {
                if (static_cast<int>(cur.size()) == size) {
                    u = cur;
                    ++stats.guesses_tried;
                    guess_leaves = 0;
                    rec(k, 0);
                    stats.leaves_per_guess.push_back(guess_leaves);
                    return;
                }
                for (int v = from; v < n; ++v) {
                    bool ok = true;
                    for (Vertex x : cur)
                        if (g.adjacent(x, v)) { ok = false; break; }
                    if (!ok) continue;
                    cur.push_back(v);
                    each(v + 1);
                    cur.pop_back();
                }
            };
            each(0);
        }
        if (!best) best = Solution{};
        BranchResult res;
        res.stats = stats;
        if (best->weight >= w) res.solution = best;
        return res;
    }
};

void assert_sound(const BranchResult& r, const SecludedInstance& inst) {
    if (!r.solution) return;
    if (auto why = check_solution(inst, r.solution->set))
        throw std::logic_error("branching solver produced an infeasible set: " + *why);
}

} // namespace

std::vector<Vertex> shor(const Digraph& g, const VertexSet& u_set, Vertex v) {
    require_vertices(g, u_set);
    require_vertices(g, {v});
    Alive alive(g.size(), 1);
    return path_to(bfs_parents(g, alive, u_set, false), v);
}

BranchResult solve_out_alpha_bounded(const Digraph& g, Weight w, int k, int alpha) {
    AlphaSolver s{g, alpha, Variant::Out, {}, {}, {}, {}, 0};
    auto r = s.run(w, k);
    assert_sound(r, {g, Neighborhood::Out, Property::alpha_bounded(alpha), k, w});
    return r;
}

BranchResult solve_total_alpha_bounded(const Digraph& g, Weight w, int k, int alpha) {
    AlphaSolver s{g, alpha, Variant::Total, {}, {}, {}, {}, 0};
    auto r = s.run(w, k);
    assert_sound(r, {g, Neighborhood::Total, Property::alpha_bounded(alpha), k, w});
    return r;
}

BranchResult solve_out_tournament(const Digraph& g, Weight w, int k) {
    AlphaSolver s{g, 1, Variant::Tournament, {}, {}, {}, {}, 0};
    auto r = s.run(w, k);
    assert_sound(r, {g, Neighborhood::Out, Property::tournament(), k, w});
    return r;
}

namespace {

struct CliqueSolver {
    const Digraph& g;
    BranchStats stats;
    std::optional<Solution> best;
    Alive alive;
    Vertex u = 0;
    std::uint64_t guess_leaves = 0;

    void leaf() {
        ++stats.leaves;
        ++guess_leaves;
    }

    VertexSet nb(Vertex v) const {
        VertexSet r;
        for (Vertex x : g.out(v))
            if (alive[x]) r.push_back(x);
        return r;
    }

    void branch(std::initializer_list<std::pair<VertexSet, int>> children, int k, std::uint64_t depth) {
        stats.max_children = std::max<std::uint64_t>(stats.max_children, children.size());
        for (const auto& [del, cost] : children) {
            for (Vertex x : del) alive[x] = 0;
            rec(k - cost, depth + 1);
            for (Vertex x : del) alive[x] = 1;
        }
    }

    void rec(int k, std::uint64_t depth) {
        ++stats.nodes_expanded;
        stats.max_depth = std::max(stats.max_depth, depth);
        if (k < 0) return leaf();
        VertexSet nu = nb(u);
        VertexSet cu = set_union(nu, {u});
        // N'(v) = N(v) \ N[u]
        std::vector<VertexSet> extra(nu.size()), miss(nu.size());
        bool is_clique = true;
        VertexSet outside;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            VertexSet nv = nb(nu[i]);
            extra[i] = set_difference(nv, cu);
            miss[i] = set_difference(set_difference(nu, nv), {nu[i]});
            if (!miss[i].empty()) is_clique = false;
            outside = set_union(outside, extra[i]);
        }
        if (is_clique && static_cast<int>(outside.size()) <= k) {
            keep_better(best, make_solution(g, Neighborhood::Total, cu));
            return leaf();
        }
        auto idx = [&](Vertex v) { return static_cast<std::size_t>(std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()); };
        if (!is_clique) {
            // 1a: some v1 misses two others
            for (std::size_t i = 0; i < nu.size(); ++i)
                if (miss[i].size() >= 2)
                    return branch({{{nu[i]}, 1}, {{miss[i][0], miss[i][1]}, 2}}, k, depth);
            // 1b: a non-adjacent pair without outside neighbors; drop the lighter (larger id on ties)
            for (std::size_t i = 0; i < nu.size(); ++i) {
                if (miss[i].empty() || miss[i][0] < nu[i]) continue;
                std::size_t j = idx(miss[i][0]);
                if (extra[i].empty() && extra[j].empty()) {
                    Vertex a = nu[i], b = nu[j];
                    Vertex drop = g.weight(a) < g.weight(b) ? a : (g.weight(b) < g.weight(a) ? b : std::max(a, b));
                    return branch({{{drop}, 1}}, k, depth);
                }
            }
            // 1c: a non-adjacent pair where v1 has outside neighbors
            for (std::size_t i = 0; i < nu.size(); ++i) {
                if (miss[i].empty() || miss[i][0] < nu[i]) continue;
                std::size_t j = idx(miss[i][0]);
                std::size_t a = extra[i].empty() ? j : i;
                std::size_t b = a == i ? j : i;
                VertexSet second = set_union(extra[a], {nu[b]});
                return branch({{{nu[a]}, 1}, {second, static_cast<int>(second.size())}}, k, depth);
            }
        }
        // 2a
        for (std::size_t i = 0; i < nu.size(); ++i)
            if (extra[i].size() == 1) return branch({{extra[i], 1}}, k, depth);
        // 2b
        for (std::size_t i = 0; i < nu.size(); ++i)
            if (extra[i].size() >= 2)
                return branch({{{nu[i]}, 1}, {extra[i], static_cast<int>(extra[i].size())}}, k, depth);
        leaf();
    }
};

} // namespace

BranchResult solve_secluded_clique(const Digraph& g, Weight w, int k) {
    if (!is_symmetric(g)) throw std::invalid_argument("clique solver needs a symmetric digraph");
    if (k < 0) throw std::invalid_argument("negative budget");
    CliqueSolver s{g, {}, {}, Alive(g.size(), 1)};
    for (Vertex u = 0; u < g.size(); ++u) {
        s.u = u;
        ++s.stats.guesses_tried;
        s.guess_leaves = 0;
        s.rec(k, 0);
        s.stats.leaves_per_guess.push_back(s.guess_leaves);
    }
    if (!s.best) s.best = Solution{};
    BranchResult r;
    r.stats = s.stats;
    if (s.best->weight >= w) r.solution = s.best;
    assert_sound(r, {g, Neighborhood::Total, Property::clique(), k, w});
    return r;
}

} // namespace secluded
