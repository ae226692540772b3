#include "secluded/recursive.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <random>
#include <stdexcept>

#include "secluded/oracle.hpp"
#include "secluded/reductions.hpp"

namespace secluded {

std::uint64_t complementation_count(int terminals, int k) {
    if (terminals < 0 || k < 0) throw std::invalid_argument("negative terminal count or budget");
    // sum over |X| = j of C(t,j) * 2^{t-j} * 2^{j^2}
    std::uint64_t sum = 0, binom = 1;
    for (int j = 0; j <= terminals; ++j) {
        if (j * j + (terminals - j) >= 63) throw std::overflow_error("complementation count overflows");
        sum += binom * (std::uint64_t{1} << (terminals - j)) * (std::uint64_t{1} << (j * j));
        binom = binom * (terminals - j) / (j + 1);
    }
    return sum * static_cast<std::uint64_t>(k + 1);
}

namespace {

// Every (X, Y, Z, R) with k' = k.
void for_each_group(const BoundariedInstance& inst, const std::function<void(const Complementation&)>& fn) {
    const VertexSet& t = inst.terminals;
    const int nt = static_cast<int>(t.size());
    std::uint64_t codes = 1;
    for (int i = 0; i < nt; ++i) codes *= 3;
    for (std::uint64_t code = 0; code < codes; ++code) {
        Complementation c;
        c.k_prime = inst.k;
        std::uint64_t rest = code;
        for (int i = 0; i < nt; ++i, rest /= 3) {
            switch (rest % 3) {
            case 0: c.x.push_back(t[i]); break;
            case 1: c.y.push_back(t[i]); break;
            default: c.z.push_back(t[i]); break;
            }
        }
        const int nx = static_cast<int>(c.x.size());
        if (nx * nx > 30) throw std::length_error("too many terminals in X to enumerate relations");
        const std::uint64_t relations = std::uint64_t{1} << (nx * nx);
        for (std::uint64_t rm = 0; rm < relations; ++rm) {
            c.r.clear();
            for (int p = 0; p < nx * nx; ++p)
                if (rm >> p & 1) c.r.emplace_back(c.x[p / nx], c.x[p % nx]);
            fn(c);
        }
    }
}

bool lex_smaller(Mask a, Mask b) { return from_mask(a) < from_mask(b); }

struct Candidate {
    bool found = false;
    Weight weight = 0;
    Mask set = 0;

    void offer(Weight w, Mask s) {
        if (!found || w > weight || (w == weight && lex_smaller(s, set))) found = true, weight = w, set = s;
    }
};

// Tracks the best feasible set for every k' <= k of one (X, Y, Z, R) group.
struct GroupBest {
    const MaskGraph& g;
    Mask include, exclude, boundary;
    std::vector<Candidate> by_size; // indexed by neighbourhood size

    void offer(Mask s) {
        if (!s || (include & ~s) || (s & exclude)) return;
        Mask nb = g.nb(Neighborhood::Total, s);
        if (nb & ~boundary) return;
        int m = popcount(nb);
        if (m >= static_cast<int>(by_size.size())) return;
        if (!g.strongly_connected(s)) return;
        by_size[m].offer(g.weight_of(s), s);
    }

    void emit(const Digraph& graph, ComplementationSolutions& out) const {
        Candidate best;
        for (const auto& c : by_size) {
            if (c.found) best.offer(c.weight, c.set);
            if (best.found)
                out.push_back(make_solution(graph, Neighborhood::Total, from_mask(best.set)));
            else
                out.push_back(std::nullopt);
        }
    }
};

std::vector<int> bits_of(Mask m) {
    std::vector<int> r;
    for (; m; m &= m - 1) r.push_back(lowest(m));
    return r;
}

Mask spread(Mask f, const std::vector<int>& idx) {
    Mask r = 0;
    for (; f; f &= f - 1) r |= bit(idx[lowest(f)]);
    return r;
}

} // namespace

void for_each_complementation(const BoundariedInstance& inst, const std::function<void(const Complementation&)>& fn) {
    if (inst.k < 0) throw std::invalid_argument("negative budget");
    for_each_group(inst, [&](const Complementation& group) {
        Complementation c = group;
        for (int kp = 0; kp <= inst.k; ++kp) {
            c.k_prime = kp;
            fn(c);
        }
    });
}

std::vector<Complementation> enumerate_boundary_complementations(const BoundariedInstance& inst) {
    std::vector<Complementation> all;
    for_each_complementation(inst, [&](const Complementation& c) { all.push_back(c); });
    return all;
}

BoundariedInstance materialize(const BoundariedInstance& inst, const Complementation& c) {
    const Digraph& g = inst.graph;
    const int n = g.size();
    std::vector<Edge> edges = g.edges();
    std::vector<Weight> w = g.weights();
    VertexSet us;
    for (std::size_t i = 0; i < c.r.size(); ++i) {
        const int u = n + static_cast<int>(i);
        us.push_back(u);
        w.push_back(0);
        edges.emplace_back(c.r[i].first, u);
        edges.emplace_back(u, c.r[i].second);
        for (Vertex y : c.y) edges.emplace_back(u, y);
    }
    BoundariedInstance out;
    out.graph = Digraph(n + static_cast<int>(c.r.size()), std::move(edges), std::move(w));
    out.include = set_union(set_union(inst.include, c.x), us);
    out.exclude = set_union(set_union(inst.exclude, c.y), c.z);
    out.boundary = inst.boundary;
    out.k = c.k_prime;
    return out;
}

std::vector<Mask> set_family(int n, int a, int b, const SetFamilyMode& mode) {
    if (n < 0 || a < 0 || b < 0) throw std::invalid_argument("negative set family parameter");
    if (n > kMaskLimit) throw std::length_error("set family universe exceeds 64 elements");
    const Mask full = n == 64 ? ~Mask{0} : bit(n) - 1;
    a = std::min(a, n);
    b = std::min(b, n);
    if (b == 0) return {full};
    if (a == 0) return {0};
    if (mode.kind == SetFamilyMode::Kind::Exhaustive) {
        if (n > 20) throw std::length_error("exhaustive set family limited to 20 elements");
        std::vector<Mask> all(std::size_t{1} << n);
        for (std::size_t m = 0; m < all.size(); ++m) all[m] = m;
        return all;
    }
    if (!(mode.failure > 0 && mode.failure < 1)) throw std::invalid_argument("failure probability must be in (0,1)");
    const double p = static_cast<double>(a) / (a + b);
    const double hit = std::pow(p, a) * std::pow(1 - p, b);
    const double draws = std::ceil((n * std::log(3.0) - std::log(mode.failure)) / hit);
    if (draws > double(1 << 24)) throw std::length_error("randomized set family too large");
    std::mt19937_64 rng(mode.seed);
    std::vector<Mask> fam(static_cast<std::size_t>(draws));
    for (auto& m : fam) {
        m = 0;
        for (int i = 0; i < n; ++i)
            if (static_cast<double>(rng() >> 11) * 0x1p-53 < p) m |= bit(i);
    }
    return fam;
}

bool validate_covering(const std::vector<Mask>& family, int n, int a, int b) {
    if (n > 20) throw std::length_error("covering validation limited to 20 elements");
    const Mask full = bit(n) - 1;
    for (Mask am = 0; am <= full; ++am) {
        if (popcount(am) > a) continue;
        std::vector<Mask> holes; // complements of members containing A
        for (Mask f : family)
            if ((f & am) == am) holes.push_back(~f & full & ~am);
        const Mask rest = full & ~am;
        // every B within rest of size <= b must fit inside some hole
        for (Mask bm = rest;; bm = (bm - 1) & rest) {
            if (popcount(bm) <= b) {
                bool ok = false;
                for (Mask h : holes)
                    if ((bm & h) == bm) { ok = true; break; }
                if (!ok) return false;
            }
            if (bm == 0) break;
        }
    }
    return true;
}

ComplementationSolutions solve_unbreakable(const BoundariedInstance& inst, int q, const SetFamilyMode& mode) {
    if (q < 0) throw std::invalid_argument("negative q");
    const int k = inst.k;
    const int s = q + k + 4 * k * k;
    ComplementationSolutions out;
    for_each_group(inst, [&](const Complementation& c) {
        BoundariedInstance mat = materialize(inst, c);
        if (mat.graph.size() > kMaskLimit) throw std::length_error("complementation graph exceeds 64 vertices");
        MaskGraph g(mat.graph);
        GroupBest best{g, to_mask(mat.include), to_mask(mat.exclude), to_mask(mat.boundary), std::vector<Candidate>(k + 1)};

        // small solutions: strong components of F u I'
        Mask universe = g.all() & ~best.include & ~best.exclude;
        std::vector<int> idx = bits_of(universe);
        for (Mask f : set_family(static_cast<int>(idx.size()), s, k, mode)) {
            Mask cand = spread(f, idx) | best.include;
            for (Mask comp : g.strong_components(cand)) best.offer(comp);
        }

        // large solutions: apex c attached to N(C), complement of the closed component of c
        for (Mask comp : g.strong_components(g.all())) {
            Mask nc = g.nb(Neighborhood::Total, comp);
            std::vector<int> gc = bits_of(comp | nc);
            const int m = static_cast<int>(gc.size()); // apex gets index m
            if (mode.kind == SetFamilyMode::Kind::Exhaustive && m + 1 > 20) continue;
            for (Mask f : set_family(m + 1, s + 1, k, mode)) {
                if (!(f >> m & 1)) continue;
                Mask real = spread(f & (bit(m) - 1), gc);
                Mask qc = g.weak_reach(nc & real, real);
                Mask closed = qc | (g.nb(Neighborhood::Total, qc) & (comp | nc)) | nc;
                Mask rest = (comp | nc) & ~closed;
                for (Mask part : g.strong_components(rest)) best.offer(part);
            }
        }
        best.emit(mat.graph, out);
    });
    return out;
}

ComplementationSolutions brute_force_complementations(const BoundariedInstance& inst) {
    ComplementationSolutions out;
    for_each_complementation(inst, [&](const Complementation& c) {
        BoundariedInstance mat = materialize(inst, c);
        out.push_back(brute_force_max_tsscs(mat, OracleOptions{24}));
    });
    return out;
}

bool is_separation(const Digraph& g, const Separation& s) {
    VertexSet all(g.size());
    for (int v = 0; v < g.size(); ++v) all[v] = v;
    if (set_union(s.a, s.b) != all) return false;
    VertexSet only_a = set_difference(s.a, s.b), only_b = set_difference(s.b, s.a);
    for (Vertex u : only_a) {
        for (Vertex v : g.out(u))
            if (contains(only_b, v)) return false;
        for (Vertex v : g.in(u))
            if (contains(only_b, v)) return false;
    }
    return true;
}

namespace {

std::vector<VertexSet> undirected(const Digraph& g) {
    std::vector<VertexSet> adj(g.size());
    for (int v = 0; v < g.size(); ++v) adj[v] = set_union(g.out(v), g.in(v));
    return adj;
}

// Splits the components of G - sep into two groups each larger than q.
std::optional<Separation> balance(const std::vector<VertexSet>& adj, const VertexSet& sep, int q) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1);
    for (Vertex v : sep) comp[v] = -2;
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        VertexSet c{s};
        comp[s] = static_cast<int>(comps.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (Vertex y : adj[c[i]])
                if (comp[y] == -1) comp[y] = comp[s], c.push_back(y);
        comps.push_back(make_set(std::move(c)));
    }
    const int total = n - static_cast<int>(sep.size());
    // reachable[i][x]: some subset of the first i components has size x
    std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(total + 1, 0));
    reach[0][0] = 1;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const int sz = static_cast<int>(comps[i].size());
        for (int x = 0; x <= total; ++x) {
            if (!reach[i][x]) continue;
            reach[i + 1][x] = 1;
            if (x + sz <= total) reach[i + 1][x + sz] = 1;
        }
    }
    for (int x = q + 1; total - x > q; ++x) {
        if (!reach[comps.size()][x]) continue;
        VertexSet side_a, side_b;
        int need = x;
        for (std::size_t i = comps.size(); i-- > 0;) {
            const int sz = static_cast<int>(comps[i].size());
            if (need >= sz && reach[i][need - sz]) {
                side_a.insert(side_a.end(), comps[i].begin(), comps[i].end());
                need -= sz;
            } else {
                side_b.insert(side_b.end(), comps[i].begin(), comps[i].end());
            }
        }
        return Separation{set_union(make_set(side_a), sep), set_union(make_set(side_b), sep)};
    }
    return std::nullopt;
}

// Minimum s-t vertex cut of size <= k by augmenting paths, or nothing.
std::optional<VertexSet> min_vertex_cut(const std::vector<VertexSet>& adj, Vertex s, Vertex t, int k) {
    const int n = static_cast<int>(adj.size());
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(2 * n);
    auto add = [&](int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    };
    const int inf = n + 1;
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, v == s || v == t ? inf : 1);
    for (int u = 0; u < n; ++u)
        for (Vertex v : adj[u]) add(2 * u + 1, 2 * v, inf);
    const int src = 2 * s + 1, dst = 2 * t;
    int flow = 0;
    std::vector<int> via(2 * n);
    auto bfs = [&] {
        std::fill(via.begin(), via.end(), -1);
        std::deque<int> queue{src};
        via[src] = -2;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int e : out[x])
                if (arcs[e].cap > 0 && via[arcs[e].to] == -1) via[arcs[e].to] = e, queue.push_back(arcs[e].to);
        }
        return via[dst] != -1;
    };
    while (bfs()) {
        if (++flow > k) return std::nullopt;
        for (int x = dst; x != src; x = arcs[via[x] ^ 1].to) arcs[via[x]].cap -= 1, arcs[via[x] ^ 1].cap += 1;
    }
    VertexSet cut;
    for (int v = 0; v < n; ++v)
        if (via[2 * v] != -1 && via[2 * v + 1] == -1) cut.push_back(v);
    return cut;
}

} // namespace

SeparationResult find_separation(const Digraph& g, int q, int k, std::uint64_t budget) {
    if (q < 0 || k < 0) throw std::invalid_argument("negative separation parameter");
    const int n = g.size();
    auto adj = undirected(g);
    std::uint64_t work = 0;
    bool exhausted = true;
    VertexSet sep;
    std::function<std::optional<Separation>(int, int)> rec = [&](int from, int size) -> std::optional<Separation> {
        if (static_cast<int>(sep.size()) == size) {
            if (++work > budget) {
                exhausted = false;
                return std::nullopt;
            }
            return balance(adj, sep, q);
        }
        for (int v = from; v < n && exhausted; ++v) {
            sep.push_back(v);
            auto r = rec(v + 1, size);
            sep.pop_back();
            if (r) return r;
        }
        return std::nullopt;
    };
    for (int size = 0; size <= std::min(k, n) && exhausted; ++size)
        if (auto r = rec(0, size)) return {r, true};
    if (exhausted) return {std::nullopt, true};
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (contains(adj[s], t)) continue;
            auto cut = min_vertex_cut(adj, s, t, k);
            if (!cut) continue;
            if (auto r = balance(adj, *cut, q)) return {r, true};
        }
    return {std::nullopt, false};
}

namespace {

struct Driver {
    const RecursiveConfig& cfg;
    RecursiveStats stats;

    ComplementationSolutions directly(const BoundariedInstance& inst) {
        ++stats.unbreakable_solves;
        return solve_unbreakable(inst, cfg.q, cfg.family);
    }

    ComplementationSolutions solve(const BoundariedInstance& inst, int depth) {
        if (depth > cfg.max_depth) throw std::logic_error("recursion depth guard exceeded");
        stats.max_depth = std::max(stats.max_depth, depth);
        const Digraph& g = inst.graph;
        const int n = g.size();
        SeparationResult sr = find_separation(g, cfg.q, inst.k, cfg.separation_budget);
        if (!sr.separation) return directly(inst);
        ++stats.separations_found;
        VertexSet u_side = sr.separation->a, w_side = sr.separation->b;
        auto private_terminals = [&](const VertexSet& w, const VertexSet& u) {
            return static_cast<int>(set_intersection(inst.terminals, set_difference(w, u)).size());
        };
        if (private_terminals(w_side, u_side) > inst.k) std::swap(u_side, w_side);
        if (private_terminals(w_side, u_side) > inst.k) {
            ++stats.fallbacks;
            return directly(inst);
        }

        // restriction to W
        auto local = [&](const VertexSet& s) {
            VertexSet r;
            for (Vertex v : set_intersection(s, w_side))
                r.push_back(static_cast<int>(std::lower_bound(w_side.begin(), w_side.end(), v) - w_side.begin()));
            return r;
        };
        BoundariedInstance child;
        child.graph = induced(g, w_side);
        child.include = local(inst.include);
        child.exclude = local(inst.exclude);
        child.boundary = local(inst.boundary);
        child.terminals = local(set_union(inst.terminals, u_side));
        child.k = inst.k;
        if (child.graph.size() >= n) throw std::logic_error("separation side does not shrink the graph");
        ++stats.recursion_edges;
        ComplementationSolutions inner = solve(child, depth + 1);

        VertexSet reach; // the set called N in the driver description
        for (Vertex v : child.terminals) reach.push_back(w_side[v]);
        {
            std::size_t i = 0;
            for_each_complementation(child, [&](const Complementation& c) {
                const auto& sol = inner[i++];
                if (!sol) return;
                (void)c;
                for (Vertex v : sol->neighborhood)
                    if (v < child.graph.size()) reach.push_back(w_side[v]);
            });
        }
        reach = make_set(std::move(reach));
        BoundariedInstance shrunk = inst;
        shrunk.boundary = set_union(set_intersection(inst.boundary, u_side), set_intersection(inst.boundary, reach));

        ReduceResult red = reduce_exhaustively(shrunk);
        stats.reductions += red.applications;
        if (red.infeasible)
            return ComplementationSolutions(complementation_count(static_cast<int>(inst.terminals.size()), inst.k));
        if (red.instance.graph.size() >= n) {
            if (cfg.stall == RecursiveConfig::Stall::Fail)
                throw std::runtime_error("reduced instance did not shrink");
            ++stats.fallbacks;
            return directly(inst);
        }
        ++stats.recursion_edges;
        ComplementationSolutions reduced = solve(red.instance, depth + 1);

        const int n_red = red.instance.graph.size();
        ComplementationSolutions out;
        std::size_t i = 0;
        for_each_complementation(inst, [&](const Complementation& c) {
            const auto& sol = reduced[i++];
            if (!sol) {
                out.push_back(std::nullopt);
                return;
            }
            VertexSet core, extra;
            for (Vertex v : sol->set) (v < n_red ? core : extra).push_back(v);
            VertexSet lifted = lift_set(red.trace, core);
            for (Vertex v : extra) lifted.push_back(v - n_red + n);
            lifted = make_set(std::move(lifted));
            BoundariedInstance mat = materialize(inst, c);
            if (auto why = check_solution(mat, lifted))
                throw std::logic_error("lifted solution is infeasible: " + *why);
            out.push_back(make_solution(mat.graph, Neighborhood::Total, lifted));
        });
        return out;
    }
};

} // namespace

BoundariedResult solve_boundaried(const BoundariedInstance& inst, const RecursiveConfig& config) {
    if (config.q < 0) throw std::invalid_argument("negative q");
    if (static_cast<int>(inst.terminals.size()) > 2 * inst.k)
        throw std::invalid_argument("more than 2k boundary terminals");
    Driver d{config, {}};
    BoundariedResult r;
    r.solutions = d.solve(inst, 0);
    r.stats = d.stats;
    return r;
}

std::optional<Solution> solve_tsscs(const Digraph& g, Weight w, int k, const RecursiveConfig& config,
                                    RecursiveStats* stats) {
    if (k < 0) throw std::invalid_argument("negative budget");
    BoundariedResult r = solve_boundaried(plain_boundaried(g, k), config);
    if (stats) *stats = r.stats;
    std::optional<Solution> best;
    for (auto& s : r.solutions)
        if (s) keep_better(best, *s);
    if (!best || best->weight < w) return std::nullopt;
    return best;
}

} // namespace secluded
