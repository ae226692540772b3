#include "secluded/oracle.hpp"

#include <string>

namespace secluded {

namespace {

// Lexicographic order of the sorted member lists.
bool lex_less(Mask a, Mask b) {
    if (a == b) return false;
    int d = lowest(a ^ b);
    Mask above = d == 63 ? 0 : ~((bit(d) << 1) - 1);
    if (a & bit(d)) return (b & above) != 0;
    return (a & above) == 0;
}

struct Best {
    bool found = false;
    Weight weight = 0;
    Mask set = 0;

    void offer(Weight w, Mask s) {
        if (!found || w > weight || (w == weight && lex_less(s, set))) {
            found = true;
            weight = w;
            set = s;
        }
    }
};

std::optional<Solution> finish(const Best& b, const Digraph& g, Neighborhood kind, Weight target) {
    if (!b.found || b.weight < target) return std::nullopt;
    return make_solution(g, kind, from_mask(b.set));
}

void check_cap(int size, int cap) {
    if (size > cap)
        throw OracleSizeError("oracle refuses " + std::to_string(size) + " vertices (cap " + std::to_string(cap) + ")");
}

} // namespace

std::optional<Solution> brute_force_secluded(const SecludedInstance& inst, OracleOptions opt) {
    const Digraph& g = inst.graph;
    const Property& p = inst.property;
    std::vector<Mask> regions;
    if (p.needs_nonempty() && g.size() <= kMaskLimit) {
        MaskGraph mg(g);
        regions = p.strong() ? mg.strong_components(mg.all()) : mg.weak_components(mg.all());
        int largest = 0;
        for (Mask r : regions) largest = std::max(largest, popcount(r));
        check_cap(largest, opt.cap);
    } else {
        check_cap(g.size(), opt.cap);
        regions.push_back(g.size() == 64 ? ~Mask{0} : bit(g.size()) - 1);
    }
    MaskGraph mg(g);
    std::vector<MaskGraph> fam;
    for (const auto& f : p.family) fam.emplace_back(f);
    Best best;
    for (Mask region : regions) {
        // every submask of region, including the empty one
        Mask s = 0;
        while (true) {
            if (popcount(mg.nb(inst.kind, s)) <= inst.k && holds(mg, p, fam, s)) best.offer(mg.weight_of(s), s);
            if (s == region) break;
            s = (s - region) & region;
        }
    }
    return finish(best, g, inst.kind, inst.w);
}

std::optional<Solution> brute_force_max_tsscs(const BoundariedInstance& inst, OracleOptions opt) {
    const Digraph& g = inst.graph;
    MaskGraph mg(g);
    Mask inc = to_mask(inst.include), exc = to_mask(inst.exclude), bnd = to_mask(inst.boundary);
    Best best;
    if (inc & exc) return std::nullopt;
    for (Mask comp : mg.strong_components(mg.all())) {
        if ((inc & comp) != inc) continue;
        Mask region = comp & ~exc & ~inc;
        check_cap(popcount(region), opt.cap);
        Mask s = 0;
        while (true) {
            Mask cand = s | inc;
            if (cand) {
                Mask nb = mg.nb(Neighborhood::Total, cand);
                if ((nb & ~bnd) == 0 && popcount(nb) <= inst.k && mg.strongly_connected(cand))
                    best.offer(mg.weight_of(cand), cand);
            }
            if (s == region) break;
            s = (s - region) & region;
        }
    }
    return finish(best, g, Neighborhood::Total, 0);
}

std::optional<Solution> brute_force_clique(const Digraph& g, int k, OracleOptions opt) {
    return brute_force_secluded({g, Neighborhood::Total, Property::clique(), k, 0}, opt);
}

std::optional<Solution> brute_force_alpha(const Digraph& g, int alpha, Neighborhood kind, int k, OracleOptions opt) {
    return brute_force_secluded({g, kind, Property::alpha_bounded(alpha), k, 0}, opt);
}

std::optional<Solution> brute_force_tournament(const Digraph& g, Neighborhood kind, int k, OracleOptions opt) {
    return brute_force_secluded({g, kind, Property::tournament(), k, 0}, opt);
}

namespace {

struct ConnectedSearch {
    const SecludedInstance& inst;
    MaskGraph g;
    std::vector<MaskGraph> fam;
    Best best;
    SearchStats* stats;

    bool hereditary_ok(Mask s, int added) const {
        switch (inst.property.kind) {
        case Property::Kind::WeaklyConnectedAlphaBounded: return !g.has_independent_set(s, inst.property.alpha + 1);
        case Property::Kind::WeaklyConnectedFFree:
            for (const auto& f : fam)
                if (find_induced_copy(g, s, f, added)) return false;
            return true;
        case Property::Kind::WeaklyConnectedAcyclic: return g.acyclic(s);
        default: return true;
        }
    }

    void run(Mask s, Mask x, int added) {
        if (stats) ++stats->nodes;
        if (popcount(g.nb(inst.kind, s) & x) > inst.k) return;
        if (added >= 0 && !hereditary_ok(s, added)) return;
        Mask undecided = g.all() & ~s & ~x;
        if (best.found && g.weight_of(s) + g.weight_of(undecided) < best.weight) return;
        Mask frontier = 0;
        for (Mask t = s; t; t &= t - 1) frontier |= g.und(lowest(t));
        frontier &= undecided;
        if (!frontier) {
            if (popcount(g.nb(inst.kind, s)) <= inst.k && holds(g, inst.property, fam, s))
                best.offer(g.weight_of(s), s);
            return;
        }
        int v = lowest(frontier);
        run(s | bit(v), x, v);
        run(s, x | bit(v), -1);
    }
};

} // namespace

std::optional<Solution> search_connected_secluded(const SecludedInstance& inst, SearchStats* stats) {
    if (!inst.property.needs_nonempty())
        throw std::invalid_argument("connected search needs a connectivity property");
    ConnectedSearch cs{inst, MaskGraph(inst.graph), {}, {}, stats};
    for (const auto& f : inst.property.family) cs.fam.emplace_back(f);
    for (int seed = 0; seed < inst.graph.size(); ++seed) {
        Mask before = seed == 0 ? 0 : bit(seed) - 1;
        cs.run(bit(seed), before, seed);
    }
    return finish(cs.best, inst.graph, inst.kind, inst.w);
}

} // namespace secluded
