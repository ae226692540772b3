#include "secluded/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace secluded {

namespace {

VertexSet all_vertices(int n) {
    VertexSet r(n);
    for (int v = 0; v < n; ++v) r[v] = v;
    return r;
}

VertexSet protected_set(const BoundariedInstance& inst) { return set_union(inst.boundary, inst.terminals); }

// Keeps `keep` (ascending) and appends `added` new vertices; extra edges use new ids.
struct Rebuild {
    const BoundariedInstance& inst;
    VertexSet keep;
    std::vector<Weight> added;
    std::vector<Edge> extra;
    std::vector<Weight> weight_override; // by new id, only for kept vertices when nonempty

    std::pair<BoundariedInstance, TraceRecord> run(int rule) const {
        const Digraph& g = inst.graph;
        std::vector<int> new_of(g.size(), -1);
        TraceRecord rec;
        rec.rule = rule;
        for (std::size_t i = 0; i < keep.size(); ++i) {
            new_of[keep[i]] = static_cast<int>(i);
            rec.old_of_new.push_back(keep[i]);
        }
        for (std::size_t i = 0; i < added.size(); ++i) rec.old_of_new.push_back(-1);
        const int n = static_cast<int>(rec.old_of_new.size());
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (new_of[u] >= 0 && new_of[v] >= 0) edges.emplace_back(new_of[u], new_of[v]);
        edges.insert(edges.end(), extra.begin(), extra.end());
        std::vector<Weight> w(n);
        for (std::size_t i = 0; i < keep.size(); ++i) w[i] = g.weight(keep[i]);
        for (std::size_t i = 0; i < weight_override.size(); ++i) w[i] = weight_override[i];
        for (std::size_t i = 0; i < added.size(); ++i) w[keep.size() + i] = added[i];
        auto map = [&](const VertexSet& s) {
            VertexSet r;
            for (Vertex v : s)
                if (new_of[v] >= 0) r.push_back(new_of[v]);
            return r;
        };
        BoundariedInstance out;
        out.graph = Digraph(n, std::move(edges), std::move(w));
        out.include = map(inst.include);
        out.exclude = map(inst.exclude);
        out.boundary = map(inst.boundary);
        out.terminals = map(inst.terminals);
        out.k = inst.k;
        return {out, rec};
    }

    int new_id(Vertex old) const {
        return static_cast<int>(std::lower_bound(keep.begin(), keep.end(), old) - keep.begin());
    }
};

RuleResult unchanged(const BoundariedInstance& inst, RuleOutcome o = RuleOutcome::NotApplicable) {
    return {o, inst, std::nullopt};
}

Extension component_extension(const Digraph& g, const VertexSet& q, VertexSet& base_ids) {
    base_ids = total_neighbors(g, q);
    auto local = [](const VertexSet& s, Vertex v) {
        return static_cast<int>(std::lower_bound(s.begin(), s.end(), v) - s.begin());
    };
    Extension ext{induced(g, base_ids), induced(g, q), {}, {}};
    for (Vertex x : q) {
        for (Vertex y : g.out(x))
            if (!contains(q, y)) ext.from_attachment.emplace_back(local(q, x), local(base_ids, y));
        for (Vertex y : g.in(x))
            if (!contains(q, y)) ext.to_attachment.emplace_back(local(base_ids, y), local(q, x));
    }
    return canonical(std::move(ext));
}

struct Classified {
    VertexSet q;
    bool strong;
    ExtensionSignature sig;
};

// Components disjoint from O with their signatures.
std::vector<Classified> classify(const BoundariedInstance& inst) {
    std::vector<Classified> r;
    for (auto& q : outside_components(inst)) {
        if (intersects(q, inst.exclude)) continue;
        bool sc = is_strongly_connected(induced(inst.graph, q));
        r.push_back({q, sc, component_signature(inst.graph, q)});
    }
    return r;
}

} // namespace

std::vector<VertexSet> outside_components(const BoundariedInstance& inst) {
    VertexSet rest = set_difference(all_vertices(inst.graph.size()), protected_set(inst));
    std::vector<VertexSet> comps;
    for (const auto& c : weak_components(induced(inst.graph, rest))) {
        VertexSet q;
        for (Vertex v : c) q.push_back(rest[v]);
        comps.push_back(std::move(q));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

ExtensionSignature component_signature(const Digraph& g, const VertexSet& q) {
    VertexSet base_ids;
    ExtensionSignature sig = signature(component_extension(g, q, base_ids));
    // base_ids is sorted, so mapping back keeps every list sorted
    for (auto& s : sig.source)
        for (auto& v : s) v = base_ids[v];
    for (auto& s : sig.sink)
        for (auto& v : s) v = base_ids[v];
    for (auto& [a, b] : sig.conn) a = base_ids[a], b = base_ids[b];
    return sig;
}

RuleResult rule1_extend_in_out(const BoundariedInstance& inst) {
    BoundariedInstance out = inst;
    bool changed = false;
    for (const auto& q : outside_components(inst)) {
        VertexSet closed = total_neighbors(inst.graph, q, true);
        bool hits_o = intersects(q, inst.exclude);
        bool hits_i = intersects(closed, inst.include);
        if (hits_o && hits_i) return unchanged(inst, RuleOutcome::Infeasible);
        if (hits_o && !is_subset(closed, out.exclude)) out.exclude = set_union(out.exclude, closed), changed = true;
        if (hits_i && !is_subset(q, out.include)) out.include = set_union(out.include, q), changed = true;
    }
    if (intersects(out.include, out.exclude)) return unchanged(inst, RuleOutcome::Infeasible);
    if (!changed) return unchanged(inst);
    return {RuleOutcome::Applied, out, std::nullopt};
}

RuleResult rule2_no_sources_or_sinks(const BoundariedInstance& inst) {
    BoundariedInstance out = inst;
    bool changed = false;
    for (const auto& c : classify(inst)) {
        if (c.strong) continue;
        auto has_empty = [](const std::vector<VertexSet>& sets) { return !sets.empty() && sets.front().empty(); };
        if (has_empty(c.sig.source) || has_empty(c.sig.sink)) {
            out.exclude = set_union(out.exclude, c.q);
            changed = true;
        }
    }
    if (!changed) return unchanged(inst);
    return {RuleOutcome::Applied, out, std::nullopt};
}

RuleResult rule3_remove_out(const BoundariedInstance& inst) {
    if (rule1_extend_in_out(inst).outcome != RuleOutcome::NotApplicable) return unchanged(inst);
    VertexSet gone = set_difference(inst.exclude, protected_set(inst));
    if (gone.empty()) return unchanged(inst);
    Rebuild rb{inst, set_difference(all_vertices(inst.graph.size()), gone), {}, {}, {}};
    auto [out, rec] = rb.run(3);
    return {RuleOutcome::Applied, out, rec};
}

RuleResult rule4_merge_twins(const BoundariedInstance& inst) {
    auto comps = classify(inst);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].strong) continue;
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            if (comps[j].strong || !(comps[i].sig == comps[j].sig)) continue;
            const VertexSet& q1 = comps[i].q;
            const VertexSet& q2 = comps[j].q;
            Rebuild rb{inst, set_difference(all_vertices(inst.graph.size()), q2), {}, {}, {}};
            rb.weight_override.resize(rb.keep.size());
            for (std::size_t x = 0; x < rb.keep.size(); ++x) rb.weight_override[x] = inst.graph.weight(rb.keep[x]);
            int target = rb.new_id(q1.front());
            rb.weight_override[target] = checked_add(rb.weight_override[target], inst.graph.weight_of(q2));
            auto [out, rec] = rb.run(4);
            VertexSet q1_new;
            for (Vertex v : q1) q1_new.push_back(rb.new_id(v));
            if (intersects(q2, inst.include)) out.include = set_union(out.include, q1_new);
            rec.expansions.emplace_back(q1_new, set_union(q1, q2));
            return {RuleOutcome::Applied, out, rec};
        }
    }
    return unchanged(inst);
}

RuleResult rule5_scc_twins(const BoundariedInstance& inst) {
    auto comps = classify(inst);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (!comps[i].strong) continue;
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            if (!comps[j].strong || !(comps[i].sig == comps[j].sig)) continue;
            const VertexSet& a = comps[i].q;
            const VertexSet& b = comps[j].q;
            bool a_forced = intersects(a, inst.include), b_forced = intersects(b, inst.include);
            // the apex goes to the lighter twin, or to the one not forced into the solution
            bool apex_on_b;
            if (a_forced != b_forced)
                apex_on_b = a_forced;
            else
                apex_on_b = inst.graph.weight_of(a) >= inst.graph.weight_of(b);
            const VertexSet& q2 = apex_on_b ? b : a;
            Rebuild rb{inst, all_vertices(inst.graph.size()), {0}, {}, {}};
            const int apex = inst.graph.size();
            for (Vertex v : q2) rb.extra.emplace_back(v, apex);
            for (Vertex v : out_neighbors(inst.graph, q2)) rb.extra.emplace_back(apex, v);
            auto [out, rec] = rb.run(5);
            return {RuleOutcome::Applied, out, rec};
        }
    }
    return unchanged(inst);
}

RuleResult rule6_compress(const BoundariedInstance& inst) {
    const Digraph& g = inst.graph;
    struct Replacement {
        VertexSet q;
        VertexSet base_ids;
        Extension comp;
    };
    std::vector<Replacement> reps;
    for (const auto& q : outside_components(inst)) {
        if (intersects(q, inst.exclude)) continue;
        if (intersects(q, inst.include) && !is_subset(q, inst.include)) continue;
        Replacement r{q, {}, {}};
        Extension ext = component_extension(g, q, r.base_ids);
        // empty source or sink sets are left to rule 2
        ExtensionSignature sig = signature(ext);
        if ((!sig.source.empty() && sig.source.front().empty()) || (!sig.sink.empty() && sig.sink.front().empty()))
            continue;
        r.comp = compress(ext);
        if (r.comp.attachment.size() < static_cast<int>(q.size())) reps.push_back(std::move(r));
    }
    if (reps.empty()) return unchanged(inst);
    VertexSet gone;
    for (const auto& r : reps) gone = set_union(gone, r.q);
    Rebuild rb{inst, set_difference(all_vertices(g.size()), gone), {}, {}, {}};
    const int kept = static_cast<int>(rb.keep.size());
    std::vector<std::pair<VertexSet, VertexSet>> expansions;
    std::vector<VertexSet> forced;
    for (const auto& r : reps) {
        const int first = kept + static_cast<int>(rb.added.size());
        const int size = r.comp.attachment.size();
        for (int i = 0; i < size; ++i) rb.added.push_back(i == 0 ? g.weight_of(r.q) : 0);
        for (auto [u, v] : r.comp.attachment.edges()) rb.extra.emplace_back(first + u, first + v);
        for (auto [b, d] : r.comp.to_attachment) rb.extra.emplace_back(rb.new_id(r.base_ids[b]), first + d);
        for (auto [d, b] : r.comp.from_attachment) rb.extra.emplace_back(first + d, rb.new_id(r.base_ids[b]));
        VertexSet fresh;
        for (int i = 0; i < size; ++i) fresh.push_back(first + i);
        if (intersects(r.q, inst.include)) forced.push_back(fresh);
        expansions.emplace_back(std::move(fresh), r.q);
    }
    auto [out, rec] = rb.run(6);
    for (const auto& f : forced) out.include = set_union(out.include, f);
    rec.expansions = std::move(expansions);
    return {RuleOutcome::Applied, out, rec};
}

RuleResult apply_rule(int rule, const BoundariedInstance& inst) {
    switch (rule) {
    case 1: return rule1_extend_in_out(inst);
    case 2: return rule2_no_sources_or_sinks(inst);
    case 3: return rule3_remove_out(inst);
    case 4: return rule4_merge_twins(inst);
    case 5: return rule5_scc_twins(inst);
    case 6: return rule6_compress(inst);
    }
    throw std::invalid_argument("unknown reduction rule " + std::to_string(rule));
}

ReduceResult reduce_exhaustively(const BoundariedInstance& inst, unsigned rules) {
    ReduceResult res;
    res.instance = inst;
    res.trace.original = inst;
    auto enabled = [&](int r) { return (rules >> (r - 1)) & 1u; };
    // true when the rule fired; sets res.infeasible on a contradiction
    auto step = [&](int r) {
        if (!enabled(r)) return false;
        RuleResult rr = apply_rule(r, res.instance);
        if (rr.outcome == RuleOutcome::Infeasible) {
            res.infeasible = true;
            return false;
        }
        if (rr.outcome == RuleOutcome::NotApplicable) return false;
        res.instance = std::move(rr.instance);
        if (rr.record) res.trace.records.push_back(std::move(*rr.record));
        ++res.applications;
        return true;
    };
    auto fixpoint = [&](std::initializer_list<int> order) {
        bool progress = true;
        while (progress && !res.infeasible) {
            progress = false;
            for (int r : order) {
                if (step(r)) {
                    progress = true;
                    break;
                }
                if (res.infeasible) return;
            }
        }
    };
    fixpoint({1, 2, 3});
    while (!res.infeasible && step(5)) {}
    fixpoint({1, 2, 3, 4});
    if (!res.infeasible) step(6);
    return res;
}

VertexSet lift_set(const TraceRecord& record, const VertexSet& s) {
    VertexSet out;
    std::vector<char> used(record.old_of_new.size(), 0);
    for (const auto& [trigger, restore] : record.expansions) {
        if (trigger.empty() || !is_subset(trigger, s)) continue;
        for (Vertex v : trigger) used[v] = 1;
        out.insert(out.end(), restore.begin(), restore.end());
    }
    for (Vertex v : s) {
        if (v < 0 || v >= static_cast<int>(record.old_of_new.size()))
            throw std::invalid_argument("vertex " + std::to_string(v) + " not in reduced instance");
        if (!used[v] && record.old_of_new[v] >= 0) out.push_back(record.old_of_new[v]);
    }
    return make_set(std::move(out));
}

VertexSet lift_set(const ReductionTrace& trace, const VertexSet& s) {
    VertexSet cur = s;
    for (auto it = trace.records.rbegin(); it != trace.records.rend(); ++it) cur = lift_set(*it, cur);
    return cur;
}

Solution lift_solution(const ReductionTrace& trace, const Solution& sol) {
    return make_solution(trace.original.graph, Neighborhood::Total, lift_set(trace, sol.set));
}

} // namespace secluded
