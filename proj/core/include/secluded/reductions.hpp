#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "secluded/extensions.hpp"
#include "secluded/instance.hpp"

namespace secluded {

// One applied rule. Reduced vertex v came from old_of_new[v] (-1 for vertices the rule
// created). If a reduced solution contains every vertex of an expansion's trigger, the
// trigger is replaced by the restore set of old ids.
struct TraceRecord {
    int rule = 0;
    std::vector<int> old_of_new;
    std::vector<std::pair<VertexSet, VertexSet>> expansions;
};

struct ReductionTrace {
    BoundariedInstance original;
    std::vector<TraceRecord> records;
};

enum class RuleOutcome { Applied, NotApplicable, Infeasible };

struct RuleResult {
    RuleOutcome outcome = RuleOutcome::NotApplicable;
    BoundariedInstance instance;       // unchanged unless Applied
    std::optional<TraceRecord> record; // only for rules that change the vertex set
};

// Components of G - (B u T), each sorted, ordered by smallest member.
std::vector<VertexSet> outside_components(const BoundariedInstance& inst);

// Signature of the extension (G[Q], E_BQ) over the base G[N(Q)], in ids of inst.graph.
ExtensionSignature component_signature(const Digraph& g, const VertexSet& q);

RuleResult rule1_extend_in_out(const BoundariedInstance& inst);
RuleResult rule2_no_sources_or_sinks(const BoundariedInstance& inst);
RuleResult rule3_remove_out(const BoundariedInstance& inst);
RuleResult rule4_merge_twins(const BoundariedInstance& inst);
RuleResult rule5_scc_twins(const BoundariedInstance& inst);
RuleResult rule6_compress(const BoundariedInstance& inst);

RuleResult apply_rule(int rule, const BoundariedInstance& inst);

struct ReduceResult {
    bool infeasible = false;
    BoundariedInstance instance;
    ReductionTrace trace;
    int applications = 0;
};

// Bit r-1 of rules enables rule r.
constexpr unsigned kAllRules = 0b111111;

ReduceResult reduce_exhaustively(const BoundariedInstance& inst, unsigned rules = kAllRules);

VertexSet lift_set(const ReductionTrace& trace, const VertexSet& s);
VertexSet lift_set(const TraceRecord& record, const VertexSet& s);

// Total neighbourhood and weight are recomputed in the original graph.
Solution lift_solution(const ReductionTrace& trace, const Solution& sol);

} // namespace secluded
